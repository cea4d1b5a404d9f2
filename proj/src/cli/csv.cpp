#include "hexrwp/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace hexrwp::cli {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t c = 0; c < table.header.size(); ++c) os << (c ? "," : "") << table.header[c];
    os << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << format_double(table.columns[c][r]);
        }
        os << '\n';
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw CsvError("line " + std::to_string(line_no) + ": not a number: '" + s + "'");
    }
    return v;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    CsvTable t;
    std::string line;
    if (!std::getline(is, line) || line.empty()) throw CsvError(path + ": missing header");
    if (line.back() == '\r') line.pop_back();
    t.header = split(line);
    t.columns.assign(t.header.size(), {});
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw CsvError(path + ": line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                           " fields, expected " + std::to_string(t.header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) t.columns[c].push_back(parse_number(cells[c], line_no));
    }
    return t;
}

void write_manifest(const std::string& out_path, const Manifest& entries) {
    const std::string path = out_path + ".manifest";
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace hexrwp::cli
