#include "locpoly/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "locpoly/errors.hpp"

namespace locpoly {

void validate(const Dataset& d) {
    if (d.x.size() != d.y.size()) throw InvalidInput("dataset: x and y lengths differ");
    if (d.x.empty()) throw InvalidInput("dataset: empty sample");
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        if (!std::isfinite(d.x[i]) || !std::isfinite(d.y[i])) {
            throw InvalidInput("dataset: non-finite value at row " + std::to_string(i + 1));
        }
    }
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw InvalidInput("could not parse number: '" + std::string(s) + "'");
    }
    return v;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

Dataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("csv: missing header");
    const auto header = split_line(line);
    if (header.size() < 2 || header[0] != "x" || header[1] != "y") {
        throw InvalidInput("csv: expected header 'x,y'");
    }
    Dataset d;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() < 2) {
            throw InvalidInput("csv: row " + std::to_string(row) + " has fewer than 2 fields");
        }
        d.x.push_back(parse_double(fields[0]));
        d.y.push_back(parse_double(fields[1]));
    }
    validate(d);
    return d;
}

Dataset read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    return read_csv(in);
}

void write_csv(const Dataset& d, std::ostream& out) {
    out << "x,y\n";
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        out << format_double(d.x[i]) << ',' << format_double(d.y[i]) << '\n';
    }
}

void write_csv_file(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open file for writing: " + path);
    write_csv(d, out);
}

std::vector<double> read_csv_column(std::istream& in, const std::string& column) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("csv: missing header");
    const auto header = split_line(line);
    std::size_t idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == column) {
            idx = i;
            break;
        }
    }
    if (idx == header.size()) throw InvalidInput("csv: no column named '" + column + "'");

    std::vector<double> out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() <= idx) {
            throw InvalidInput("csv: row " + std::to_string(row) + " is too short");
        }
        out.push_back(parse_double(fields[idx]));
    }
    if (out.empty()) throw InvalidInput("csv: column '" + column + "' has no data");
    return out;
}

std::vector<double> read_csv_column_file(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    return read_csv_column(in, column);
}

} // namespace locpoly
