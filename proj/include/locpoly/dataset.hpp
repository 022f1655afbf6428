#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace locpoly {

// Paired regressor/response sample in observation order.
struct Dataset {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

// Throws InvalidInput on unequal lengths, empty sample, or non-finite values.
void validate(const Dataset& d);

// Shortest decimal representation that round-trips to the same double, so a
// parse -> serialize cycle is byte-identical and reloads are bit-exact.
std::string format_double(double v);
double parse_double(std::string_view s);

// CSV with header "x,y", comma delimiter, '.' decimal point.
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::string& path);
void write_csv(const Dataset& d, std::ostream& out);
void write_csv_file(const Dataset& d, const std::string& path);

// Single named column from a CSV with a header row.
std::vector<double> read_csv_column(std::istream& in, const std::string& column);
std::vector<double> read_csv_column_file(const std::string& path, const std::string& column);

} // namespace locpoly
