#pragma once

#include <string>
#include <string_view>

#include "catsize/state_model.hpp"

namespace catsize {

// An angle that remembers whether it was given as a multiple of pi, so the
// "<x>pi" suffix form round-trips exactly through parse/print.
struct Angle {
    double radians = 0.0;
    double over_pi = 0.0;

    static Angle from_over_pi(double coeff);
    static Angle from_radians(double radians);
};

// Accepts raw radians ("0.157") or the pi-suffix form ("0.05pi", "-0.25pi").
// Throws std::invalid_argument on malformed input.
Angle parse_angle(std::string_view text);

// Shortest decimal representation that round-trips through double.
std::string format_double(double x);

// Coefficient-of-pi rendering, e.g. 0.05pi.
std::string format_angle(const Angle& a);

// CSV with the exact header "n,probability" and N+1 data rows. Throws
// CsvError carrying the offending 1-based line number.
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

NumberDistribution read_distribution_csv(const std::string& path);
void write_distribution_csv(const std::string& path, const NumberDistribution& dist);

} // namespace catsize
