#include "catsize/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <system_error>

namespace catsize {

Angle Angle::from_over_pi(double coeff) {
    return {coeff * std::numbers::pi, coeff};
}

Angle Angle::from_radians(double radians) {
    return {radians, radians / std::numbers::pi};
}

namespace {

double parse_double_strict(std::string_view text, const char* what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(text) + "'");
    return value;
}

} // namespace

Angle parse_angle(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty angle");
    if (text.size() >= 2 && (text.substr(text.size() - 2) == "pi" ||
                             text.substr(text.size() - 2) == "Pi")) {
        std::string_view coeff = text.substr(0, text.size() - 2);
        if (coeff.empty() || coeff == "-" || coeff == "+")
            coeff = (coeff == "-") ? "-1" : "1";
        return Angle::from_over_pi(parse_double_strict(coeff, "angle"));
    }
    return Angle::from_radians(parse_double_strict(text, "angle"));
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string format_angle(const Angle& a) {
    return format_double(a.over_pi) + "pi";
}

NumberDistribution read_distribution_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open '" + path + "'", 0);

    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw CsvError("empty file", 0);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,probability")
        throw CsvError("expected header 'n,probability'", lineno);

    NumberDistribution dist;
    long expected_n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw CsvError("missing comma", lineno);
        long n = 0;
        {
            const std::string_view field(line.data(), comma);
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), n);
            if (ec != std::errc() || ptr != field.data() + field.size())
                throw CsvError("malformed particle count", lineno);
        }
        if (n != expected_n) throw CsvError("rows must list n = 0..N in order", lineno);
        double p = 0.0;
        try {
            p = parse_double_strict(std::string_view(line).substr(comma + 1), "probability");
        } catch (const std::invalid_argument&) {
            throw CsvError("malformed probability", lineno);
        }
        if (!(p >= 0.0)) throw CsvError("probability must be >= 0", lineno);
        dist.probs.push_back(p);
        ++expected_n;
    }
    if (dist.probs.empty()) throw CsvError("no data rows", lineno);
    return dist;
}

void write_distribution_csv(const std::string& path, const NumberDistribution& dist) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "n,probability\n";
    for (std::size_t k = 0; k < dist.probs.size(); ++k)
        out << k << ',' << format_double(dist.probs[k]) << '\n';
}

} // namespace catsize
