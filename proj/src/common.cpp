#include "slopepanel/errors.hpp"
#include "slopepanel/parse.hpp"
#include "slopepanel/rational.hpp"

#include <charconv>
#include <string>

namespace slopepanel {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroSlope: return "ZeroSlope";
        case ErrorKind::NegativeSlope: return "NegativeSlope";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::RankTooLarge: return "RankTooLarge";
        case ErrorKind::NonIntegerSlope: return "NonIntegerSlope";
        case ErrorKind::NotSequential: return "NotSequential";
        case ErrorKind::InvalidFiltration: return "InvalidFiltration";
        case ErrorKind::NotInNefCone: return "NotInNefCone";
        case ErrorKind::NoChamber: return "NoChamber";
        case ErrorKind::ZeroDegree: return "ZeroDegree";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::ZeroFunctional: return "ZeroFunctional";
        case ErrorKind::UnboundedSlice: return "UnboundedSlice";
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

std::string join(const std::vector<Rational>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += to_string(xs[i]);
    }
    return out;
}

Rational pow(const Rational& base, unsigned exponent) {
    Integer num = boost::multiprecision::pow(Integer(boost::multiprecision::numerator(base)), exponent);
    Integer den = boost::multiprecision::pow(Integer(boost::multiprecision::denominator(base)), exponent);
    return Rational(num, den);
}

namespace detail {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
    std::vector<std::int64_t> out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part));
    return out;
}

}  // namespace detail
}  // namespace slopepanel
