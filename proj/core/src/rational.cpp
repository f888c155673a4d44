#include "modspace/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace modspace {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto parse_ll = [](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational literal: '" + s + "'");
        }
        if (pos != s.size()) throw std::invalid_argument("malformed rational literal: '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_ll(text));
    const long long num = parse_ll(text.substr(0, slash));
    const long long den = parse_ll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace modspace
