#include "permident/rational.hpp"

#include <cctype>
#include <ostream>

namespace permident {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        has_den = true;
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part))
        throw ParseError("invalid rational \"" + std::string(text) + "\"");
    BigInt num(std::string(num_part), 10);
    if (negative) num = -num;
    if (!has_den) return Rat(num);
    if (!all_digits(den_part))
        throw ParseError("invalid rational \"" + std::string(text) +
                         "\" (denominator must be unsigned digits)");
    BigInt den(std::string(den_part), 10);
    if (sgn(den) == 0)
        throw ParseError("invalid rational \"" + std::string(text) +
                         "\" (zero denominator)");
    return Rat(num, den);
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rat base = *this;
    Rat acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rat::to_string() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

} // namespace permident
