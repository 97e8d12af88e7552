#include "engine/rational.hpp"

#include <cctype>

#include "engine/error.hpp"

namespace conic {

std::string rat_str(const Rational& x) {
    const Integer num = numerator(x), den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    auto check_int = [&](const std::string& part, const char* what) {
        if (part.empty()) throw InputError(std::string("rational literal '") + s + "' has empty " + what);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw InputError(std::string("bad rational literal '") + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw InputError(std::string("bad rational literal '") + s + "'");
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s, "numerator");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num, "numerator");
    check_int(den, "denominator");
    const Integer d(den);
    if (d == 0) throw InputError(std::string("zero denominator in '") + s + "'");
    return Rational(Integer(num), d);
}

Rational rat_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0) {
        if (e < 0) throw PropertyError("0 raised to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

} // namespace conic
