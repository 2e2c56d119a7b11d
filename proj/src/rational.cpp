#include "apolar/rational.hpp"

#include "apolar/errors.hpp"

#include <cctype>

namespace apolar {

std::string to_string(const Rational& r) {
    return r.str();
}

Rational parse_rational(const std::string& s) {
    // grammar: ['+'|'-'] digits ['/' digits]
    size_t i = 0;
    auto fail = [&]() -> Rational {
        throw ParseError("invalid rational '" + s + "' (expected p or p/q over integers)");
    };
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) return fail();
    Int num(s.substr(num_start, i - num_start));
    Int den = 1;
    if (i < s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) return fail();
        den = Int(s.substr(den_start, i - den_start));
        if (den == 0) throw ParseError("invalid rational '" + s + "': zero denominator");
    }
    if (neg) num = -num;
    return Rational(num, den);
}

Int factorial(int n) {
    Int acc = 1;
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

Int floor_int(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int ceil_int(const Rational& r) {
    return -floor_int(-r);
}

Rational pow_rational(const Rational& base, int exp) {
    Rational acc = 1;
    for (int k = 0; k < exp; ++k) acc *= base;
    return acc;
}

}  // namespace apolar
