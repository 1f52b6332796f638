#include "eac/rational.hpp"

#include <stdexcept>

namespace eac {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        Integer n;
        if (n.set_str(text, 10) != 0)
            throw std::invalid_argument("malformed integer literal: " + text);
        return Rational(n);
    }
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    return make_rational(num, den);
}

} // namespace eac
