#include "dunklbi/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dunklbi {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    return make_rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational pochhammer(const Rational& a, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational out = 1;
    Rational term = a;
    for (int i = 0; i < k; ++i) {
        out *= term;
        term += 1;
    }
    return out;
}

Rational factorial_rational(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Rational out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Rational rational_pow(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw std::invalid_argument("inverse power of zero");
    Rational base = e > 0 ? q : Rational(1) / q;
    Rational out = 1;
    for (int i = std::abs(e); i > 0; --i) out *= base;
    return out;
}

}  // namespace dunklbi
