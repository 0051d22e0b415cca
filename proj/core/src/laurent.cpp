#include "dunklbi/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dunklbi {

int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentPoly: dimension must be >= 1");
}

LaurentPoly LaurentPoly::zero(int dim) {
    return LaurentPoly(dim);
}

LaurentPoly LaurentPoly::constant(int dim, const Rational& c) {
    LaurentPoly p(dim);
    p.insert_term(ExponentVector(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector exps, const Rational& c) {
    LaurentPoly p(static_cast<int>(exps.size()));
    p.insert_term(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int dim, int axis, int power) {
    LaurentPoly p(dim);
    p.check_axis(axis);
    ExponentVector e(dim, 0);
    e[axis - 1] = power;
    p.insert_term(std::move(e), Rational(1));
    return p;
}

void LaurentPoly::check_axis(int axis) const {
    if (axis < 1 || axis > dim_)
        throw std::invalid_argument("axis index out of range");
}

void LaurentPoly::insert_term(ExponentVector exps, Rational c) {
    if (static_cast<int>(exps.size()) != dim_)
        throw std::invalid_argument("exponent vector length does not match dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPoly::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch in +");
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += -rhs;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch in *");
    LaurentPoly out(dim_);
    ExponentVector e(dim_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly out(dim_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

LaurentPoly LaurentPoly::partial(int axis) const {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        ExponentVector d = e;
        d[i] -= 1;
        out.insert_term(std::move(d), c * e[i]);
    }
    return out;
}

LaurentPoly LaurentPoly::reflect(int axis) const {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, (e[i] % 2 == 0) ? c : -c);
    return out;
}

LaurentPoly LaurentPoly::mul_var(int axis, int power) const {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        ExponentVector d = e;
        d[i] += power;
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

LaurentPoly LaurentPoly::homogeneous_component(int m) const {
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == m) out.terms_.emplace(e, c);
    return out;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int a : e)
            if (a < 0) return false;
    return true;
}

std::optional<int> LaurentPoly::degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int t = total_degree(e);
        if (!d || t > *d) d = t;
    }
    return d;
}

bool LaurentPoly::is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int t = total_degree(e);
        if (!d)
            d = t;
        else if (t != *d)
            return false;
    }
    return true;
}

LaurentPoly LaurentPoly::restrict_var_to_zero(int axis) const {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[i] < 0)
            throw std::domain_error("restriction to zero of a negative power");
        if (e[i] == 0) out.terms_.emplace(e, c);
    }
    return out;
}

bool LaurentPoly::independent_of(int axis) const {
    check_axis(axis);
    const int i = axis - 1;
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << dunklbi::to_string(c);
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            os << "*s" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace dunklbi
