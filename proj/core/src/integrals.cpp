#include "dunklbi/integrals.hpp"

#include <sstream>
#include <stdexcept>

namespace dunklbi {

GammaExpr GammaExpr::from_rational(const Rational& c) {
    GammaExpr out;
    out.coeff_ = c;
    return out;
}

GammaExpr GammaExpr::gamma(const Rational& arg, const Rational& coeff) {
    GammaExpr out;
    out.coeff_ = coeff;
    if (coeff != 0) out.push_gamma(arg, 1);
    return out;
}

void GammaExpr::push_gamma(const Rational& arg, int multiplicity) {
    if (multiplicity == 0) return;
    Rational x = arg;
    // Gamma(x) = (x-1) Gamma(x-1) shifts down; Gamma(x) = Gamma(x+1)/x shifts
    // up. Poles at non-positive integers are rejected.
    if (x <= 0 && x.get_den() == 1)
        throw std::domain_error("GammaExpr: Gamma pole at a non-positive integer");
    const int sign = multiplicity > 0 ? 1 : -1;
    for (int rep = 0; rep < std::abs(multiplicity); ++rep) {
        Rational y = x;
        Rational factor = 1;
        while (y > 1) {
            y -= 1;
            factor *= y;
        }
        while (y <= 0) {
            factor /= y;
            y += 1;
        }
        if (sign > 0)
            coeff_ *= factor;
        else
            coeff_ /= factor;
        if (y != 1) {
            auto& args = sign > 0 ? num_args_ : den_args_;
            args[y] += 1;
        }
    }
    cancel_common();
}

void GammaExpr::cancel_common() {
    for (auto it = num_args_.begin(); it != num_args_.end();) {
        auto jt = den_args_.find(it->first);
        if (jt != den_args_.end()) {
            const int k = std::min(it->second, jt->second);
            it->second -= k;
            jt->second -= k;
            if (jt->second == 0) den_args_.erase(jt);
        }
        if (it->second == 0)
            it = num_args_.erase(it);
        else
            ++it;
    }
}

GammaExpr GammaExpr::operator*(const GammaExpr& rhs) const {
    GammaExpr out;
    out.coeff_ = coeff_ * rhs.coeff_;
    if (out.coeff_ == 0) return out;
    out.num_args_ = num_args_;
    out.den_args_ = den_args_;
    for (const auto& [arg, mult] : rhs.num_args_) out.num_args_[arg] += mult;
    for (const auto& [arg, mult] : rhs.den_args_) out.den_args_[arg] += mult;
    out.cancel_common();
    return out;
}

GammaExpr GammaExpr::scale(const Rational& c) const {
    if (c == 0) return GammaExpr();
    GammaExpr out = *this;
    out.coeff_ *= c;
    return out;
}

GammaExpr GammaExpr::divide(const GammaExpr& rhs) const {
    if (rhs.coeff_ == 0) throw std::invalid_argument("GammaExpr: division by zero");
    GammaExpr out;
    out.coeff_ = coeff_ / rhs.coeff_;
    if (out.coeff_ == 0) return out;
    out.num_args_ = num_args_;
    out.den_args_ = den_args_;
    for (const auto& [arg, mult] : rhs.num_args_) out.den_args_[arg] += mult;
    for (const auto& [arg, mult] : rhs.den_args_) out.num_args_[arg] += mult;
    out.cancel_common();
    return out;
}

bool GammaExpr::same_class(const GammaExpr& rhs) const {
    return num_args_ == rhs.num_args_ && den_args_ == rhs.den_args_;
}

BigFloat GammaExpr::value(int precision_digits) const {
    const long bits = BigFloat::bits_for_digits(precision_digits);
    BigFloat out(coeff_, bits);
    for (const auto& [arg, mult] : num_args_)
        for (int i = 0; i < mult; ++i) out = out * BigFloat::gamma(arg, bits);
    for (const auto& [arg, mult] : den_args_)
        for (int i = 0; i < mult; ++i) out = out / BigFloat::gamma(arg, bits);
    return out;
}

std::string GammaExpr::to_string() const {
    if (coeff_ == 0) return "0";
    std::ostringstream os;
    os << dunklbi::to_string(coeff_);
    for (const auto& [arg, mult] : num_args_)
        for (int i = 0; i < mult; ++i) os << "*G(" << dunklbi::to_string(arg) << ")";
    for (const auto& [arg, mult] : den_args_)
        for (int i = 0; i < mult; ++i) os << "/G(" << dunklbi::to_string(arg) << ")";
    return os.str();
}

GammaSum::GammaSum(GammaExpr term) {
    add(term);
}

void GammaSum::add(const GammaExpr& term) {
    if (term.is_zero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->same_class(term)) {
            const Rational total = it->coeff() + term.coeff();
            if (total == 0)
                terms_.erase(it);
            else
                *it = it->scale(total / it->coeff());
            return;
        }
    }
    terms_.push_back(term);
}

void GammaSum::add(const GammaSum& other) {
    for (const auto& t : other.terms_) add(t);
}

GammaSum GammaSum::scale(const Rational& c) const {
    GammaSum out;
    if (c == 0) return out;
    for (const auto& t : terms_) out.terms_.push_back(t.scale(c));
    return out;
}

BigFloat GammaSum::value(int precision_digits) const {
    BigFloat out(BigFloat::bits_for_digits(precision_digits));
    for (const auto& t : terms_) out = out + t.value(precision_digits);
    return out;
}

std::string GammaSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].to_string();
    }
    return os.str();
}

GammaExpr monomial_sphere_integral(const ExponentVector& a, const ModelParams& params) {
    const int n = params.dimension();
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("monomial_sphere_integral: dimension mismatch");
    Rational total(0);
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0) throw std::invalid_argument("monomial_sphere_integral: negative exponent");
        if (a[i] % 2 != 0) return GammaExpr();  // odd factor integrates to zero
    }
    GammaExpr out = GammaExpr::from_rational(Rational(2));
    for (int i = 0; i < n; ++i) {
        const Rational b = Rational(a[i], 2) + params.mu(i + 1);
        out = out * GammaExpr::gamma(b + Rational(1, 2));
        total += b;
    }
    return out.divide(GammaExpr::gamma(total + Rational(n, 2)));
}

GammaSum inner_product(const LaurentPoly& p, const LaurentPoly& q, const ModelParams& params) {
    if (p.dim() != params.dimension() || q.dim() != params.dimension())
        throw std::invalid_argument("inner_product: dimension mismatch");
    if (!p.is_polynomial() || !q.is_polynomial())
        throw std::invalid_argument("inner_product: inputs must be polynomials");
    GammaSum out;
    ExponentVector e(p.dim());
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            for (int i = 0; i < p.dim(); ++i) e[i] = ea[i] + eb[i];
            out.add(monomial_sphere_integral(e, params).scale(ca * cb));
        }
    }
    return out;
}

std::vector<std::vector<GammaSum>> gram_matrix(const std::vector<LaurentPoly>& basis,
                                               const ModelParams& params) {
    const std::size_t k = basis.size();
    std::vector<std::vector<GammaSum>> out(k, std::vector<GammaSum>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            out[i][j] = inner_product(basis[i], basis[j], params);
            if (i != j) out[j][i] = out[i][j];
        }
    return out;
}

}  // namespace dunklbi
