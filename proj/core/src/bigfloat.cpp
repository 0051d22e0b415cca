#include "dunklbi/bigfloat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dunklbi {

long BigFloat::bits_for_digits(int decimal_digits) {
    if (decimal_digits < 1) throw std::invalid_argument("precision must be at least one digit");
    return static_cast<long>(std::ceil(decimal_digits * 3.3219280948873626)) + 32;
}

BigFloat::BigFloat(long prec_bits) {
    mpfr_init2(value_, prec_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& q, long prec_bits) {
    mpfr_init2(value_, prec_bits);
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    value_[0] = other.value_[0];
    other.owned_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        if (owned_) mpfr_clear(value_);
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        owned_ = true;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        if (owned_) mpfr_clear(value_);
        value_[0] = other.value_[0];
        owned_ = true;
        other.owned_ = false;
    }
    return *this;
}

BigFloat::~BigFloat() {
    if (owned_) mpfr_clear(value_);
}

BigFloat BigFloat::pi(long prec_bits) {
    BigFloat out(prec_bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::gamma(const Rational& arg, long prec_bits) {
    BigFloat x(arg, prec_bits);
    BigFloat out(prec_bits);
    mpfr_gamma(out.value_, x.value_, MPFR_RNDN);
    return out;
}

namespace {
long max_prec(const mpfr_t a, const mpfr_t b) {
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}
}  // namespace

BigFloat BigFloat::operator+(const BigFloat& rhs) const {
    BigFloat out(max_prec(value_, rhs.value_));
    mpfr_add(out.value_, value_, rhs.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-(const BigFloat& rhs) const {
    BigFloat out(max_prec(value_, rhs.value_));
    mpfr_sub(out.value_, value_, rhs.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator*(const BigFloat& rhs) const {
    BigFloat out(max_prec(value_, rhs.value_));
    mpfr_mul(out.value_, value_, rhs.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator/(const BigFloat& rhs) const {
    BigFloat out(max_prec(value_, rhs.value_));
    mpfr_div(out.value_, value_, rhs.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    BigFloat out(mpfr_get_prec(value_));
    mpfr_sqrt(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(mpfr_get_prec(value_));
    mpfr_abs(out.value_, value_, MPFR_RNDN);
    return out;
}

int BigFloat::compare(const BigFloat& rhs) const {
    return mpfr_cmp(value_, rhs.value_);
}

long BigFloat::precision_bits() const {
    return mpfr_get_prec(value_);
}

double BigFloat::to_double() const {
    return mpfr_get_d(value_, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return std::string(buf.data());
}

}  // namespace dunklbi
