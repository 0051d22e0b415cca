#ifndef DUNKLBI_BIGFLOAT_HPP
#define DUNKLBI_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "dunklbi/rational.hpp"

namespace dunklbi {

// Thin RAII wrapper over an mpfr_t value. Binary precision is fixed per
// value; binary operations carry the larger precision of their operands.
class BigFloat {
  public:
    static long bits_for_digits(int decimal_digits);

    explicit BigFloat(long prec_bits);
    BigFloat(const Rational& q, long prec_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(long prec_bits);
    static BigFloat gamma(const Rational& arg, long prec_bits);

    BigFloat operator+(const BigFloat& rhs) const;
    BigFloat operator-(const BigFloat& rhs) const;
    BigFloat operator*(const BigFloat& rhs) const;
    BigFloat operator/(const BigFloat& rhs) const;
    BigFloat sqrt() const;
    BigFloat abs() const;

    int compare(const BigFloat& rhs) const;
    bool operator<(const BigFloat& rhs) const { return compare(rhs) < 0; }
    bool operator>(const BigFloat& rhs) const { return compare(rhs) > 0; }
    bool operator<=(const BigFloat& rhs) const { return compare(rhs) <= 0; }
    bool operator>=(const BigFloat& rhs) const { return compare(rhs) >= 0; }

    long precision_bits() const;
    double to_double() const;
    std::string to_string(int digits = 20) const;

  private:
    mpfr_t value_;
    bool owned_ = true;
};

}  // namespace dunklbi

#endif
