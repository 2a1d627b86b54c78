#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace scf {

/* Owning wrapper around an mpfr_t.  Binary operations take the larger of
 * the operand precisions; rounding is to nearest.
 */
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 256);
    Real(long v, mpfr_prec_t prec);
    Real(mpz_class const& v, mpfr_prec_t prec);
    Real(mpq_class const& v, mpfr_prec_t prec);
    Real(Real const& other);
    Real(Real&& other) noexcept;
    Real& operator=(Real const& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer.
    mpz_class round() const;
    /// floor(log2 |x|); a large negative value for zero.
    long log2_floor() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(int digits = 20) const;

    Real& operator+=(Real const& o);
    Real& operator-=(Real const& o);
    Real& operator*=(Real const& o);
    Real& operator/=(Real const& o);
    Real operator-() const;

    friend Real operator+(Real a, Real const& b) { return a += b; }
    friend Real operator-(Real a, Real const& b) { return a -= b; }
    friend Real operator*(Real a, Real const& b) { return a *= b; }
    friend Real operator/(Real a, Real const& b) { return a /= b; }
    friend bool operator<(Real const& a, Real const& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(Real const& a, Real const& b) { return b < a; }

  private:
    mpfr_t v_;
};

Real abs(Real x);
Real sqrt(Real x);
/// cos(2 pi k / m)
Real cos_two_pi_fraction(mpz_class const& k, mpz_class const& m, mpfr_prec_t prec);
/// 2^e at the given precision
Real pow2(long e, mpfr_prec_t prec);

}  // namespace scf
