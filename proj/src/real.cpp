#include "scf/real.hpp"

#include <algorithm>
#include <climits>
#include <memory>

namespace scf {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(mpz_class const& v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(mpq_class const& v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(Real const& other)
{
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(Real const& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

mpz_class Real::round() const
{
    mpz_class r;
    mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
    return r;
}

long Real::log2_floor() const
{
    if (is_zero()) return LONG_MIN / 2;
    return mpfr_get_exp(v_) - 1;
}

std::string Real::str(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(buf, &mpfr_free_str);
    return std::string(buf);
}

namespace {
void widen(mpfr_ptr v, mpfr_prec_t p)
{
    if (mpfr_get_prec(v) < p) mpfr_prec_round(v, p, MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(Real const& o)
{
    widen(v_, o.precision());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(Real const& o)
{
    widen(v_, o.precision());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(Real const& o)
{
    widen(v_, o.precision());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(Real const& o)
{
    widen(v_, o.precision());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real abs(Real x)
{
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real sqrt(Real x)
{
    mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real cos_two_pi_fraction(mpz_class const& k, mpz_class const& m, mpfr_prec_t prec)
{
    // reduce k mod m first so the argument stays in [0, 2 pi)
    mpz_class kk;
    mpz_mod(kk.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    Real x(prec);
    mpfr_const_pi(x.get(), MPFR_RNDN);
    mpfr_mul_z(x.get(), x.get(), kk.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_2ui(x.get(), x.get(), 1, MPFR_RNDN);
    mpfr_div_z(x.get(), x.get(), m.get_mpz_t(), MPFR_RNDN);
    mpfr_cos(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Real pow2(long e, mpfr_prec_t prec)
{
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

}  // namespace scf
