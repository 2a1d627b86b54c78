#pragma once

#include "scf/real.hpp"

#include <gmpxx.h>

#include <array>
#include <ostream>
#include <string>

namespace scf {

/* X^3 + p2 X^2 + p1 X + p0 with rational coefficients. */
struct MonicCubic {
    mpq_class p2, p1, p0;

    bool operator==(MonicCubic const&) const = default;

    bool is_integral() const;
    mpq_class operator()(mpq_class const& x) const;
    /// -F(-X): the minimal polynomial of -a when F is that of a.
    MonicCubic reflect() const;
    /// Coefficients [1, p2, p1, p0] rendered as "p" or "p/q".
    std::array<std::string, 4> coefficient_strings() const;
    /// "X³+X²-80X+125"
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, MonicCubic const& p);

/// f_n(X) = X^3 - n X^2 - (n+3) X - 1
MonicCubic shanks_polynomial(mpz_class const& n);

/* r0 + r1 rho + r2 rho^2 in L_n = Q(rho), rho a root of f_n. */
class FieldElement {
  public:
    FieldElement(mpz_class n, mpq_class r0 = 0, mpq_class r1 = 0, mpq_class r2 = 0);

    static FieldElement rational(mpz_class const& n, mpq_class const& r) { return {n, r}; }
    static FieldElement rho(mpz_class const& n) { return {n, 0, 1}; }
    /// (a0 rho + a1 sigma(rho) + m) / den
    static FieldElement from_shanks(mpz_class const& n, mpz_class const& a0, mpz_class const& a1,
                                    mpz_class const& m, mpz_class const& den);

    mpz_class const& n() const { return n_; }
    std::array<mpq_class, 3> const& coeffs() const { return r_; }
    mpq_class const& operator[](std::size_t i) const { return r_[i]; }

    bool is_zero() const;
    bool is_rational() const { return r_[1] == 0 && r_[2] == 0; }

    FieldElement operator-() const;
    FieldElement& operator+=(FieldElement const& o);
    FieldElement& operator-=(FieldElement const& o);
    FieldElement& operator*=(FieldElement const& o);
    FieldElement& operator*=(mpq_class const& s);
    friend FieldElement operator+(FieldElement a, FieldElement const& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, FieldElement const& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, FieldElement const& b) { return a *= b; }
    friend FieldElement operator*(FieldElement a, mpq_class const& s) { return a *= s; }
    friend FieldElement operator*(mpq_class const& s, FieldElement a) { return a *= s; }
    bool operator==(FieldElement const&) const = default;

    /// Least common denominator of the coordinates and the integer numerators over it.
    mpz_class denominator() const;
    std::array<mpz_class, 3> numerators() const;

    /// Value at a numeric root of f_n.
    Real evaluate(Real const& root) const;

  private:
    void check_same_field(FieldElement const& o) const;

    mpz_class n_;
    std::array<mpq_class, 3> r_;
};

/// "[r0, r1, r2]"
std::ostream& operator<<(std::ostream& os, FieldElement const& a);

/// rho -> rho^2 - (n+1) rho - 2
FieldElement apply_sigma(FieldElement const& a);

/// {a, sigma a, sigma^2 a}
std::array<FieldElement, 3> conjugates(FieldElement const& a);

mpq_class trace(FieldElement const& a);
mpq_class norm(FieldElement const& a);
/// X^3 - e1 X^2 + e2 X - e3 from the symmetric functions of the conjugates.
MonicCubic min_poly(FieldElement const& a);

/// Value of a polynomial at a field element.
FieldElement evaluate(MonicCubic const& p, FieldElement const& a);

struct SymmetricFunctions {
    mpq_class e1, e2, e3;
    bool operator==(SymmetricFunctions const&) const = default;
};

/* Closed forms for eta = r1 rho + r2 rho' + r3:
 *   e1 = n(r1+r2) + 3 r3
 *   e2 = r1 r2 n^2 + 2(r1+r2) r3 n - (r1^2 - r1 r2 + r2^2)(n+3) + 3 r3^2
 *   e3 = r1 r2 r3 n^2 - r1^2 r2 n(n+3) + (r1+r2) r3^2 n - (r1^2 - r1 r2 + r2^2) r3 (n+3)
 *        + r1 r2 (r1 - r2)(n^2+3n+6) + r1^3 + r2^3 + r3^3 - 3 r1^2 r2
 */
SymmetricFunctions lemma42(mpq_class r1, mpq_class r2, mpq_class r3, mpz_class const& n);

/// det [Tr(b_i b_j)]
mpq_class trace_form_disc(FieldElement const& b1, FieldElement const& b2, FieldElement const& b3);

/* The three real roots of f_n, r[0] the largest and r[i+1] = -1/(1 + r[i]).
 * Each is within 2^(8 - bits) of the true root.  Requires bits >= 64.
 */
std::array<Real, 3> numeric_roots(mpz_class const& n, long bits);

}  // namespace scf
