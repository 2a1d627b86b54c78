#pragma once

#include <gmpxx.h>

#include <array>
#include <ostream>
#include <string>

namespace scf {

/* An element x + y*zeta of Z[zeta], where zeta^2 + zeta + 1 = 0. */
class Eisenstein {
  public:
    Eisenstein() = default;
    Eisenstein(mpz_class x, mpz_class y = 0) : x_(std::move(x)), y_(std::move(y)) {}

    mpz_class const& x() const { return x_; }
    mpz_class const& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_unit() const { return norm() == 1; }

    /// x^2 - xy + y^2
    mpz_class norm() const;
    /// zeta -> zeta^2, i.e. (x - y) - y*zeta
    Eisenstein conj() const;

    Eisenstein operator-() const { return {-x_, -y_}; }
    friend Eisenstein operator+(Eisenstein const& a, Eisenstein const& b);
    friend Eisenstein operator-(Eisenstein const& a, Eisenstein const& b);
    friend Eisenstein operator*(Eisenstein const& a, Eisenstein const& b);
    friend bool operator==(Eisenstein const& a, Eisenstein const& b) = default;

    /// True iff *this divides b in Z[zeta].  Zero divides only zero.
    bool divides(Eisenstein const& b) const;
    /// Exact quotient b / *this; throws std::domain_error if not exact.
    Eisenstein exact_quotient_of(Eisenstein const& b) const;

    std::string str() const;

  private:
    mpz_class x_ = 0;
    mpz_class y_ = 0;
};

std::ostream& operator<<(std::ostream& os, Eisenstein const& a);

struct DivMod {
    Eisenstein quotient;
    Eisenstein remainder;
};

/* Euclidean division with the quotient coordinates rounded to the
 * nearest integer (halves rounded up); norm(remainder) < norm(b).
 */
DivMod divmod(Eisenstein const& a, Eisenstein const& b);

/// A greatest common divisor, unique up to the six units.  Rejects (0, 0).
Eisenstein gcd(Eisenstein const& a, Eisenstein const& b);

Eisenstein pow(Eisenstein base, unsigned long exponent);

/// A_n = n + 3(1 + zeta); norm(A_n) = Delta_n.
Eisenstein shanks_eisenstein(mpz_class const& n);

struct Pair {
    mpz_class a0, a1;

    Eisenstein as_eisenstein() const { return {a0, a1}; }
    Pair operator-() const { return {-a0, -a1}; }
    bool operator==(Pair const&) const = default;
};

std::ostream& operator<<(std::ostream& os, Pair const& p);

/// a0^2 - a0 a1 + a1^2
mpz_class pair_norm(Pair const& p);

/* The six associates {+-a0,+-a1}, {+-a1,-+(a0-a1)}, {+-(a0-a1),+-a0},
 * listed with the upper sign first.
 */
std::array<Pair, 6> unit_orbit(Pair const& p);

/* (a0, a1) -> (-a1, a0 - a1), i.e. multiplication by zeta.  On generators
 * this is the Galois action: generator(rotate(p)) = sigma(generator(p)).
 */
Pair rotate(Pair const& p);

/* Among the six associates, the unique one with 0 <= a0 < a1.  This is the
 * representative whose complex argument lies in (60, 120] degrees.
 */
Pair canonical_associate(Pair const& p);

struct PairSet {
    Pair canonical;
    std::array<Pair, 6> all_six;
};

/* A divisor a0 + a1*zeta of A_n of norm s, built as (1 - zeta)^j * prod
 * pi_i^v_i with pi_i = gcd(p_i, A_n).  Requires s | Delta_n, s > 0, 9 not
 * dividing s and every prime of s equal to 3 or 1 mod 3.  Throws
 * std::invalid_argument on a bad s and verification_failure if the
 * constructed element does not divide A_n.
 */
PairSet find_pair(mpz_class const& n, mpz_class const& s);

}  // namespace scf
