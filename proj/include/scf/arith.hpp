#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace scf {

struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;

    bool operator==(PrimePower const&) const = default;
};

/* Prime decomposition of a positive integer.  Primes are strictly
 * increasing; the product of prime^exponent is value.
 */
struct Factorization {
    mpz_class value = 1;
    std::vector<PrimePower> factors;

    bool operator==(Factorization const&) const = default;

    /// Product of prime^exponent; equals value for a valid factorization.
    mpz_class product() const;
    /// Product of the distinct primes.
    mpz_class radical() const;
};

/// Deterministic primality test (Miller-Rabin with fixed bases, BPSW above 3.3e24).
bool is_prime(mpz_class const& n);

/* Trial division up to 1e6, then Brent's variant of Pollard rho with a
 * fixed sequence of seeds.  Throws std::invalid_argument for N <= 0.
 */
Factorization factor(mpz_class const& N);

struct CubeFreeSplit {
    mpz_class b;  // cube-free part
    mpz_class c;  // maximal c with c^3 | delta
};

/// delta = b * c^3 with b cube-free.
CubeFreeSplit cube_free_split(mpz_class const& delta);
CubeFreeSplit cube_free_split(Factorization const& f);

struct SquareFreeSplit {
    mpz_class d;
    mpz_class e;
};

/// b = d * e^2, d and e square-free and coprime.  Rejects b that is not cube-free.
SquareFreeSplit square_free_split(mpz_class const& b);

bool is_square_free(mpz_class const& n);

/// Moebius function; rejects n <= 0.
int mobius(mpz_class const& n);

/// Legendre symbol (n/3).
int legendre3(mpz_class const& n);

/// Inverse of a modulo M in [0, M).  Throws not_invertible when gcd(a, M) != 1.
mpz_class mod_inverse(mpz_class const& a, mpz_class const& M);

/// Non-negative residue of a mod m (m > 0).
mpz_class mod(mpz_class const& a, mpz_class const& m);

/// num/den in lowest terms (gmpxx's two-argument constructor does not reduce).
mpq_class make_rational(mpz_class const& num, mpz_class const& den);

/// Number of bits of |x| (0 for x == 0).
std::size_t bit_length(mpz_class const& x);

}  // namespace scf
