#pragma once

#include "scf/arith.hpp"

#include <gmpxx.h>

namespace scf {

/* Delta_n = n^2 + 3n + 9 = b c^3 = d e^2 c^3, with b cube-free and d, e
 * square-free and coprime.
 */
struct DeltaDecomposition {
    mpz_class n;
    mpz_class delta;
    mpz_class b, c, d, e;
    Factorization factors;  // of delta
};

struct FieldInvariants {
    DeltaDecomposition decomposition;
    int gamma = 1;  // 1 or 9
    mpz_class conductor;
    mpz_class discriminant;
    bool tame = false;
    int prime_count = 0;  // distinct primes of the conductor
    Factorization conductor_factors;
};

mpz_class delta(mpz_class const& n);

/// Throws verification_failure if some prime p | delta has p = 2 mod 3.
DeltaDecomposition decompose(mpz_class const& n);

FieldInvariants conductor(mpz_class const& n);
FieldInvariants conductor(DeltaDecomposition dec);

/// 3 does not divide n, or n = 12 mod 27.
bool is_tame(mpz_class const& n);
inline bool has_nib(mpz_class const& n) { return is_tame(n); }

/// Throws wild_ramification unless is_tame(n).
void require_tame(mpz_class const& n);

}  // namespace scf
