#pragma once

#include "scf/cubic_field.hpp"

#include <gmpxx.h>

#include <optional>

namespace scf {

struct Shift {
    mpz_class t;
    std::optional<mpz_class> u;  // 3u = 1 mod e^2 c^3; only when 3 does not divide n
};

/* t = u n with u = 3^-1 mod e^2 c^3 in [0, e^2 c^3) when 3 does not divide n,
 * t = n/3 when n = 12 mod 27.  Throws wild_ramification otherwise.
 */
Shift shift(mpz_class const& n);

struct CongruenceReport {
    bool second_derivative = false;  // f''(t)/2 = 3t - n = 0 mod c
    bool first_derivative = false;   // f'(t) = 0 mod c^2 e
    bool value = false;              // f(t) = 0 mod c^3 e^2

    bool all() const { return second_derivative && first_derivative && value; }
};

CongruenceReport check_congruences(mpz_class const& n, mpz_class const& t);

struct IntegralBasis {
    mpz_class n;
    Shift shift;
    FieldElement phi;  // (rho - t) / c
    FieldElement psi;  // (rho^2 + (t-n) rho + t^2 - nt - n - 3) / (c^2 e)
};

/* The basis {1, phi, psi} of the ring of integers of L_n for tame n.
 * Verified before returning: the congruences hold, phi and psi have integral
 * minimal polynomials and the trace-form discriminant equals f^2.
 */
IntegralBasis build_integral_basis(mpz_class const& n);

}  // namespace scf
