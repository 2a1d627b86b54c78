#pragma once

#include "scf/cubic_field.hpp"
#include "scf/eisenstein.hpp"
#include "scf/nib.hpp"
#include "scf/real.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

namespace scf {

struct NumericCheck {
    long bits = 0;
    bool polynomial_match = false;  // some subgroup rounds to the predicted polynomial
    bool labeling_match = false;    // its periods equal the predicted conjugates up to a cyclic shift
    Real residual;                  // largest distance of a symmetric function from an integer
    Real labeling_error;

    bool passed() const { return polynomial_match && labeling_match; }
};

/* The Gaussian periods eta_i of L_n as signed generators:
 *   eta_i = (-1)^t eps / (e c^2) (a0 rho^(i) + a1 rho^(i+1) + m)
 * with t the number of primes of the conductor.
 */
struct GaussianReport {
    mpz_class n;
    int prime_count = 0;
    Pair pair;
    int epsilon = 0;
    int sign = 0;  // (-1)^t eps
    std::array<FieldElement, 3> periods;  // sign * alpha and its conjugates
    FieldElement period_element;          // the conjugate chosen for display
    MonicCubic min_poly;                  // F_+ if eps = (-1)^t, else F_-
    std::optional<NumericCheck> numeric;
};

/// Throws wild_ramification for wild n.
GaussianReport period_identity(mpz_class const& n);

/* Among the three conjugates, the one whose coordinates over a common
 * denominator are smallest: |rho^2 numerator|, then |constant|, then |rho|.
 */
FieldElement display_conjugate(std::array<FieldElement, 3> const& conj);

struct CorollaryForm {
    SpecialKind kind;
    FieldElement period;  // (-1)^t (n/3)(v_n + rho), or (-1)^(t+1) (rho^2 - (n+2) rho - 5) / 9
    MonicCubic min_poly;
};

std::optional<CorollaryForm> corollary_forms(mpz_class const& n);

struct PeriodTriple {
    std::vector<int> character;  // exponent of the cubic character at each prime of f
    std::array<Real, 3> values;  // eta_j = sum of cos(2 pi a / f) over the coset of class j
};

/* Periods of every cyclic cubic field of conductor exactly f.  Rejects f
 * that is not square-free, has 3 not dividing phi(f), or exceeds 10^8.
 */
std::vector<PeriodTriple> numeric_periods(mpz_class const& f, long bits);

/* Checks period_identity(n) against numeric_periods(f).  Throws
 * precision_insufficient when a rounded symmetric function is further than
 * 2^(-bits/2) from an integer.
 */
NumericCheck numeric_verify(mpz_class const& n, long bits);

/// numeric_verify, doubling the precision on precision_insufficient up to max_bits.
NumericCheck numeric_verify_adaptive(mpz_class const& n, long bits = 256, long max_bits = 4096);

}  // namespace scf
