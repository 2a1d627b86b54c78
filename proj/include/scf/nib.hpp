#pragma once

#include "scf/cubic_field.hpp"
#include "scf/eisenstein.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace scf {

/* alpha = (a0 rho + a1 rho' + m) / (e c^2) with trace epsilon. */
struct NibGenerator {
    mpz_class n;
    Pair pair;
    int epsilon = 0;
    mpz_class m;
    FieldElement element;
    MonicCubic min_poly;
};

/* epsilon = n(a0 + a1) mod 3 when 3 does not divide n, a0 mod 3 when
 * n = 12 mod 27, as +-1.  Throws std::invalid_argument if that residue is 0.
 */
int epsilon(mpz_class const& n, mpz_class const& a0, mpz_class const& a1);

/// (epsilon e c^2 - n(a0 + a1)) / 3; throws std::invalid_argument if inexact.
mpz_class m_value(mpz_class const& n, mpz_class const& a0, mpz_class const& a1, int epsilon);

/* The generator attached to a pair of norm e c dividing A_n.  Throws
 * wild_ramification for wild n, std::invalid_argument for a bad pair and
 * verification_failure if the result is not a normal integral basis generator.
 */
NibGenerator generator(mpz_class const& n, Pair const& pair);

/* All six generators: alpha, sigma alpha, sigma^2 alpha and their negatives,
 * alpha coming from the canonical pair.
 */
std::vector<NibGenerator> all_generators(mpz_class const& n);

/* Closed-form minimal polynomial of sign * alpha:
 *   X^3 -+ eps X^2 + L X -+ C,
 *   L = (a0 a1 n^2 + 2(a0+a1) m n - ec(n+3) + 3m^2) / (e^2 c^4),
 *   C = (a0 a1 m n^2 - a0^2 a1 n(n+3) + (a0+a1) m^2 n - ec m(n+3)
 *        + a0 a1 (a0-a1)(n^2+3n+6) + a0^3 + a1^3 + m^3 - 3 a0^2 a1) / (e^3 c^6).
 */
MonicCubic min_poly_closed(mpz_class const& n, mpz_class const& a0, mpz_class const& a1,
                           mpz_class const& m, int epsilon, int sign);

enum class SpecialKind { f, g, h };

char const* to_string(SpecialKind k);

/* Generators available in closed form when the relevant part of Delta_n is
 * square-free:
 *   f: n = 1 mod 3,  alpha = (1-n)/3 + rho
 *   g: n = 2 mod 3,  alpha = (1+n)/3 - rho
 *   h: n = 12 mod 27, alpha = (rho - rho' + 3)/9
 * plus is the minimal polynomial of alpha (trace 1), minus that of -alpha.
 */
struct SpecialForm {
    SpecialKind kind;
    FieldElement generator;
    MonicCubic plus;
    MonicCubic minus;
};

std::optional<SpecialForm> special_forms(mpz_class const& n);

struct NibVerification {
    bool trace_is_epsilon = false;  // trace = epsilon and epsilon = +-1
    bool integral_min_poly = false;
    bool discriminant = false;      // d(alpha, sigma alpha, sigma^2 alpha) = f^2
    bool closed_form = false;       // min_poly_closed agrees with the conjugate computation
    bool element_matches = false;   // the stored element is (a0 rho + a1 rho' + m) / (e c^2)

    bool all() const
    {
        return trace_is_epsilon && integral_min_poly && discriminant && closed_form && element_matches;
    }
};

/// Recomputes the element from (a0, a1, m) and checks it against epsilon.
NibVerification verify_nib(NibGenerator const& g);

}  // namespace scf
