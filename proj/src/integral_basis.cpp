#include "scf/integral_basis.hpp"

#include "scf/arith.hpp"
#include "scf/errors.hpp"
#include "scf/invariants.hpp"

namespace scf {

Shift shift(mpz_class const& n)
{
    require_tame(n);
    if (n % 3 == 0) return {n / 3, std::nullopt};
    auto dec = decompose(n);
    mpz_class modulus = dec.e * dec.e * dec.c * dec.c * dec.c;
    mpz_class u = mod_inverse(3, modulus);
    return {u * n, u};
}

namespace {
bool divisible(mpz_class const& a, mpz_class const& m)
{
    return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}
}  // namespace

CongruenceReport check_congruences(mpz_class const& n, mpz_class const& t)
{
    auto dec = decompose(n);
    auto const& c = dec.c;
    auto const& e = dec.e;
    CongruenceReport r;
    r.second_derivative = divisible(3 * t - n, c);
    r.first_derivative = divisible(3 * t * t - 2 * n * t - (n + 3), c * c * e);
    r.value = divisible(((t - n) * t - (n + 3)) * t - 1, c * c * c * e * e);
    return r;
}

IntegralBasis build_integral_basis(mpz_class const& n)
{
    Shift s = shift(n);
    auto const& t = s.t;
    auto inv = conductor(n);
    auto const& c = inv.decomposition.c;
    auto const& e = inv.decomposition.e;

    if (!check_congruences(n, t).all())
        throw verification_failure("integral basis: congruences fail for n=" + n.get_str());

    FieldElement phi(n, mpq_class(-t, c), mpq_class(1, c));
    mpz_class den = c * c * e;
    FieldElement psi(n, mpq_class(t * t - n * t - n - 3, den), mpq_class(t - n, den), mpq_class(1, den));

    if (!min_poly(phi).is_integral() || !min_poly(psi).is_integral())
        throw verification_failure("integral basis: non-integral element for n=" + n.get_str());
    if (trace_form_disc(FieldElement::rational(n, 1), phi, psi) != mpq_class(inv.discriminant))
        throw verification_failure("integral basis: discriminant mismatch for n=" + n.get_str());
    return {n, s, phi, psi};
}

}  // namespace scf
