#include "scf/invariants.hpp"

#include "scf/errors.hpp"

namespace scf {

mpz_class delta(mpz_class const& n)
{
    return n * n + 3 * n + 9;
}

DeltaDecomposition decompose(mpz_class const& n)
{
    DeltaDecomposition dec;
    dec.n = n;
    dec.delta = delta(n);
    dec.factors = factor(dec.delta);
    for (auto const& pp : dec.factors.factors) {
        if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 3) == 2)
            throw verification_failure("prime " + pp.prime.get_str() + " = 2 mod 3 divides Delta_" + n.get_str());
    }
    auto const cube = cube_free_split(dec.factors);
    dec.b = cube.b;
    dec.c = cube.c;
    dec.d = 1;
    dec.e = 1;
    for (auto const& [p, k] : dec.factors.factors) {
        if (k % 3 == 1) dec.d *= p;
        if (k % 3 == 2) dec.e *= p;
    }
    return dec;
}

bool is_tame(mpz_class const& n)
{
    return mpz_fdiv_ui(n.get_mpz_t(), 3) != 0 || mpz_fdiv_ui(n.get_mpz_t(), 27) == 12;
}

void require_tame(mpz_class const& n)
{
    if (!is_tame(n)) throw wild_ramification(n.get_str());
}

FieldInvariants conductor(DeltaDecomposition dec)
{
    FieldInvariants inv;
    inv.tame = is_tame(dec.n);
    inv.gamma = inv.tame ? 1 : 9;
    inv.conductor = inv.gamma;
    inv.conductor_factors.value = 1;
    if (!inv.tame) inv.conductor_factors.factors.push_back({3, 2});
    // primes of b other than 3, in increasing order
    for (auto const& [p, k] : dec.factors.factors) {
        if (k % 3 == 0 || p == 3) continue;
        inv.conductor *= p;
        inv.conductor_factors.factors.push_back({p, 1});
    }
    inv.conductor_factors.value = inv.conductor;
    inv.discriminant = inv.conductor * inv.conductor;
    inv.prime_count = static_cast<int>(inv.conductor_factors.factors.size());
    inv.decomposition = std::move(dec);
    return inv;
}

FieldInvariants conductor(mpz_class const& n)
{
    return conductor(decompose(n));
}

}  // namespace scf
