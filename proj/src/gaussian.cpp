#include "scf/gaussian.hpp"

#include "scf/arith.hpp"
#include "scf/errors.hpp"
#include "scf/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace scf {

GaussianReport period_identity(mpz_class const& n)
{
    require_tame(n);
    auto inv = conductor(n);
    auto const& dec = inv.decomposition;
    Pair p = find_pair(n, dec.e * dec.c).canonical;
    NibGenerator g = generator(n, p);

    int sign = (inv.prime_count % 2 == 0 ? 1 : -1) * g.epsilon;
    auto periods = conjugates(g.element * mpq_class(sign));
    GaussianReport r{n, inv.prime_count, p, g.epsilon, sign, periods, display_conjugate(periods), {}, std::nullopt};
    r.min_poly = min_poly_closed(n, p.a0, p.a1, g.m, g.epsilon, r.sign);

    if (r.min_poly != min_poly(r.period_element))
        throw verification_failure("period polynomial mismatch for n=" + n.get_str());
    if (trace(r.period_element) != mobius(inv.conductor))
        throw verification_failure("period trace differs from mu(f) for n=" + n.get_str());
    return r;
}

FieldElement display_conjugate(std::array<FieldElement, 3> const& conj)
{
    auto key = [](FieldElement const& x) {
        auto v = x.numerators();
        return std::make_tuple(mpz_class(abs(v[2])), mpz_class(abs(v[0])), mpz_class(abs(v[1])));
    };
    auto best = std::min_element(conj.begin(), conj.end(),
                                 [&](auto const& a, auto const& b) { return key(a) < key(b); });
    return *best;
}

std::optional<CorollaryForm> corollary_forms(mpz_class const& n)
{
    if (!is_tame(n)) return std::nullopt;
    auto sf = special_forms(n);
    if (!sf) return std::nullopt;
    int t = conductor(n).prime_count;
    bool even = t % 2 == 0;
    FieldElement rho = FieldElement::rho(n);

    if (sf->kind == SpecialKind::h) {
        // (-1)^(t+1) (rho^2 - (n+2) rho - 5) / 9
        FieldElement eta(n, mpq_class(-5, 9), mpq_class(-(n + 2), 9), mpq_class(1, 9));
        if (even) eta = -eta;
        return CorollaryForm{sf->kind, eta, even ? sf->plus : sf->minus};
    }
    int leg = legendre3(n);
    mpq_class v_n(leg - n, 3);
    FieldElement eta = rho + FieldElement::rational(n, v_n);
    eta *= mpq_class((even ? 1 : -1) * leg);
    return CorollaryForm{sf->kind, eta, even ? sf->plus : sf->minus};
}

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<unsigned __int128>(r) * b % m;
        b = static_cast<unsigned __int128>(b) * b % m;
        e >>= 1;
    }
    return r;
}

u64 primitive_root(u64 p)
{
    std::vector<u64> qs;
    for (auto const& pp : factor(mpz_class(static_cast<unsigned long>(p - 1))).factors)
        qs.push_back(pp.prime.get_ui());
    for (u64 g = 2;; ++g) {
        bool ok = std::all_of(qs.begin(), qs.end(), [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; });
        if (ok) return g;
    }
}

// discrete logarithm mod 3 of every nonzero residue; index 0 unused
std::vector<std::uint8_t> index_mod3(u64 p)
{
    std::vector<std::uint8_t> ind(p, 0);
    u64 g = primitive_root(p);
    u64 x = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
        ind[x] = static_cast<std::uint8_t>(k % 3);
        x = x * g % p;
    }
    return ind;
}

struct CubicCharacters {
    std::vector<u64> primes;
    std::vector<std::vector<std::uint8_t>> index;
    std::vector<std::vector<int>> exponents;  // first exponent normalized to 1

    int character_class(std::size_t which, u64 a) const
    {
        int s = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) s += exponents[which][i] * index[i][a % primes[i]];
        return s % 3;
    }
};

CubicCharacters cubic_characters(mpz_class const& f)
{
    if (f <= 1 || !is_square_free(f))
        throw std::invalid_argument("numeric_periods: conductor " + f.get_str() + " is not square-free and > 1");
    if (f > 100000000)
        throw std::invalid_argument("numeric_periods: conductor " + f.get_str() + " too large to enumerate");
    auto fac = factor(f);
    mpz_class phi = 1;
    for (auto const& pp : fac.factors) phi *= pp.prime - 1;
    if (phi % 3 != 0) throw std::invalid_argument("numeric_periods: 3 does not divide phi(" + f.get_str() + ")");

    CubicCharacters ch;
    for (auto const& pp : fac.factors) {
        if (pp.prime % 3 != 1) return ch;  // no cubic character has this prime in its conductor
    }
    for (auto const& pp : fac.factors) {
        ch.primes.push_back(pp.prime.get_ui());
        ch.index.push_back(index_mod3(ch.primes.back()));
    }
    std::size_t t = ch.primes.size();
    for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask) {
        std::vector<int> k{1};
        for (std::size_t i = 1; i < t; ++i) k.push_back(mask >> (i - 1) & 1 ? 2 : 1);
        ch.exponents.push_back(std::move(k));
    }
    return ch;
}

// cos and sin of 2 pi k / f for k = 0, step, 2 step, ... (count values)
struct AngleTable {
    std::vector<Real> cos, sin;

    AngleTable(u64 step, u64 count, u64 f, mpfr_prec_t prec)
    {
        cos.reserve(count);
        sin.reserve(count);
        Real x(prec);
        for (u64 i = 0; i < count; ++i) {
            mpfr_const_pi(x.get(), MPFR_RNDN);
            mpfr_mul_ui(x.get(), x.get(), 2 * step * i % (2 * f), MPFR_RNDN);
            mpfr_div_ui(x.get(), x.get(), f, MPFR_RNDN);
            cos.emplace_back(prec);
            sin.emplace_back(prec);
            mpfr_sin_cos(sin.back().get(), cos.back().get(), x.get(), MPFR_RNDN);
        }
    }
};

std::vector<PeriodTriple> periods_for(CubicCharacters const& ch, u64 f, long bits)
{
    mpfr_prec_t prec = bits + 32 + static_cast<long>(bit_length(mpz_class(static_cast<unsigned long>(f))));
    std::vector<PeriodTriple> out;
    for (auto const& k : ch.exponents) {
        PeriodTriple t{k, {Real(prec), Real(prec), Real(prec)}};
        out.push_back(std::move(t));
    }
    // 2 pi a / f split as giant step q * block plus baby step r
    u64 block = 1;
    while (block * block < f) ++block;
    AngleTable baby(1, block, f, prec);
    AngleTable giant(block, f / block + 1, f, prec);
    Real c(prec);
    // -1 lies in every kernel, so a and f - a fall in the same coset
    for (u64 a = 1; 2 * a < f; ++a) {
        bool unit = std::all_of(ch.primes.begin(), ch.primes.end(), [&](u64 p) { return a % p != 0; });
        if (!unit) continue;
        u64 q = a / block, r = a % block;
        mpfr_fmms(c.get(), giant.cos[q].get(), baby.cos[r].get(), giant.sin[q].get(), baby.sin[r].get(),
                  MPFR_RNDN);
        mpfr_mul_2ui(c.get(), c.get(), 1, MPFR_RNDN);
        for (std::size_t w = 0; w < out.size(); ++w) out[w].values[ch.character_class(w, a)] += c;
    }
    return out;
}

// x^e mod (f_n, q) as coefficients of 1, x, x^2
std::array<u64, 3> power_of_x(mpz_class const& n, u64 e, u64 q)
{
    u64 nq = mpz_class(mod(n, q)).get_ui();
    u64 n3 = (nq + 3) % q;
    auto mul = [&](std::array<u64, 3> const& a, std::array<u64, 3> const& b) {
        u64 c[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q;
        // x^4 = n x^3 + (n+3) x^2 + x, x^3 = n x^2 + (n+3) x + 1
        c[3] = (c[3] + c[4] * nq) % q;
        c[2] = (c[2] + c[4] * n3) % q;
        c[1] = (c[1] + c[4]) % q;
        c[2] = (c[2] + c[3] * nq) % q;
        c[1] = (c[1] + c[3] * n3) % q;
        c[0] = (c[0] + c[3]) % q;
        return std::array<u64, 3>{c[0], c[1], c[2]};
    };
    std::array<u64, 3> r{1, 0, 0}, b{0, 1, 0};
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::array<u64, 3> reduce(FieldElement const& a, u64 q)
{
    std::array<u64, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = mpz_class(mod(a[i].get_num(), q)).get_ui();
    return out;
}

// s with Frob_q = sigma^s on L_n (s = 0 when q splits)
int frobenius_power(mpz_class const& n, u64 q)
{
    FieldElement rho = FieldElement::rho(n);
    FieldElement s1 = apply_sigma(rho);
    FieldElement s2 = apply_sigma(s1);
    auto xq = power_of_x(n, q, q);
    if (xq == reduce(rho, q)) return 0;
    if (xq == reduce(s1, q)) return 1;
    if (xq == reduce(s2, q)) return 2;
    throw verification_failure("Frobenius at " + std::to_string(q) + " is not a power of sigma");
}

}  // namespace

std::vector<PeriodTriple> numeric_periods(mpz_class const& f, long bits)
{
    auto ch = cubic_characters(f);
    if (ch.exponents.empty()) return {};
    return periods_for(ch, f.get_ui(), bits);
}

NumericCheck numeric_verify(mpz_class const& n, long bits)
{
    GaussianReport rep = period_identity(n);
    auto inv = conductor(n);
    auto ch = cubic_characters(inv.conductor);
    u64 f = inv.conductor.get_ui();
    auto triples = ch.exponents.empty() ? std::vector<PeriodTriple>{} : periods_for(ch, f, bits);
    mpfr_prec_t prec = triples.empty() ? bits : triples.front().values[0].precision();

    NumericCheck out;
    out.bits = bits;
    out.residual = Real(prec);
    out.labeling_error = Real(prec);
    Real bound = pow2(-bits / 2, prec);

    std::optional<std::size_t> matched;
    for (std::size_t w = 0; w < triples.size(); ++w) {
        auto const& v = triples[w].values;
        Real e1 = v[0] + v[1] + v[2];
        Real e2 = v[0] * v[1] + v[1] * v[2] + v[2] * v[0];
        Real e3 = v[0] * v[1] * v[2];
        Real residual(prec);
        for (Real const* e : {&e1, &e2, &e3}) {
            Real d = abs(*e - Real(e->round(), prec));
            if (residual < d) residual = d;
        }
        if (!(residual < bound))
            throw precision_insufficient("numeric_verify: residual " + residual.str(6) + " at " +
                                         std::to_string(bits) + " bits for n=" + n.get_str());
        MonicCubic rounded{mpq_class(-e1.round()), mpq_class(e2.round()), mpq_class(-e3.round())};
        if (rounded == rep.min_poly && !matched) {
            matched = w;
            out.residual = residual;
        }
    }
    out.polynomial_match = matched.has_value();
    if (!matched) return out;

    // orient the coset labels so that sigma(eta_j) = eta_(j+1)
    int d = 0;
    for (u64 q = 2; d == 0; ++q) {
        mpz_class qz(static_cast<unsigned long>(q));
        if (!is_prime(qz) || f % q == 0 || inv.decomposition.delta % qz == 0) continue;
        int s = frobenius_power(n, q);
        int cls = ch.character_class(*matched, q);
        if ((s == 0) != (cls == 0))
            throw verification_failure("Frobenius at " + std::to_string(q) + " disagrees with the character");
        d = s * cls % 3;
    }
    auto const& eta = triples[*matched].values;
    std::array<Real const*, 3> oriented{&eta[0], &eta[d % 3], &eta[2 * d % 3]};

    auto roots = numeric_roots(n, bits);
    std::array<Real, 3> predicted{rep.periods[0].evaluate(roots[0]), rep.periods[0].evaluate(roots[1]),
                                  rep.periods[0].evaluate(roots[2])};
    std::optional<Real> best;
    for (int k = 0; k < 3; ++k) {
        Real err(prec);
        for (int j = 0; j < 3; ++j) {
            Real diff = abs(*oriented[j] - predicted[(j + k) % 3]);
            if (err < diff) err = diff;
        }
        if (!best || err < *best) best = err;
    }
    out.labeling_error = *best;
    out.labeling_match = *best < bound;
    return out;
}

NumericCheck numeric_verify_adaptive(mpz_class const& n, long bits, long max_bits)
{
    for (;;) {
        try {
            return numeric_verify(n, bits);
        } catch (precision_insufficient const&) {
            if (2 * bits > max_bits) throw;
            bits *= 2;
        }
    }
}

}  // namespace scf
