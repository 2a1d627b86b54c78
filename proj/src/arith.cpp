#include "scf/arith.hpp"

#include "scf/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scf {

namespace {

constexpr std::uint32_t trial_limit = 1000000;

std::vector<std::uint32_t> const& small_primes()
{
    static std::vector<std::uint32_t> const primes = [] {
        std::vector<bool> composite(trial_limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= trial_limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= trial_limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_round(mpz_class const& n, mpz_class const& d, unsigned s, unsigned long base)
{
    mpz_class const nm1 = n - 1;
    mpz_class x;
    mpz_class const a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

/* Brent's cycle-finding variant of Pollard rho.  Returns a non-trivial
 * divisor of the odd composite n, trying seeds 1, 2, 3, ... in turn.
 */
mpz_class pollard_brent(mpz_class const& n)
{
    for (unsigned long seed = 1;; ++seed) {
        mpz_class const c = seed;
        mpz_class y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            do {
                ys = y;
                unsigned long const steps = std::min(m, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    mpz_class diff = x - y;
                    q = q * abs(diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(mpz_class const& n, std::map<mpz_class, unsigned>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class const g = pollard_brent(n);
    split_into(g, out);
    split_into(n / g, out);
}

}  // namespace

mpz_class Factorization::product() const
{
    mpz_class r = 1;
    for (auto const& pp : factors) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        r *= t;
    }
    return r;
}

mpz_class Factorization::radical() const
{
    mpz_class r = 1;
    for (auto const& pp : factors) r *= pp.prime;
    return r;
}

bool is_prime(mpz_class const& n)
{
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    static mpz_class const mr_bound("3317044064679887385961981");
    if (n >= mr_bound) return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
    mpz_class d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long base : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul})
        if (!miller_rabin_round(n, d, s, base)) return false;
    return true;
}

Factorization factor(mpz_class const& N)
{
    if (N <= 0) throw std::invalid_argument("factor: N must be positive, got " + N.get_str());
    Factorization out;
    out.value = N;
    mpz_class rem = N;
    for (std::uint32_t p : small_primes()) {
        mpz_class const pp = p;
        if (pp * pp > rem) break;
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        }
        out.factors.push_back({pp, e});
    }
    if (rem > 1) {
        std::map<mpz_class, unsigned> big;
        split_into(rem, big);
        for (auto const& [p, e] : big) out.factors.push_back({p, e});
    }
    return out;
}

CubeFreeSplit cube_free_split(Factorization const& f)
{
    CubeFreeSplit r{1, 1};
    for (auto const& [p, k] : f.factors) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), k / 3);
        r.c *= t;
        mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), k % 3);
        r.b *= t;
    }
    return r;
}

CubeFreeSplit cube_free_split(mpz_class const& delta)
{
    if (delta <= 0) throw std::invalid_argument("cube_free_split: argument must be positive");
    return cube_free_split(factor(delta));
}

SquareFreeSplit square_free_split(mpz_class const& b)
{
    if (b <= 0) throw std::invalid_argument("square_free_split: argument must be positive");
    SquareFreeSplit r{1, 1};
    for (auto const& [p, k] : factor(b).factors) {
        if (k >= 3) throw std::invalid_argument("square_free_split: " + b.get_str() + " is not cube-free");
        (k == 1 ? r.d : r.e) *= p;
    }
    return r;
}

bool is_square_free(mpz_class const& n)
{
    return mobius(n) != 0;
}

int mobius(mpz_class const& n)
{
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int mu = 1;
    for (auto const& pp : factor(n).factors) {
        if (pp.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

int legendre3(mpz_class const& n)
{
    unsigned long const r = mpz_fdiv_ui(n.get_mpz_t(), 3);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

mpz_class mod(mpz_class const& a, mpz_class const& m)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class mod_inverse(mpz_class const& a, mpz_class const& M)
{
    if (M < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (M == 1) return 0;
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t()) == 0)
        throw not_invertible(a.get_str() + " is not invertible modulo " + M.get_str());
    return r;
}

std::size_t bit_length(mpz_class const& x)
{
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

mpq_class make_rational(mpz_class const& num, mpz_class const& den)
{
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace scf
