#include "scf/eisenstein.hpp"

#include "scf/arith.hpp"
#include "scf/errors.hpp"
#include "scf/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace scf {

mpz_class Eisenstein::norm() const
{
    return x_ * x_ - x_ * y_ + y_ * y_;
}

Eisenstein Eisenstein::conj() const
{
    return {x_ - y_, -y_};
}

Eisenstein operator+(Eisenstein const& a, Eisenstein const& b)
{
    return {a.x_ + b.x_, a.y_ + b.y_};
}

Eisenstein operator-(Eisenstein const& a, Eisenstein const& b)
{
    return {a.x_ - b.x_, a.y_ - b.y_};
}

Eisenstein operator*(Eisenstein const& a, Eisenstein const& b)
{
    // zeta^2 = -1 - zeta
    mpz_class const yy = a.y_ * b.y_;
    return {a.x_ * b.x_ - yy, a.x_ * b.y_ + a.y_ * b.x_ - yy};
}

bool Eisenstein::divides(Eisenstein const& b) const
{
    if (is_zero()) return b.is_zero();
    Eisenstein const num = b * conj();
    mpz_class const N = norm();
    return mpz_divisible_p(num.x_.get_mpz_t(), N.get_mpz_t()) && mpz_divisible_p(num.y_.get_mpz_t(), N.get_mpz_t());
}

Eisenstein Eisenstein::exact_quotient_of(Eisenstein const& b) const
{
    if (!divides(b) || is_zero()) throw std::domain_error(str() + " does not divide " + b.str());
    Eisenstein const num = b * conj();
    mpz_class const N = norm();
    return {num.x_ / N, num.y_ / N};
}

std::string Eisenstein::str() const
{
    std::ostringstream os;
    os << x_ << (y_ < 0 ? "-" : "+") << abs(y_) << "ζ";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, Eisenstein const& a)
{
    return os << a.str();
}

namespace {

mpz_class round_div(mpz_class const& num, mpz_class const& den)
{
    // floor(num/den + 1/2) for den > 0
    mpz_class q;
    mpz_class const twice = 2 * num + den;
    mpz_class const den2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    return q;
}

}  // namespace

DivMod divmod(Eisenstein const& a, Eisenstein const& b)
{
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    Eisenstein const num = a * b.conj();
    mpz_class const N = b.norm();
    Eisenstein const q{round_div(num.x(), N), round_div(num.y(), N)};
    return {q, a - q * b};
}

Eisenstein gcd(Eisenstein const& a, Eisenstein const& b)
{
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    Eisenstein u = a, v = b;
    while (!v.is_zero()) {
        Eisenstein r = divmod(u, v).remainder;
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

Eisenstein pow(Eisenstein base, unsigned long exponent)
{
    Eisenstein r{1, 0};
    while (exponent) {
        if (exponent & 1) r = r * base;
        base = base * base;
        exponent >>= 1;
    }
    return r;
}

Eisenstein shanks_eisenstein(mpz_class const& n)
{
    return {n + 3, 3};
}

std::ostream& operator<<(std::ostream& os, Pair const& p)
{
    return os << "{" << p.a0 << "," << p.a1 << "}";
}

mpz_class pair_norm(Pair const& p)
{
    return p.a0 * p.a0 - p.a0 * p.a1 + p.a1 * p.a1;
}

std::array<Pair, 6> unit_orbit(Pair const& p)
{
    mpz_class const diff = p.a0 - p.a1;
    return {{
        {p.a0, p.a1},
        {-p.a0, -p.a1},
        {p.a1, -diff},
        {-p.a1, diff},
        {diff, p.a0},
        {-diff, -p.a0},
    }};
}

Pair rotate(Pair const& p)
{
    return {-p.a1, p.a0 - p.a1};
}

Pair canonical_associate(Pair const& p)
{
    for (auto const& q : unit_orbit(p))
        if (q.a0 >= 0 && q.a0 < q.a1) return q;
    throw std::invalid_argument("canonical_associate: zero has no associates");
}

PairSet find_pair(mpz_class const& n, mpz_class const& s)
{
    if (s <= 0) throw std::invalid_argument("find_pair: s must be positive");
    mpz_class const D = delta(n);
    if (!mpz_divisible_p(D.get_mpz_t(), s.get_mpz_t()))
        throw std::invalid_argument("find_pair: " + s.get_str() + " does not divide Delta_" + n.get_str());
    Eisenstein const A = shanks_eisenstein(n);
    Eisenstein acc{1, 0};
    for (auto const& [p, v] : factor(s).factors) {
        if (p == 3) {
            if (v > 1) throw std::invalid_argument("find_pair: 9 divides s");
            acc = acc * Eisenstein{1, -1};
            continue;
        }
        if (mpz_fdiv_ui(p.get_mpz_t(), 3) != 1)
            throw std::invalid_argument("find_pair: prime " + p.get_str() + " of s is not 1 mod 3");
        Eisenstein const pi = gcd(Eisenstein{p, 0}, A);
        if (pi.norm() != p)
            throw verification_failure("gcd(" + p.get_str() + ", A_n) has norm " + pi.norm().get_str());
        acc = acc * pow(pi, v);
    }
    if (!acc.divides(A))
        throw verification_failure("constructed divisor " + acc.str() + " does not divide A_" + n.get_str());
    Pair const canon = canonical_associate({acc.x(), acc.y()});
    return {canon, unit_orbit(canon)};
}

}  // namespace scf
