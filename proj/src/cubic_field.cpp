#include "scf/cubic_field.hpp"

#include "scf/arith.hpp"
#include "scf/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace scf {

namespace {

bool is_integer(mpq_class const& q) { return q.get_den() == 1; }

// "+80X", "-X", "+(1/3)X²"; the leading term never reaches here
std::string signed_term(mpq_class const& c, char const* monomial)
{
    if (c == 0) return "";
    std::string s = c < 0 ? "-" : "+";
    mpq_class a = abs(c);
    bool has_monomial = *monomial != '\0';
    if (is_integer(a)) {
        if (a != 1 || !has_monomial) s += a.get_str();
    } else {
        s += has_monomial ? "(" + a.get_str() + ")" : a.get_str();
    }
    return s + monomial;
}

}  // namespace

bool MonicCubic::is_integral() const
{
    return is_integer(p2) && is_integer(p1) && is_integer(p0);
}

mpq_class MonicCubic::operator()(mpq_class const& x) const
{
    return ((x + p2) * x + p1) * x + p0;
}

MonicCubic MonicCubic::reflect() const
{
    return {-p2, p1, -p0};
}

std::array<std::string, 4> MonicCubic::coefficient_strings() const
{
    return {"1", p2.get_str(), p1.get_str(), p0.get_str()};
}

std::string MonicCubic::str() const
{
    return "X³" + signed_term(p2, "X²") + signed_term(p1, "X") + signed_term(p0, "");
}

std::ostream& operator<<(std::ostream& os, MonicCubic const& p)
{
    return os << p.str();
}

std::ostream& operator<<(std::ostream& os, FieldElement const& a)
{
    return os << "[" << a[0] << ", " << a[1] << ", " << a[2] << "]";
}

MonicCubic shanks_polynomial(mpz_class const& n)
{
    return {mpq_class(-n), mpq_class(-(n + 3)), mpq_class(-1)};
}

FieldElement::FieldElement(mpz_class n, mpq_class r0, mpq_class r1, mpq_class r2)
    : n_(std::move(n)), r_{std::move(r0), std::move(r1), std::move(r2)}
{
    for (auto& r : r_) r.canonicalize();
}

FieldElement FieldElement::from_shanks(mpz_class const& n, mpz_class const& a0, mpz_class const& a1,
                                       mpz_class const& m, mpz_class const& den)
{
    if (den == 0) throw std::invalid_argument("from_shanks: zero denominator");
    FieldElement x(n, mpq_class(m), mpq_class(a0));
    x += apply_sigma(rho(n)) * mpq_class(a1);
    x *= mpq_class(1, 1) / mpq_class(den);
    return x;
}

bool FieldElement::is_zero() const
{
    return r_[0] == 0 && r_[1] == 0 && r_[2] == 0;
}

void FieldElement::check_same_field(FieldElement const& o) const
{
    if (n_ != o.n_)
        throw std::invalid_argument("field elements of L_" + n_.get_str() + " and L_" + o.n_.get_str());
}

FieldElement FieldElement::operator-() const
{
    return {n_, -r_[0], -r_[1], -r_[2]};
}

FieldElement& FieldElement::operator+=(FieldElement const& o)
{
    check_same_field(o);
    for (int i = 0; i < 3; ++i) r_[i] += o.r_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(FieldElement const& o)
{
    check_same_field(o);
    for (int i = 0; i < 3; ++i) r_[i] -= o.r_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(mpq_class const& s)
{
    mpq_class k = s;
    k.canonicalize();
    for (auto& r : r_) r *= k;
    return *this;
}

FieldElement& FieldElement::operator*=(FieldElement const& o)
{
    check_same_field(o);
    auto const& a = r_;
    auto const& b = o.r_;
    mpq_class c0 = a[0] * b[0];
    mpq_class c1 = a[0] * b[1] + a[1] * b[0];
    mpq_class c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    mpq_class c3 = a[1] * b[2] + a[2] * b[1];
    mpq_class c4 = a[2] * b[2];

    // rho^3 = n rho^2 + (n+3) rho + 1
    // rho^4 = (n^2+n+3) rho^2 + (n^2+3n+1) rho + n
    mpq_class n = n_;
    r_[0] = c0 + c3 + c4 * n;
    r_[1] = c1 + c3 * (n + 3) + c4 * (n * n + 3 * n + 1);
    r_[2] = c2 + c3 * n + c4 * (n * n + n + 3);
    return *this;
}

mpz_class FieldElement::denominator() const
{
    mpz_class d = 1;
    for (auto const& r : r_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.get_den_mpz_t());
    return d;
}

std::array<mpz_class, 3> FieldElement::numerators() const
{
    mpz_class d = denominator();
    std::array<mpz_class, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = r_[i].get_num() * (d / r_[i].get_den());
    return out;
}

Real FieldElement::evaluate(Real const& root) const
{
    auto prec = root.precision();
    Real v(r_[2], prec);
    v *= root;
    v += Real(r_[1], prec);
    v *= root;
    v += Real(r_[0], prec);
    return v;
}

FieldElement apply_sigma(FieldElement const& a)
{
    auto const& n = a.n();
    FieldElement s(n, mpq_class(-2), mpq_class(-(n + 1)), mpq_class(1));
    FieldElement out = FieldElement::rational(n, a[0]);
    out += s * a[1];
    out += (s * s) * a[2];
    return out;
}

std::array<FieldElement, 3> conjugates(FieldElement const& a)
{
    FieldElement b = apply_sigma(a);
    FieldElement c = apply_sigma(b);
    return {a, b, c};
}

namespace {

mpq_class rational_part(FieldElement const& x, char const* what)
{
    if (!x.is_rational()) throw verification_failure(std::string(what) + " is not rational");
    return x[0];
}

}  // namespace

mpq_class trace(FieldElement const& a)
{
    auto [x, y, z] = conjugates(a);
    return rational_part(x + y + z, "trace");
}

mpq_class norm(FieldElement const& a)
{
    auto [x, y, z] = conjugates(a);
    return rational_part(x * y * z, "norm");
}

MonicCubic min_poly(FieldElement const& a)
{
    auto [x, y, z] = conjugates(a);
    mpq_class e1 = rational_part(x + y + z, "e1");
    mpq_class e2 = rational_part(x * y + y * z + z * x, "e2");
    mpq_class e3 = rational_part(x * y * z, "e3");
    return {-e1, e2, -e3};
}

FieldElement evaluate(MonicCubic const& p, FieldElement const& a)
{
    auto const& n = a.n();
    FieldElement v = a + FieldElement::rational(n, p.p2);
    v *= a;
    v += FieldElement::rational(n, p.p1);
    v *= a;
    v += FieldElement::rational(n, p.p0);
    return v;
}

SymmetricFunctions lemma42(mpq_class r1, mpq_class r2, mpq_class r3, mpz_class const& n_)
{
    r1.canonicalize();
    r2.canonicalize();
    r3.canonicalize();
    mpq_class n = n_;
    mpq_class q = r1 * r1 - r1 * r2 + r2 * r2;
    SymmetricFunctions s;
    s.e1 = n * (r1 + r2) + 3 * r3;
    s.e2 = r1 * r2 * n * n + 2 * (r1 + r2) * r3 * n - q * (n + 3) + 3 * r3 * r3;
    s.e3 = r1 * r2 * r3 * n * n - r1 * r1 * r2 * n * (n + 3) + (r1 + r2) * r3 * r3 * n
           - q * r3 * (n + 3) + r1 * r2 * (r1 - r2) * (n * n + 3 * n + 6)
           + r1 * r1 * r1 + r2 * r2 * r2 + r3 * r3 * r3 - 3 * r1 * r1 * r2;
    return s;
}

mpq_class trace_form_disc(FieldElement const& b1, FieldElement const& b2, FieldElement const& b3)
{
    std::array<FieldElement const*, 3> b{&b1, &b2, &b3};
    mpq_class t[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) t[i][j] = t[j][i] = trace(*b[i] * *b[j]);
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1])
           - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
           + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

namespace {

Real eval_shanks(mpz_class const& n, Real const& x)
{
    auto prec = x.precision();
    // ((x - n) x - (n+3)) x - 1
    Real v = x - Real(n, prec);
    v *= x;
    v -= Real(mpz_class(n + 3), prec);
    v *= x;
    v -= Real(1L, prec);
    return v;
}

// f_n changes sign exactly once on [lo, hi]
Real bisect(mpz_class const& n, Real lo, Real hi, long bits)
{
    int s_lo = eval_shanks(n, lo).sign();
    Real two(2L, lo.precision());
    Real eps = pow2(-bits, lo.precision());
    for (int guard = 0; guard < 100000 && eps < hi - lo; ++guard) {
        Real mid = (lo + hi) / two;
        int s = eval_shanks(n, mid).sign();
        if (s == 0) return mid;
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / two;
}

}  // namespace

std::array<Real, 3> numeric_roots(mpz_class const& n, long bits)
{
    if (bits < 64) throw std::invalid_argument("numeric_roots: precision below 64 bits");
    mpfr_prec_t prec = bits + 32 + 3 * static_cast<long>(bit_length(n));

    // critical points (n -+ sqrt(Delta)) / 3 separate the three roots
    Real sq = sqrt(Real(mpz_class(n * n + 3 * n + 9), prec));
    Real nn(n, prec);
    Real three(3L, prec);
    Real c1 = (nn - sq) / three;
    Real c2 = (nn + sq) / three;
    Real bound(mpz_class(abs(n) + 5), prec);

    // sigma amplifies errors near -1 by up to ~n^2
    long target = bits + 16 + 2 * static_cast<long>(bit_length(n));
    std::array<Real, 3> r{bisect(n, c2, bound, target), bisect(n, c1, c2, target),
                          bisect(n, -bound, c1, target)};

    // r[0] is the largest; put sigma(r[0]) = -1/(1 + r[0]) next
    Real one(1L, prec);
    Real image = -(one / (one + r[0]));
    if (abs(image - r[2]) < abs(image - r[1])) std::swap(r[1], r[2]);

    Real tol = pow2(8 - bits, prec);
    for (int i = 0; i < 3; ++i) {
        Real img = -(one / (one + r[i]));
        if (!(abs(img - r[(i + 1) % 3]) < tol))
            throw precision_insufficient("numeric_roots: sigma-cycle check failed for n=" + n.get_str());
    }
    return r;
}

}  // namespace scf
