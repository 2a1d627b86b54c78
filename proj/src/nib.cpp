#include "scf/nib.hpp"

#include "scf/arith.hpp"
#include "scf/errors.hpp"
#include "scf/invariants.hpp"

#include <stdexcept>

namespace scf {

namespace {

int residue_sign(mpz_class const& x)
{
    mpz_class r = mod(x, 3);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

bool divides(mpz_class const& d, mpz_class const& x)
{
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

int epsilon(mpz_class const& n, mpz_class const& a0, mpz_class const& a1)
{
    int e = n % 3 != 0 ? residue_sign(n * (a0 + a1)) : residue_sign(a0);
    if (e == 0)
        throw std::invalid_argument("epsilon: residue is 0 for n=" + n.get_str() + ", pair (" +
                                    a0.get_str() + ", " + a1.get_str() + ")");
    return e;
}

mpz_class m_value(mpz_class const& n, mpz_class const& a0, mpz_class const& a1, int epsilon)
{
    auto dec = decompose(n);
    mpz_class num = epsilon * dec.e * dec.c * dec.c - n * (a0 + a1);
    if (!divides(3, num))
        throw std::invalid_argument("m_value: 3 does not divide " + num.get_str());
    return num / 3;
}

MonicCubic min_poly_closed(mpz_class const& n, mpz_class const& a0, mpz_class const& a1,
                           mpz_class const& m, int epsilon, int sign)
{
    auto dec = decompose(n);
    mpz_class ec = dec.e * dec.c;
    mpz_class ec2 = dec.e * dec.c * dec.c;
    mpz_class n2 = n * n;

    mpz_class lin = a0 * a1 * n2 + 2 * (a0 + a1) * m * n - ec * (n + 3) + 3 * m * m;
    mpz_class cst = a0 * a1 * m * n2 - a0 * a0 * a1 * n * (n + 3) + (a0 + a1) * m * m * n
                    - ec * m * (n + 3) + a0 * a1 * (a0 - a1) * (n2 + 3 * n + 6)
                    + a0 * a0 * a0 + a1 * a1 * a1 + m * m * m - 3 * a0 * a0 * a1;

    MonicCubic p;
    p.p2 = mpq_class(-sign * epsilon);
    p.p1 = make_rational(lin, ec2 * ec2);
    p.p0 = make_rational(-sign * cst, ec2 * ec2 * ec2);
    return p;
}

NibGenerator generator(mpz_class const& n, Pair const& pair)
{
    require_tame(n);
    auto inv = conductor(n);
    auto const& dec = inv.decomposition;
    if (pair_norm(pair) != dec.e * dec.c || !pair.as_eisenstein().divides(shanks_eisenstein(n)))
        throw std::invalid_argument("generator: pair {" + pair.a0.get_str() + "," + pair.a1.get_str() +
                                    "} is not a divisor of A_n of norm ec for n=" + n.get_str());

    NibGenerator g{n, pair, 0, 0, FieldElement(n), MonicCubic{}};
    g.epsilon = epsilon(n, pair.a0, pair.a1);
    g.m = m_value(n, pair.a0, pair.a1, g.epsilon);
    g.element = FieldElement::from_shanks(n, pair.a0, pair.a1, g.m, dec.e * dec.c * dec.c);
    g.min_poly = min_poly(g.element);

    auto report = verify_nib(g);
    if (!report.all())
        throw verification_failure("generator for n=" + n.get_str() + " pair {" + pair.a0.get_str() +
                                   "," + pair.a1.get_str() + "} failed verification");
    return g;
}

std::vector<NibGenerator> all_generators(mpz_class const& n)
{
    require_tame(n);
    auto dec = decompose(n);
    Pair p = find_pair(n, dec.e * dec.c).canonical;
    std::vector<Pair> pairs{p, rotate(p), rotate(rotate(p))};
    for (int i = 0; i < 3; ++i) pairs.push_back(-pairs[i]);

    std::vector<NibGenerator> out;
    out.reserve(6);
    for (auto const& q : pairs) out.push_back(generator(n, q));
    return out;
}

char const* to_string(SpecialKind k)
{
    switch (k) {
    case SpecialKind::f: return "f";
    case SpecialKind::g: return "g";
    case SpecialKind::h: return "h";
    }
    return "?";
}

std::optional<SpecialForm> special_forms(mpz_class const& n)
{
    mpz_class d = delta(n);
    mpz_class n2 = n * n;
    mpz_class r = mod(n, 3);
    if (r == 1 && is_square_free(d)) {
        FieldElement a(n, mpq_class(1 - n, 3), 1);
        MonicCubic plus{-1, make_rational(-(n2 + 3 * n + 8), 3), make_rational(-(2 * n2 * n + 6 * n2 + 18 * n + 1), 27)};
        return SpecialForm{SpecialKind::f, a, plus, plus.reflect()};
    }
    if (r == 2 && is_square_free(d)) {
        FieldElement a(n, mpq_class(1 + n, 3), -1);
        MonicCubic plus{-1, make_rational(-(n2 + 3 * n + 8), 3), make_rational(2 * n2 * n + 12 * n2 + 36 * n + 53, 27)};
        return SpecialForm{SpecialKind::g, a, plus, plus.reflect()};
    }
    if (mod(n, 27) == 12 && is_square_free(d / 27)) {
        FieldElement a = FieldElement::from_shanks(n, 1, -1, 3, 9);
        MonicCubic plus{-1, make_rational(-(n2 + 3 * n - 18), 81), make_rational(4 * n2 + 12 * n + 9, 729)};
        return SpecialForm{SpecialKind::h, a, plus, plus.reflect()};
    }
    return std::nullopt;
}

NibVerification verify_nib(NibGenerator const& g)
{
    NibVerification v;
    auto inv = conductor(g.n);
    auto const& dec = inv.decomposition;
    FieldElement alpha =
        FieldElement::from_shanks(g.n, g.pair.a0, g.pair.a1, g.m, dec.e * dec.c * dec.c);
    v.element_matches = alpha == g.element;

    auto conj = conjugates(alpha);
    MonicCubic direct = min_poly(alpha);
    v.trace_is_epsilon = (g.epsilon == 1 || g.epsilon == -1) && -direct.p2 == g.epsilon;
    v.integral_min_poly = direct.is_integral();
    v.discriminant = trace_form_disc(conj[0], conj[1], conj[2]) == mpq_class(inv.discriminant);
    v.closed_form = min_poly_closed(g.n, g.pair.a0, g.pair.a1, g.m, g.epsilon, 1) == direct;
    return v;
}

}  // namespace scf
