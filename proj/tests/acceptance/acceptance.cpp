// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
#include "golden.hpp"

#include "scf/arith.hpp"
#include "scf/cli.hpp"
#include "scf/errors.hpp"
#include "scf/gaussian.hpp"
#include "scf/integral_basis.hpp"
#include "scf/invariants.hpp"
#include "scf/nib.hpp"
#include "scf/render.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace scf;

namespace {

constexpr double nib_seconds = 1.0;
constexpr double table_seconds = 10.0;
constexpr double oracle_seconds = 60.0;
constexpr double numeric_seconds = 30.0;
constexpr double property_seconds = 60.0;
constexpr long numeric_bits = 256;
constexpr long residual_log2_bound = -100;
constexpr long range = 2000;

// criteria that cannot be met as stated; they still print FAIL
std::set<int> const known_unattainable = {3};

struct Outcome {
    bool passed;
    std::string detail;
};

struct Cli {
    int code;
    std::string out;
};

Cli cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

std::vector<std::string> split(std::string const& s, std::string const& sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) return out;
        pos = next + sep.size();
    }
}

std::string trim(std::string s)
{
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

// "| a | b |" -> {"a", "b"}
std::vector<std::string> cells(std::string const& row)
{
    auto parts = split(row, "|");
    std::vector<std::string> out;
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) out.push_back(trim(parts[i]));
    return out;
}

// Printed period "-(1/49)(ρ²-284ρ-367)" or "ρ-4" back into the field.
FieldElement parse_printed(mpz_class const& n, std::string s)
{
    int sign = 1;
    if (s.rfind("-(", 0) == 0) {
        sign = -1;
        s.erase(0, 1);
    }
    mpz_class den = 1;
    if (s.rfind("(1/", 0) == 0) {
        auto close = s.find(')');
        den = mpz_class(s.substr(3, close - 3));
        s = s.substr(close + 1);
        if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    }
    std::string const sq = "ρ²", r = "ρ";
    mpz_class coeff[3] = {0, 0, 0};
    std::size_t i = 0;
    while (i < s.size()) {
        int term_sign = 1;
        if (s[i] == '+' || s[i] == '-') term_sign = s[i++] == '-' ? -1 : 1;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        mpz_class c = j > i ? mpz_class(s.substr(i, j - i)) : mpz_class(1);
        i = j;
        int power = 0;
        if (s.compare(i, sq.size(), sq) == 0) {
            power = 2;
            i += sq.size();
        } else if (s.compare(i, r.size(), r) == 0) {
            power = 1;
            i += r.size();
        }
        coeff[power] += term_sign * c;
    }
    return FieldElement(n, make_rational(sign * coeff[0], den), make_rational(sign * coeff[1], den),
                        make_rational(sign * coeff[2], den));
}

Outcome nib_golden(long n, std::vector<std::string> const& rows)
{
    auto t0 = std::chrono::steady_clock::now();
    auto r = cli({"nib", std::to_string(n)});
    double s = seconds_since(t0);
    std::string expected = golden::nib_header;
    for (auto const& row : rows) expected += row + "\n";
    bool exact = r.code == exit_ok && r.out == expected;
    int matched = 0;
    auto lines = split(r.out, "\n");
    for (std::size_t i = 0; i < rows.size(); ++i) matched += i + 2 < lines.size() && lines[i + 2] == rows[i];
    return {exact && s < nib_seconds,
            "nib " + std::to_string(n) + ": " + std::to_string(matched) + "/6 rows byte-exact, whole output " +
                (exact ? "identical" : "differs") + ", " + fmt_seconds(s) + " < " + fmt_seconds(nib_seconds)};
}

struct TableComparison {
    bool exact = false;
    std::size_t emitted = 0, printed = 0, present = 0, columns_exact = 0, period_exact = 0, period_conjugate = 0;
    std::vector<std::string> extra, conjugate_rows, unmatched;
};

TableComparison compare_table(std::string const& filter, std::vector<std::string> const& printed)
{
    TableComparison c;
    auto r = cli({"table", "--from", "1", "--to", "500", "--filter", filter});
    std::string expected = golden::table_header;
    for (auto const& row : printed) expected += row + "\n";
    c.exact = r.code == exit_ok && r.out == expected;
    c.printed = printed.size();

    std::map<std::string, std::vector<std::string>> ours;
    auto lines = split(r.out, "\n");
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto row = cells(lines[i]);
        ours[row[0]] = row;
        ++c.emitted;
    }
    std::set<std::string> printed_n;
    for (auto const& line : printed) {
        auto want = cells(line);
        printed_n.insert(want[0]);
        auto it = ours.find(want[0]);
        if (it == ours.end()) continue;
        ++c.present;
        auto const& got = it->second;
        if (got[1] == want[1] && got[2] == want[2] && got[4] == want[4]) ++c.columns_exact;
        if (got[3] == want[3]) {
            ++c.period_exact;
            continue;
        }
        mpz_class n(want[0]);
        auto printed_period = parse_printed(n, want[3]);
        auto conj = conjugates(parse_printed(n, got[3]));
        if (std::find(conj.begin(), conj.end(), printed_period) != conj.end()) {
            ++c.period_conjugate;
            c.conjugate_rows.push_back(want[0]);
        } else {
            c.unmatched.push_back(want[0]);
        }
    }
    for (auto const& [n, row] : ours)
        if (!printed_n.count(n)) c.extra.push_back(n);
    std::sort(c.extra.begin(), c.extra.end(), [](auto const& a, auto const& b) { return std::stol(a) < std::stol(b); });
    return c;
}

std::string join(std::vector<std::string> const& xs)
{
    std::string s;
    for (auto const& x : xs) s += (s.empty() ? "" : ",") + x;
    return s.empty() ? "none" : s;
}

std::string describe(std::string const& name, TableComparison const& c)
{
    return name + ": " + (c.exact ? "identical" : "differs") + "; emitted " + std::to_string(c.emitted) +
           " rows vs " + std::to_string(c.printed) + " printed, printed rows present " + std::to_string(c.present) +
           "/" + std::to_string(c.printed) + ", extra n=" + join(c.extra) + "; Δ/f/min poly exact " +
           std::to_string(c.columns_exact) + "/" + std::to_string(c.printed) + "; period exact " +
           std::to_string(c.period_exact) + ", other conjugate " + std::to_string(c.period_conjugate) + " (n=" +
           join(c.conjugate_rows) + "), unmatched n=" + join(c.unmatched);
}

Outcome criterion_tables()
{
    auto t0 = std::chrono::steady_clock::now();
    auto one = compare_table("delta-ne-f", golden::table_delta_ne_f);
    auto two = compare_table("mod27", golden::table_mod27);
    double s = seconds_since(t0);

    // printed n=228 entry has a stray factor 3: not an algebraic integer
    auto misprint = parse_printed(228, "(1/9)(3ρ²-230ρ-5)");
    bool misprint_non_integral = !min_poly(misprint).is_integral();
    auto corrected = parse_printed(228, "(1/9)(ρ²-230ρ-5)");
    bool corrected_matches = min_poly(corrected) == MonicCubic{1, -650, -289} &&
                             format_element(period_identity(228).period_element) == "(1/9)(ρ²-230ρ-5)";

    bool passed = one.exact && two.exact && s < table_seconds;
    return {passed, describe("table (1)", one) + " | " + describe("table (2)", two) +
                        " | n=228 printed period non-integral: " + (misprint_non_integral ? "yes" : "no") +
                        ", corrected period matches: " + (corrected_matches ? "yes" : "no") + " | " +
                        fmt_seconds(s) + " < " + fmt_seconds(table_seconds)};
}

struct OracleCounts {
    long fields = 0, generators = 0, trace_ok = 0, disc_ok = 0, basis_ok = 0, closed_ok = 0;
    double seconds = 0;
};

OracleCounts run_oracle_suite()
{
    OracleCounts c;
    auto t0 = std::chrono::steady_clock::now();
    for (long n = -range; n <= range; ++n) {
        if (!is_tame(n)) continue;
        ++c.fields;
        auto inv = conductor(n);
        mpq_class f2 = inv.conductor * inv.conductor;
        auto b = build_integral_basis(n);
        c.basis_ok += trace_form_disc(FieldElement::rational(n, 1), b.phi, b.psi) == f2;
        for (auto const& g : all_generators(n)) {
            ++c.generators;
            mpq_class tr = trace(g.element);
            c.trace_ok += tr == 1 || tr == -1;
            auto conj = conjugates(g.element);
            c.disc_ok += trace_form_disc(conj[0], conj[1], conj[2]) == f2;
            bool plus = min_poly_closed(n, g.pair.a0, g.pair.a1, g.m, g.epsilon, 1) == min_poly(g.element);
            bool minus = min_poly_closed(n, g.pair.a0, g.pair.a1, g.m, g.epsilon, -1) == min_poly(-g.element);
            c.closed_ok += plus && minus;
        }
    }
    c.seconds = seconds_since(t0);
    return c;
}

Outcome criterion_disc(OracleCounts const& c)
{
    bool ok = c.trace_ok == c.generators && c.disc_ok == c.generators && c.basis_ok == c.fields &&
              c.seconds < oracle_seconds;
    return {ok, std::to_string(c.fields) + " tame n with |n| <= " + std::to_string(range) + ", trace ±1 " +
                    std::to_string(c.trace_ok) + "/" + std::to_string(c.generators) + ", generator disc = f² " +
                    std::to_string(c.disc_ok) + "/" + std::to_string(c.generators) + ", basis disc = f² " +
                    std::to_string(c.basis_ok) + "/" + std::to_string(c.fields) + ", " + fmt_seconds(c.seconds) +
                    " < " + fmt_seconds(oracle_seconds)};
}

Outcome criterion_closed_form(OracleCounts const& c)
{
    bool ok = c.closed_ok == c.generators && c.seconds < oracle_seconds;
    return {ok, "F+ and F- equal conjugate-based minimal polynomials for " + std::to_string(c.closed_ok) + "/" +
                    std::to_string(c.generators) + " generators (same run as 4)"};
}

Outcome criterion_numeric()
{
    auto t0 = std::chrono::steady_clock::now();
    int passed = 0, total = 0;
    long worst = -1000000;
    std::vector<std::string> failed;
    for (auto const* table : {&golden::table_delta_ne_f, &golden::table_mod27}) {
        for (auto const& row : *table) {
            auto n = cells(row)[0];
            ++total;
            auto check = numeric_verify(mpz_class(n), numeric_bits);
            long lg = check.residual.log2_floor();
            worst = std::max(worst, lg);
            if (check.passed() && check.bits == numeric_bits && lg < residual_log2_bound)
                ++passed;
            else
                failed.push_back(n);
        }
    }
    double s = seconds_since(t0);
    return {passed == total && s < numeric_seconds,
            std::to_string(passed) + "/" + std::to_string(total) + " rows at " + std::to_string(numeric_bits) +
                " bits, worst residual < 2^" + std::to_string(worst + 1) + " (bound 2^" +
                std::to_string(residual_log2_bound) + "), failed n=" + join(failed) + ", " + fmt_seconds(s) +
                " < " + fmt_seconds(numeric_seconds)};
}

Outcome criterion_properties()
{
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> broken;
    auto check = [&](std::string const& name, std::function<bool()> const& body) {
        if (!body()) broken.push_back(name);
    };

    check("primes of Δ are 0 or 1 mod 3", [] {
        for (long n = -range; n <= range; ++n)
            for (auto const& pp : factor(delta(n)).factors)
                if (pp.prime % 3 == 2) return false;
        return true;
    });
    check("root identities", [] {
        for (long n = -range; n <= range; ++n) {
            auto r0 = FieldElement::rho(n);
            auto r1 = apply_sigma(r0);
            auto r2 = apply_sigma(r1);
            auto q = [&](mpz_class const& v) { return FieldElement::rational(n, v); };
            auto s1 = r0 * r0 * r1 + r1 * r1 * r2 + r2 * r2 * r0;
            auto s2 = r0 * r0 * r2 + r1 * r1 * r0 + r2 * r2 * r1;
            mpz_class nn = n;
            if (s1 != q(3) || s2 != q(-nn * nn - 3 * nn - 6) || s1 - s2 != q(delta(n))) return false;
            if (r1 != r0 * r0 - r0 * mpq_class(nn + 1) - q(2)) return false;
            if (r2 != -(r0 * r0) + r0 * mpq_class(nn) + q(nn + 2)) return false;
        }
        return true;
    });
    check("symmetric-function closed forms on 1000 random triples", [] {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<long> num(-60, 60), den(1, 12), nd(-1000, 1000);
        for (int i = 0; i < 1000; ++i) {
            mpz_class n = nd(rng);
            mpq_class r1 = make_rational(num(rng), den(rng));
            mpq_class r2 = make_rational(num(rng), den(rng));
            mpq_class r3 = make_rational(num(rng), den(rng));
            auto rho = FieldElement::rho(n);
            auto x = conjugates(rho * r1 + apply_sigma(rho) * r2 + FieldElement::rational(n, r3));
            auto s = lemma42(r1, r2, r3, n);
            if (FieldElement::rational(n, s.e1) != x[0] + x[1] + x[2]) return false;
            if (FieldElement::rational(n, s.e2) != x[0] * x[1] + x[1] * x[2] + x[2] * x[0]) return false;
            if (FieldElement::rational(n, s.e3) != x[0] * x[1] * x[2]) return false;
        }
        return true;
    });
    check("mirror symmetry", [] {
        for (long n = -range; n <= range; ++n) {
            auto a = conductor(n), b = conductor(-n - 3);
            if (a.conductor != b.conductor || a.discriminant != b.discriminant) return false;
        }
        return true;
    });
    check("linear NIB iff Δ square-free", [] {
        for (long n = -range; n <= range; ++n) {
            if (n % 3 == 0) continue;
            bool linear = false;
            for (auto const& g : all_generators(n)) {
                auto const& x = g.element;
                if (x[2] != 0 || x[1].get_den() != 1 || x[0].get_den() != 1) continue;
                mpz_class w = x[1].get_num();
                if (w * w != 1 || x[0] != make_rational(w * (legendre3(n) - n), 3)) return false;
                linear = true;
            }
            if (linear != is_square_free(delta(n))) return false;
        }
        return true;
    });
    check("f/g/h forms agree with the general pipeline", [] {
        for (long n = -range; n <= range; ++n) {
            bool hypotheses = n % 3 != 0 ? is_square_free(delta(n))
                                         : mod(n, 27) == 12 && is_square_free(delta(n) / 27);
            auto s = special_forms(n);
            if (s.has_value() != hypotheses) return false;
            if (!s) continue;
            auto gens = all_generators(n);
            bool found = false;
            for (auto const& g : gens) {
                if (g.element != s->generator) continue;
                found = true;
                if (s->plus != min_poly(g.element) || s->minus != min_poly(-g.element)) return false;
            }
            if (!found) return false;
            auto c = corollary_forms(n);
            if (!c) return false;
            auto r = period_identity(n);
            if (std::find(r.periods.begin(), r.periods.end(), c->period) == r.periods.end()) return false;
            if (c->min_poly != r.min_poly) return false;
        }
        return true;
    });

    double s = seconds_since(t0);
    return {broken.empty() && s < property_seconds,
            "6 suites over |n| <= " + std::to_string(range) + ", broken: " + join(broken) + ", " + fmt_seconds(s) +
                " < " + fmt_seconds(property_seconds)};
}

Outcome criterion_negative()
{
    int wild_ok = 0, wild_total = 0;
    for (long n : {0L, 3L, 9L, 30L}) {
        for (std::string cmd : {"nib", "gaussian"}) {
            ++wild_total;
            wild_ok += cli({cmd, std::to_string(n)}).code == exit_no_nib;
        }
    }

    std::vector<long> ns = {286, 66, 12, 5, 1, -5, 39, 235, 498, 201};
    std::mt19937_64 rng(8);
    while (ns.size() < 40) {
        long n = static_cast<long>(rng() % 20001) - 10000;
        if (is_tame(n)) ns.push_back(n);
    }
    int rejected = 0, total = 0, clean_ok = 0, clean_total = 0;
    for (long n : ns) {
        for (auto const& g : all_generators(n)) {
            ++clean_total;
            clean_ok += verify_nib(g).all();
            for (int field = 0; field < 4; ++field) {
                for (int delta : {-1, 1}) {
                    auto bad = g;
                    switch (field) {
                    case 0: bad.pair.a0 += delta; break;
                    case 1: bad.pair.a1 += delta; break;
                    case 2: bad.m += delta; break;
                    case 3: bad.epsilon += delta; break;
                    }
                    ++total;
                    try {
                        rejected += !verify_nib(bad).all();
                    } catch (std::exception const&) {
                        ++rejected;
                    }
                }
            }
        }
    }
    bool ok = wild_ok == wild_total && rejected == total && clean_ok == clean_total;
    return {ok, "wild n=0,3,9,30 exit 3 for nib/gaussian " + std::to_string(wild_ok) + "/" +
                    std::to_string(wild_total) + "; ±1 corruptions of a0,a1,m,ε rejected " +
                    std::to_string(rejected) + "/" + std::to_string(total) + "; uncorrupted accepted " +
                    std::to_string(clean_ok) + "/" + std::to_string(clean_total)};
}

}  // namespace

int main()
{
    std::vector<std::pair<int, std::function<Outcome()>>> criteria;
    criteria.emplace_back(1, [] { return nib_golden(286, golden::nib_286); });
    criteria.emplace_back(2, [] { return nib_golden(66, golden::nib_66); });
    criteria.emplace_back(3, criterion_tables);
    OracleCounts oracle;
    criteria.emplace_back(4, [&] {
        oracle = run_oracle_suite();
        return criterion_disc(oracle);
    });
    criteria.emplace_back(5, [&] { return criterion_closed_form(oracle); });
    criteria.emplace_back(6, criterion_numeric);
    criteria.emplace_back(7, criterion_properties);
    criteria.emplace_back(8, criterion_negative);

    int passed = 0, unexpected = 0;
    for (auto const& [id, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (std::exception const& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        passed += o.passed;
        bool known = known_unattainable.count(id) > 0;
        if (!o.passed && !known) ++unexpected;
        std::cout << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL")
                  << (!o.passed && known ? " (known unattainable)" : "") << " - " << o.detail << std::endl;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass";
    if (unexpected) std::cout << ", " << unexpected << " unexpected failure(s)";
    std::cout << std::endl;
    return unexpected ? 1 : 0;
}
