#include "scf/render.hpp"


namespace scf {

std::string format_factorization(Factorization const& f)
{
    if (f.factors.empty()) return "1";
    std::string out;
    for (auto const& pp : f.factors) {
        if (!out.empty()) out += "·";
        out += pp.prime.get_str();
        if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out;
}

namespace {

// polynomial in rho with integer coefficients, highest degree first
std::string rho_polynomial(std::array<mpz_class, 3> const& v)
{
    static char const* const monomial[3] = {"", "ρ", "ρ²"};
    std::string out;
    for (int i = 2; i >= 0; --i) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        mpz_class a = abs(v[i]);
        if (a != 1 || i == 0) out += a.get_str();
        out += monomial[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_element(FieldElement const& a)
{
    mpz_class den = a.denominator();
    auto v = a.numerators();
    int lead = v[2] != 0 ? 2 : v[1] != 0 ? 1 : 0;
    if (den == 1) return rho_polynomial(v);

    std::string sign;
    if (v[lead] < 0) {
        sign = "-";
        for (auto& x : v) x = -x;
    }
    return sign + "(1/" + den.get_str() + ")(" + rho_polynomial(v) + ")";
}

std::string format_pair(Pair const& p)
{
    return "{" + p.a0.get_str() + "," + p.a1.get_str() + "}";
}

std::array<std::string, 3> coordinate_strings(FieldElement const& a)
{
    return {a[0].get_str(), a[1].get_str(), a[2].get_str()};
}

OutputRecord invariants_record(mpz_class const& n)
{
    auto inv = conductor(n);
    auto const& dec = inv.decomposition;
    OutputRecord r;
    r.n = n;
    r.delta = dec.delta;
    r.delta_factored = format_factorization(dec.factors);
    r.d = dec.d;
    r.e = dec.e;
    r.c = dec.c;
    r.gamma = inv.gamma;
    r.conductor = inv.conductor;
    r.conductor_factored = format_factorization(inv.conductor_factors);
    r.discriminant = inv.discriminant;
    r.tame = inv.tame;
    return r;
}

GeneratorRecord generator_record(NibGenerator const& g)
{
    return {format_pair(g.pair),         g.pair.a0,
            g.pair.a1,                   g.m,
            g.epsilon,                   format_element(g.element),
            coordinate_strings(g.element), g.min_poly.str(),
            g.min_poly.coefficient_strings()};
}

GaussianRecord gaussian_record(GaussianReport const& r)
{
    GaussianRecord g;
    g.prime_count = r.prime_count;
    g.epsilon = r.epsilon;
    g.sign = r.sign;
    g.element = format_element(r.period_element);
    g.coordinates = coordinate_strings(r.period_element);
    g.min_poly = r.min_poly.str();
    g.min_poly_coefficients = r.min_poly.coefficient_strings();
    if (r.numeric) g.numeric = NumericRecord{r.numeric->bits, r.numeric->passed(), r.numeric->residual.str(3)};
    return g;
}

namespace {

mpz_class parse_int(nlohmann::json const& j)
{
    return mpz_class(j.get<std::string>());
}

}  // namespace

void to_json(nlohmann::json& j, OutputRecord const& r)
{
    j = nlohmann::json{
        {"n", r.n.get_str()},
        {"delta", r.delta.get_str()},
        {"delta_factored", r.delta_factored},
        {"d", r.d.get_str()},
        {"e", r.e.get_str()},
        {"c", r.c.get_str()},
        {"gamma", r.gamma},
        {"conductor", r.conductor.get_str()},
        {"conductor_factored", r.conductor_factored},
        {"discriminant", r.discriminant.get_str()},
        {"tame", r.tame},
    };
    auto gens = nlohmann::json::array();
    for (auto const& g : r.generators) {
        gens.push_back({
            {"pair", {g.a0.get_str(), g.a1.get_str()}},
            {"epsilon", g.epsilon},
            {"m", g.m.get_str()},
            {"element", g.element},
            {"coordinates", g.coordinates},
            {"min_poly", g.min_poly},
            {"min_poly_coefficients", g.min_poly_coefficients},
        });
    }
    j["generators"] = gens;
    if (r.gaussian) {
        auto const& g = *r.gaussian;
        nlohmann::json jg{
            {"prime_count", g.prime_count},
            {"epsilon", g.epsilon},
            {"sign", g.sign},
            {"element", g.element},
            {"coordinates", g.coordinates},
            {"min_poly", g.min_poly},
            {"min_poly_coefficients", g.min_poly_coefficients},
        };
        if (g.numeric)
            jg["numeric"] = {{"bits", g.numeric->bits}, {"passed", g.numeric->passed}, {"residual", g.numeric->residual}};
        else
            jg["numeric"] = nullptr;
        j["gaussian"] = jg;
    } else {
        j["gaussian"] = nullptr;
    }
}

void from_json(nlohmann::json const& j, OutputRecord& r)
{
    r.n = parse_int(j.at("n"));
    r.delta = parse_int(j.at("delta"));
    r.delta_factored = j.at("delta_factored").get<std::string>();
    r.d = parse_int(j.at("d"));
    r.e = parse_int(j.at("e"));
    r.c = parse_int(j.at("c"));
    r.gamma = j.at("gamma").get<int>();
    r.conductor = parse_int(j.at("conductor"));
    r.conductor_factored = j.at("conductor_factored").get<std::string>();
    r.discriminant = parse_int(j.at("discriminant"));
    r.tame = j.at("tame").get<bool>();
    r.generators.clear();
    for (auto const& jg : j.at("generators")) {
        GeneratorRecord g;
        g.a0 = parse_int(jg.at("pair").at(0));
        g.a1 = parse_int(jg.at("pair").at(1));
        g.pair = "{" + g.a0.get_str() + "," + g.a1.get_str() + "}";
        g.epsilon = jg.at("epsilon").get<int>();
        g.m = parse_int(jg.at("m"));
        g.element = jg.at("element").get<std::string>();
        g.coordinates = jg.at("coordinates").get<std::array<std::string, 3>>();
        g.min_poly = jg.at("min_poly").get<std::string>();
        g.min_poly_coefficients = jg.at("min_poly_coefficients").get<std::array<std::string, 4>>();
        r.generators.push_back(std::move(g));
    }
    r.gaussian.reset();
    if (auto it = j.find("gaussian"); it != j.end() && !it->is_null()) {
        GaussianRecord g;
        g.prime_count = it->at("prime_count").get<int>();
        g.epsilon = it->at("epsilon").get<int>();
        g.sign = it->at("sign").get<int>();
        g.element = it->at("element").get<std::string>();
        g.coordinates = it->at("coordinates").get<std::array<std::string, 3>>();
        g.min_poly = it->at("min_poly").get<std::string>();
        g.min_poly_coefficients = it->at("min_poly_coefficients").get<std::array<std::string, 4>>();
        if (auto nt = it->find("numeric"); nt != it->end() && !nt->is_null())
            g.numeric = NumericRecord{nt->at("bits").get<long>(), nt->at("passed").get<bool>(),
                                      nt->at("residual").get<std::string>()};
        r.gaussian = std::move(g);
    }
}

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_row(std::vector<std::string> const& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\r\n";
}

std::string md_row(std::vector<std::string> const& cells)
{
    std::string out = "|";
    for (auto const& c : cells) out += " " + c + " |";
    return out + "\n";
}

}  // namespace scf
