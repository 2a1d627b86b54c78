#pragma once

#include "scf/arith.hpp"
#include "scf/cubic_field.hpp"
#include "scf/eisenstein.hpp"
#include "scf/gaussian.hpp"
#include "scf/invariants.hpp"
#include "scf/nib.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace scf {

/// "7^3·241"; "1" for the empty factorization.
std::string format_factorization(Factorization const& f);

/// "(1/49)(3ρ²-859ρ-499)", "-(1/117)(2ρ²-127ρ-163)", "-ρ-5"
std::string format_element(FieldElement const& a);

/// "{2,3}"
std::string format_pair(Pair const& p);

/// Rational coordinates r0, r1, r2 as "p" or "p/q".
std::array<std::string, 3> coordinate_strings(FieldElement const& a);

struct GeneratorRecord {
    std::string pair;
    mpz_class a0, a1, m;
    int epsilon = 0;
    std::string element;
    std::array<std::string, 3> coordinates;
    std::string min_poly;
    std::array<std::string, 4> min_poly_coefficients;

    bool operator==(GeneratorRecord const&) const = default;
};

struct NumericRecord {
    long bits = 0;
    bool passed = false;
    std::string residual;  // "1.76e-87"

    bool operator==(NumericRecord const&) const = default;
};

struct GaussianRecord {
    int prime_count = 0;
    int epsilon = 0;
    int sign = 0;
    std::string element;
    std::array<std::string, 3> coordinates;
    std::string min_poly;
    std::array<std::string, 4> min_poly_coefficients;
    std::optional<NumericRecord> numeric;

    bool operator==(GaussianRecord const&) const = default;
};

struct OutputRecord {
    mpz_class n;
    mpz_class delta;
    std::string delta_factored;
    mpz_class d, e, c;
    int gamma = 1;
    mpz_class conductor;
    std::string conductor_factored;
    mpz_class discriminant;
    bool tame = false;
    std::vector<GeneratorRecord> generators;
    std::optional<GaussianRecord> gaussian;

    bool operator==(OutputRecord const&) const = default;
};

OutputRecord invariants_record(mpz_class const& n);
GeneratorRecord generator_record(NibGenerator const& g);
GaussianRecord gaussian_record(GaussianReport const& r);

void to_json(nlohmann::json& j, OutputRecord const& r);
void from_json(nlohmann::json const& j, OutputRecord& r);

/// RFC 4180 field quoting.
std::string csv_field(std::string const& s);
std::string csv_row(std::vector<std::string> const& fields);

std::string md_row(std::vector<std::string> const& cells);

}  // namespace scf
