#pragma once

#include "scf/render.hpp"

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>

namespace scf {

enum class RowFilter {
    none,
    tame,        // 3 does not divide n, or n = 12 mod 27
    mod27,       // n = 12 mod 27
    delta_ne_f,  // 3 does not divide n and Delta_n != f
};

std::optional<RowFilter> parse_filter(std::string const& s);
bool accepts(RowFilter filter, mpz_class const& n);

struct TableOptions {
    mpz_class from, to;
    RowFilter filter = RowFilter::none;
    unsigned jobs = 1;
    bool numeric = false;  // attach numeric_verify to each tame row
    long bits = 256;
};

/// Invariants plus, for tame n, the Gaussian period report.
OutputRecord table_row(mpz_class const& n, bool numeric, long bits);

/// Rows for every accepted n in [from, to], delivered in ascending n.
void build_table(TableOptions const& opt, std::function<void(OutputRecord const&)> const& sink);

}  // namespace scf
