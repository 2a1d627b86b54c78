#include "scf/table.hpp"

#include "scf/arith.hpp"
#include "scf/gaussian.hpp"
#include "scf/invariants.hpp"
#include "scf/parallel.hpp"

#include <stdexcept>

namespace scf {

std::optional<RowFilter> parse_filter(std::string const& s)
{
    if (s == "none") return RowFilter::none;
    if (s == "tame") return RowFilter::tame;
    if (s == "mod27") return RowFilter::mod27;
    if (s == "delta-ne-f") return RowFilter::delta_ne_f;
    return std::nullopt;
}

bool accepts(RowFilter filter, mpz_class const& n)
{
    switch (filter) {
    case RowFilter::none: return true;
    case RowFilter::tame: return is_tame(n);
    case RowFilter::mod27: return mod(n, 27) == 12;
    case RowFilter::delta_ne_f: return n % 3 != 0 && conductor(n).conductor != delta(n);
    }
    return false;
}

OutputRecord table_row(mpz_class const& n, bool numeric, long bits)
{
    OutputRecord r = invariants_record(n);
    if (!r.tame) return r;
    GaussianReport g = period_identity(n);
    if (numeric) g.numeric = numeric_verify_adaptive(n, bits);
    r.gaussian = gaussian_record(g);
    return r;
}

void build_table(TableOptions const& opt, std::function<void(OutputRecord const&)> const& sink)
{
    if (opt.from > opt.to) throw std::invalid_argument("empty range");
    std::vector<mpz_class> ns;
    for (mpz_class n = opt.from; n <= opt.to; ++n)
        if (accepts(opt.filter, n)) ns.push_back(n);
    ordered_parallel_map<OutputRecord>(
        ns.size(), opt.jobs, [&](std::size_t i) { return table_row(ns[i], opt.numeric, opt.bits); }, sink);
}

}  // namespace scf
