#include "scf/cli.hpp"

#include "scf/errors.hpp"
#include "scf/gaussian.hpp"
#include "scf/integral_basis.hpp"
#include "scf/invariants.hpp"
#include "scf/nib.hpp"
#include "scf/parallel.hpp"
#include "scf/render.hpp"
#include "scf/table.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

namespace scf {

namespace {

enum class Format { md, json, csv };

struct Globals {
    Format format = Format::md;
    long precision = 256;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

mpz_class parse_n(std::string const& s)
{
    mpz_class n;
    if (s.empty() || n.set_str(s, 10) != 0) throw CLI::ValidationError("n", "not an integer: " + s);
    return n;
}

std::string numeric_summary(NumericCheck const& c)
{
    return std::string("verify=") + (c.passed() ? "pass" : "fail") + ", bits=" + std::to_string(c.bits) +
           ", residual=" + c.residual.str(3);
}

int cmd_analyze(Globals const& g, mpz_class const& n, std::ostream& out)
{
    OutputRecord r = invariants_record(n);
    switch (g.format) {
    case Format::json: out << nlohmann::json(r).dump(2) << "\n"; break;
    case Format::csv:
        out << csv_row({"n", "delta", "delta_factored", "d", "e", "c", "gamma", "conductor", "discriminant", "tame"});
        out << csv_row({r.n.get_str(), r.delta.get_str(), r.delta_factored, r.d.get_str(), r.e.get_str(),
                        r.c.get_str(), std::to_string(r.gamma), r.conductor.get_str(), r.discriminant.get_str(),
                        r.tame ? "true" : "false"});
        break;
    case Format::md:
        out << "n=" << r.n << "\n";
        out << "Δ=" << r.delta << "=" << r.delta_factored << "\n";
        out << "d=" << r.d << ", e=" << r.e << ", c=" << r.c << "\n";
        out << "γ=" << r.gamma << "\n";
        out << "f=" << r.conductor << "\n";
        out << "D=" << r.discriminant << "\n";
        out << (r.tame ? "tame=true, NIB exists" : "tame=false, no NIB") << "\n";
        break;
    }
    return exit_ok;
}

int cmd_nib(Globals const& g, mpz_class const& n, std::ostream& out)
{
    OutputRecord r = invariants_record(n);
    for (auto const& gen : all_generators(n)) r.generators.push_back(generator_record(gen));
    switch (g.format) {
    case Format::json: out << nlohmann::json(r).dump(2) << "\n"; break;
    case Format::csv:
        out << csv_row({"pair", "a0", "a1", "epsilon", "m", "element", "min_poly"});
        for (auto const& x : r.generators)
            out << csv_row({x.pair, x.a0.get_str(), x.a1.get_str(), std::to_string(x.epsilon), x.m.get_str(),
                            x.element, x.min_poly});
        break;
    case Format::md:
        out << md_row({"{a0,a1}", "generator of NIB", "minimal polynomial"});
        out << md_row({"---", "---", "---"});
        for (auto const& x : r.generators) out << md_row({x.pair, x.element, x.min_poly});
        break;
    }
    return exit_ok;
}

int cmd_gaussian(Globals const& g, mpz_class const& n, bool verify, std::ostream& out)
{
    GaussianReport rep = period_identity(n);
    if (verify) rep.numeric = numeric_verify_adaptive(n, g.precision);
    OutputRecord r = invariants_record(n);
    r.gaussian = gaussian_record(rep);
    auto const& gr = *r.gaussian;
    switch (g.format) {
    case Format::json: out << nlohmann::json(r).dump(2) << "\n"; break;
    case Format::csv: {
        std::vector<std::string> head{"n", "prime_count", "epsilon", "sign", "element", "min_poly"};
        std::vector<std::string> row{r.n.get_str(), std::to_string(gr.prime_count), std::to_string(gr.epsilon),
                                     std::to_string(gr.sign), gr.element, gr.min_poly};
        if (gr.numeric) {
            head.insert(head.end(), {"verify", "bits", "residual"});
            row.insert(row.end(), {gr.numeric->passed ? "pass" : "fail", std::to_string(gr.numeric->bits),
                                   gr.numeric->residual});
        }
        out << csv_row(head) << csv_row(row);
        break;
    }
    case Format::md:
        out << "n=" << r.n << "\n";
        out << "f=" << r.conductor_factored << ", t=" << gr.prime_count << ", ε=" << gr.epsilon
            << ", sign=" << gr.sign << "\n";
        out << "η=" << gr.element << "\n";
        out << "minimal polynomial: " << gr.min_poly << "\n";
        if (rep.numeric) out << numeric_summary(*rep.numeric) << "\n";
        break;
    }
    if (rep.numeric && !rep.numeric->passed()) return exit_verify_failed;
    return exit_ok;
}

int cmd_table(Globals const& g, TableOptions opt, std::ostream& out)
{
    opt.jobs = g.jobs;
    opt.bits = g.precision;
    bool failed = false;
    bool first = true;
    auto cells = [&](OutputRecord const& r) {
        std::vector<std::string> c{r.n.get_str(), r.delta_factored, r.conductor_factored};
        if (r.gaussian) {
            c.push_back(r.gaussian->element);
            c.push_back(r.gaussian->min_poly);
        } else {
            c.push_back("no NIB");
            c.push_back("");
        }
        if (opt.numeric) {
            bool pass = r.gaussian && r.gaussian->numeric && r.gaussian->numeric->passed;
            if (r.gaussian && !pass) failed = true;
            c.push_back(!r.gaussian ? "" : pass ? "pass" : "fail");
        }
        return c;
    };

    std::vector<std::string> head{"n", "Δ_n", "f", "Gaussian period", "minimal polynomial"};
    if (opt.numeric) head.push_back("numeric");
    switch (g.format) {
    case Format::md:
        out << md_row(head);
        out << md_row(std::vector<std::string>(head.size(), "---"));
        break;
    case Format::csv:
        head = {"n", "delta_factored", "conductor_factored", "period", "min_poly"};
        if (opt.numeric) head.push_back("numeric");
        out << csv_row(head);
        break;
    case Format::json: out << "["; break;
    }

    build_table(opt, [&](OutputRecord const& r) {
        switch (g.format) {
        case Format::md: out << md_row(cells(r)); break;
        case Format::csv: out << csv_row(cells(r)); break;
        case Format::json:
            cells(r);
            out << (first ? "\n" : ",\n") << nlohmann::json(r).dump();
            break;
        }
        first = false;
        out.flush();
    });
    if (g.format == Format::json) out << (first ? "]\n" : "\n]\n");
    return failed ? exit_verify_failed : exit_ok;
}

struct VerifyLine {
    mpz_class n;
    bool wild = false;
    bool basis = false;
    int nib_passed = 0;
    bool period = false;
    std::optional<NumericCheck> numeric;

    bool ok() const
    {
        return wild || (basis && nib_passed == 6 && period && (!numeric || numeric->passed()));
    }
};

VerifyLine verify_one(mpz_class const& n, bool numeric, long bits)
{
    VerifyLine v;
    v.n = n;
    if (!is_tame(n)) {
        v.wild = true;
        return v;
    }
    try {
        build_integral_basis(n);
        v.basis = true;
    } catch (verification_failure const&) {
    }
    try {
        for (auto const& g : all_generators(n))
            if (verify_nib(g).all()) ++v.nib_passed;
    } catch (verification_failure const&) {
    }
    try {
        period_identity(n);
        v.period = true;
    } catch (verification_failure const&) {
    }
    if (numeric && v.period) v.numeric = numeric_verify_adaptive(n, bits);
    return v;
}

int cmd_verify(Globals const& g, std::optional<mpz_class> const& single, mpz_class from, mpz_class to, bool numeric,
               std::ostream& out)
{
    if (single) {
        require_tame(*single);
        from = to = *single;
    }
    if (from > to) throw CLI::ValidationError("--from/--to", "empty range");
    std::vector<mpz_class> ns;
    for (mpz_class n = from; n <= to; ++n) ns.push_back(n);

    bool all_ok = true;
    bool first = true;
    if (g.format == Format::csv) out << csv_row({"n", "status", "basis", "nib", "period", "numeric"});
    if (g.format == Format::json) out << "[";
    ordered_parallel_map<VerifyLine>(
        ns.size(), g.jobs, [&](std::size_t i) { return verify_one(ns[i], numeric, g.precision); },
        [&](VerifyLine const& v) {
            all_ok = all_ok && v.ok();
            std::string status = v.wild ? "wild" : v.ok() ? "ok" : "FAIL";
            std::string basis = v.wild ? "" : v.basis ? "ok" : "fail";
            std::string nib = v.wild ? "" : std::to_string(v.nib_passed) + "/6";
            std::string period = v.wild ? "" : v.period ? "ok" : "fail";
            std::string num = !v.numeric ? "" : v.numeric->passed() ? "pass" : "fail";
            switch (g.format) {
            case Format::csv: out << csv_row({v.n.get_str(), status, basis, nib, period, num}); break;
            case Format::json: {
                nlohmann::json j{{"n", v.n.get_str()}, {"status", status}};
                if (!v.wild) {
                    j["basis"] = v.basis;
                    j["nib_passed"] = v.nib_passed;
                    j["period"] = v.period;
                }
                if (v.numeric)
                    j["numeric"] = {{"bits", v.numeric->bits},
                                    {"passed", v.numeric->passed()},
                                    {"residual", v.numeric->residual.str(3)}};
                out << (first ? "\n" : ",\n") << j.dump();
                break;
            }
            case Format::md:
                out << "n=" << v.n << " " << status;
                if (!v.wild) out << " basis=" << basis << " nib=" << nib << " period=" << period;
                if (v.numeric) out << " numeric=" << num << " residual=" << v.numeric->residual.str(3);
                out << "\n";
                break;
            }
            first = false;
        });
    if (g.format == Format::json) out << (first ? "]\n" : "\n]\n");
    return all_ok ? exit_ok : exit_verify_failed;
}

Format parse_format(std::string const& s)
{
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::md;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simplest cubic fields: invariants, normal integral bases and Gaussian periods", "scf"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string format = "md";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"md", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--precision", g.precision, "Working precision in bits for numeric checks")
        ->check(CLI::Range(64L, 1L << 20))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads for range commands")->check(CLI::PositiveNumber);

    std::string n_text;
    auto* analyze = app.add_subcommand("analyze", "Discriminant, conductor and tameness of L_n");
    analyze->add_option("n", n_text, "Field parameter")->required();

    auto* nib = app.add_subcommand("nib", "The six normal integral basis generators of L_n");
    nib->add_option("n", n_text, "Field parameter")->required();

    bool verify_flag = false;
    auto* gaussian = app.add_subcommand("gaussian", "Gaussian periods of L_n as NIB generators");
    gaussian->add_option("n", n_text, "Field parameter")->required();
    gaussian->add_flag("--verify", verify_flag, "Check against periods computed numerically");

    std::string from_text, to_text, filter_text = "none";
    auto* table = app.add_subcommand("table", "Gaussian period table over a range of n");
    table->add_option("--from", from_text, "First n")->required();
    table->add_option("--to", to_text, "Last n")->required();
    table->add_option("--filter", filter_text, "Row filter")
        ->check(CLI::IsMember({"none", "tame", "mod27", "delta-ne-f"}))
        ->capture_default_str();
    table->add_flag("--verify", verify_flag, "Attach a numeric check to every row");

    bool no_numeric = false;
    auto* verify = app.add_subcommand("verify", "Run every exact and numeric check for n or a range");
    verify->add_option("n", n_text, "Field parameter");
    verify->add_option("--from", from_text, "First n");
    verify->add_option("--to", to_text, "Last n");
    verify->add_flag("--no-numeric", no_numeric, "Skip the numeric period check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    g.format = parse_format(format);

    try {
        if (analyze->parsed()) return cmd_analyze(g, parse_n(n_text), out);
        if (nib->parsed()) return cmd_nib(g, parse_n(n_text), out);
        if (gaussian->parsed()) return cmd_gaussian(g, parse_n(n_text), verify_flag, out);
        if (table->parsed()) {
            TableOptions opt;
            opt.from = parse_n(from_text);
            opt.to = parse_n(to_text);
            if (opt.from > opt.to) {
                err << "error: --from " << opt.from << " exceeds --to " << opt.to << "\n";
                return exit_usage;
            }
            opt.filter = *parse_filter(filter_text);
            opt.numeric = verify_flag;
            return cmd_table(g, opt, out);
        }
        if (verify->parsed()) {
            std::optional<mpz_class> single;
            if (!n_text.empty()) single = parse_n(n_text);
            if (!single && (from_text.empty() || to_text.empty())) {
                err << "error: verify needs n or both --from and --to\n";
                return exit_usage;
            }
            mpz_class from = single ? *single : parse_n(from_text);
            mpz_class to = single ? *single : parse_n(to_text);
            return cmd_verify(g, single, from, to, !no_numeric, out);
        }
    } catch (CLI::ValidationError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (wild_ramification const& e) {
        err << "error: " << e.what() << "\n";
        return exit_no_nib;
    } catch (verification_failure const& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verify_failed;
    } catch (precision_insufficient const& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verify_failed;
    }
    return exit_usage;
}

}  // namespace scf
