// peakpoly: command-line front end.
//
//   peakpoly poly    --set 2,6,10 [--json]
//   peakpoly table   --set 2,6,10 [--json]
//   peakpoly count   --set 2 --n 3 [--signed] [--json]
//   peakpoly roots   --set 4 [--json] [--csv PATH] [--tol T]
//   peakpoly verify  [--max-peak M] [--oracle-n N] [--tol T] [--workers K] [--out PATH]
//   peakpoly dataset [--max-peak M] [--out PATH]
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 inconclusive numerics.

#include "peakpoly/dataset.hpp"
#include "peakpoly/peakpoly.hpp"
#include "peakpoly/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace peakpoly;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;

struct Options {
    std::string set;
    int n = 0;
    bool signed_count = false;
    bool as_json = false;
    std::string csv_path;
    std::string out_path;
    double tol = default_region_tol;
    int max_peak = 10;
    int oracle_n = 8;
    int workers = 1;
};

json json_integer(const Integer& z) {
    if (auto v = to_int64(z)) return *v;
    return z.get_str();
}

json json_integers(const std::vector<Integer>& zs) {
    json a = json::array();
    for (const auto& z : zs) a.push_back(json_integer(z));
    return a;
}

std::string fmt_double(double x) {
    if (x == 0) x = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

PeakSet require_admissible_nonempty(const std::string& text) {
    PeakSet s = PeakSet::parse(text);
    if (s.empty() || !s.is_admissible())
        throw precondition_error("set " + s.to_string() +
                                 " must be nonempty and admissible (min >= 2, no consecutive elements)");
    return s;
}

/// Opens --out PATH, or returns stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish(const std::string& path) {
        if (file_) {
            file_->flush();
            if (!*file_) throw std::runtime_error("write to '" + path + "' failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_poly(const Options& o) {
    const PeakSet s = PeakSet::parse(o.set);
    const BinomialPoly p = peak_poly(s);
    const RationalPoly q = to_monomial(p);
    if (o.as_json) {
        json mono = json::array();
        for (const auto& c : q.coeffs()) mono.push_back({json_integer(c.get_num()), json_integer(c.get_den())});
        std::cout << json{{"S", s.elements()},
                          {"admissible", s.is_admissible()},
                          {"degree", p.is_zero() ? json(nullptr) : json(p.degree())},
                          {"poly_binomial_c0", json_integers(p.coeffs())},
                          {"poly_monomial", mono}}
                         .dump()
                  << '\n';
        return exit_ok;
    }
    std::cout << "S = " << s << (s.is_admissible() ? "" : " (not admissible)") << '\n';
    std::cout << "binomial basis at 0:";
    for (const auto& c : p.coeffs()) std::cout << ' ' << c;
    std::cout << "\np_S(x) = " << q << '\n';
    return exit_ok;
}

int cmd_table(const Options& o) {
    const PeakSet s = require_admissible_nonempty(o.set);
    const DifferenceTable t = difference_table(s);
    if (o.as_json) {
        json rows = json::array();
        for (std::size_t j = 0; j < t.size(); ++j) rows.push_back(json_integers(t.row(j)));
        std::cout << json{{"S", s.elements()}, {"rows", rows}}.dump() << '\n';
        return exit_ok;
    }
    std::size_t width = 3;
    for (std::size_t j = 0; j < t.size(); ++j)
        for (const auto& v : t.row(j)) width = std::max(width, v.get_str().size());
    ++width;
    std::cout << "Forward differences of p_" << s << "(x); row j, column k\n";
    std::cout << std::setw(4) << "j,k" << " |";
    for (std::size_t k = 0; k < t.size(); ++k) std::cout << std::setw(static_cast<int>(width)) << k;
    std::cout << '\n';
    for (std::size_t j = 0; j < t.size(); ++j) {
        std::cout << std::setw(4) << j << " |";
        for (const auto& v : t.row(j)) std::cout << std::setw(static_cast<int>(width)) << v.get_str();
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_count(const Options& o) {
    const PeakSet s = PeakSet::parse(o.set);
    if (o.n < 1) throw precondition_error("--n must be >= 1");
    const Integer c = o.signed_count ? count_signed(s, o.n) : count_perms(s, o.n);
    if (o.as_json)
        std::cout << json{{"S", s.elements()}, {"n", o.n}, {"signed", o.signed_count}, {"count", json_integer(c)}}.dump()
                  << '\n';
    else
        std::cout << c << '\n';
    return exit_ok;
}

int cmd_roots(const Options& o) {
    const PeakSet s = require_admissible_nonempty(o.set);
    const RootReport rep = root_report(s);
    const auto verdicts = verify(s, VerifyOptions{default_residual_tol, o.tol});

    if (!o.csv_path.empty()) {
        std::ofstream csv(o.csv_path);
        if (!csv) throw std::runtime_error("cannot open '" + o.csv_path + "' for writing");
        csv << "re,im,kind\n";
        for (long r : rep.exact_integer_roots) csv << r << ",0,exact-integer\n";
        for (const auto& c : rep.residual_roots)
            csv << fmt_double(c.value.real()) << ',' << fmt_double(c.value.imag()) << ",numerical\n";
        if (!csv) throw std::runtime_error("write to '" + o.csv_path + "' failed");
    }

    if (o.as_json) {
        json roots = json::array();
        for (long r : rep.exact_integer_roots) roots.push_back({{"re", r}, {"im", 0}, {"kind", "exact-integer"}});
        for (const auto& c : rep.residual_roots)
            roots.push_back({{"re", c.value.real()},
                             {"im", c.value.imag()},
                             {"kind", "numerical"},
                             {"residual", c.residual}});
        json checks = json::object();
        for (const auto& v : verdicts) checks[std::string(to_string(v.check))] = to_json(CheckResult::from(v));
        std::cout << json{{"S", s.elements()}, {"certified", rep.certified}, {"roots", roots}, {"checks", checks}}.dump()
                  << '\n';
    } else {
        std::cout << "S = " << s << ", degree " << s.max() - 1 << '\n';
        std::cout << "exact integer roots:";
        for (long r : rep.exact_integer_roots) std::cout << ' ' << r;
        std::cout << "\nnumerical roots (" << (rep.certified ? "certified" : "NOT certified") << "):\n";
        for (const auto& c : rep.residual_roots)
            std::cout << "  " << fmt_double(c.value.real()) << (c.value.imag() < 0 ? " - " : " + ")
                      << fmt_double(std::abs(c.value.imag())) << "i   |p| = " << c.residual << '\n';
        for (const auto& v : verdicts) {
            std::cout << "  " << to_string(v.check) << ": " << to_string(v.outcome);
            if (v.witness) std::cout << " (" << *v.witness << ")";
            std::cout << '\n';
        }
    }
    return rep.converged ? exit_ok : 3;
}

int cmd_verify(const Options& o) {
    RunConfig cfg;
    cfg.max_peak = o.max_peak;
    cfg.oracle_n_max = o.oracle_n;
    cfg.tolerances.region_tol = o.tol;
    cfg.workers = o.workers;
    cfg.out_path = o.out_path;
    cfg.validate();

    Output out(o.out_path);
    auto& os = out.stream();
    const SweepSummary summary = run_sweep(
        cfg, [&](const VerificationReport& r) { os << to_json(r).dump() << '\n'; },
        [&](const CheckResult& g) { os << json{{"global", g.name}, {"result", to_json(g)}}.dump() << '\n'; });
    os << summary.to_json().dump() << '\n';
    out.finish(o.out_path);

    std::cerr << "verified " << summary.sets << " peak sets (max(S) <= " << cfg.max_peak
              << ", oracle n <= " << cfg.oracle_n_max << ")\n";
    for (const auto& [name, by_outcome] : summary.counts) {
        std::cerr << "  " << std::left << std::setw(32) << name;
        for (const auto& [outcome, count] : by_outcome) std::cerr << ' ' << outcome << '=' << count;
        std::cerr << '\n';
    }
    return summary.exit_code();
}

int cmd_dataset(const Options& o) {
    if (o.max_peak < 3) throw precondition_error("--max-peak must be >= 3");
    Output out(o.out_path);
    write_dataset(out.stream(), o.max_peak);
    out.finish(o.out_path);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Peak polynomials of permutation peak sets: exact construction, counting, roots and verification"};
    app.require_subcommand(1);
    Options o;

    auto* poly = app.add_subcommand("poly", "Print p_S(x) in the binomial basis at 0 and the monomial basis");
    poly->add_option("--set", o.set, "Peak set as comma-separated integers")->required();
    poly->add_flag("--json", o.as_json, "Machine-readable output");

    auto* table = app.add_subcommand("table", "Print the forward-difference table (Delta^j p_S)(k), 0 <= j,k <= max(S)");
    table->add_option("--set", o.set, "Peak set")->required();
    table->add_flag("--json", o.as_json, "Machine-readable output");

    auto* count = app.add_subcommand("count", "Count permutations of [n] with peak set S");
    count->add_option("--set", o.set, "Peak set")->required();
    count->add_option("--n", o.n, "Permutation length")->required();
    count->add_flag("--signed", o.signed_count, "Count signed permutations in B_n");
    count->add_flag("--json", o.as_json, "Machine-readable output");

    auto* roots = app.add_subcommand("roots", "Exact integer roots, certified complex roots and conjecture checks");
    roots->add_option("--set", o.set, "Peak set")->required();
    roots->add_flag("--json", o.as_json, "Machine-readable output");
    roots->add_option("--csv", o.csv_path, "Write root scatter data (re,im,kind) to PATH");
    roots->add_option("--tol", o.tol, "Region/realness tolerance")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Verify identities and conjectures for all admissible S");
    verify_cmd->add_option("--max-peak", o.max_peak, "Largest max(S) to sweep")->check(CLI::Range(3, 40));
    verify_cmd->add_option("--oracle-n", o.oracle_n, "Largest n for brute-force census comparisons");
    verify_cmd->add_option("--tol", o.tol, "Region/realness tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", o.out_path, "Write JSON lines to PATH instead of stdout");

    auto* dataset = app.add_subcommand("dataset", "Emit the newline-delimited JSON data set");
    dataset->add_option("--max-peak", o.max_peak, "Largest max(S)")->check(CLI::Range(3, 40));
    dataset->add_option("--out", o.out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*poly) return cmd_poly(o);
        if (*table) return cmd_table(o);
        if (*count) return cmd_count(o);
        if (*roots) return cmd_roots(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*dataset) return cmd_dataset(o);
    } catch (const precondition_error& e) {
        std::cerr << "peakpoly: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "peakpoly: error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
