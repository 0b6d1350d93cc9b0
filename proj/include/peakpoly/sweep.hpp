#pragma once

// Batch verification over all admissible S with max(S) <= M: agreement of
// the three constructions, exact identities at integer points, gap-of-three
// structure, agreement with the enumeration oracle and the root conjectures.

#include "peakpoly/binomial_poly.hpp"
#include "peakpoly/integer.hpp"
#include "peakpoly/oracle.hpp"
#include "peakpoly/peak_core.hpp"
#include "peakpoly/peak_set.hpp"
#include "peakpoly/roots.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace peakpoly {

inline constexpr double root_translation_tol = 1e-5;

struct RunConfig {
    int max_peak = 10;
    int oracle_n_max = 8;
    VerifyOptions tolerances;
    int workers = 1;
    std::string out_path;  // empty: stdout
    std::string csv_path;

    void validate(int census_cap = oracle_cap()) const {
        if (max_peak < 3) throw precondition_error("max-peak must be >= 3");
        if (oracle_n_max < 0 || oracle_n_max > census_cap)
            throw precondition_error("oracle-n must be in 0.." + std::to_string(census_cap));
        if (workers < 1) throw precondition_error("workers must be >= 1");
        if (!(tolerances.region_tol > 0) || !(tolerances.residual_tol > 0))
            throw precondition_error("tolerances must be positive");
    }
};

struct CheckResult {
    std::string name;
    Outcome outcome = Outcome::pass;
    std::optional<std::string> witness = std::nullopt;
    bool numerical = false;

    static CheckResult from(const ConjectureVerdict& v) {
        return {std::string(to_string(v.check)), v.outcome, v.witness, v.numerical};
    }
};

struct VerificationReport {
    PeakSet set;
    std::vector<CheckResult> checks;
    /// Positions n in {m+1, m+2} where the free-index set is empty under the
    /// adopted {2..n-1} reading; the [m+2] reading never is.
    std::vector<int> free_index_reading_disagreements;

    bool has(Outcome o) const {
        return std::any_of(checks.begin(), checks.end(), [o](const CheckResult& c) { return c.outcome == o; });
    }
};

namespace identities {

namespace detail {
inline CheckResult failed(std::string name, std::string witness) {
    return {std::move(name), Outcome::fail, std::move(witness), false};
}
inline std::string at(long x, const Integer& v) { return "p(" + std::to_string(x) + ") = " + v.get_str(); }
}  // namespace detail

inline CheckResult triple_agreement(const PeakSet& s) {
    const BinomialPoly rec = peak_poly(s);
    if (peak_poly_explicit(s) != rec) return detail::failed("triple-agreement", "explicit formula differs");
    if (s.size() >= 2 && peak_poly_final_gap(s) != rec)
        return detail::failed("triple-agreement", "final-gap recursion differs");
    if (rec.degree() != s.max() - 1) return detail::failed("triple-agreement", "degree != max(S)-1");
    return {"triple-agreement"};
}

inline CheckResult root_theorems(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    for (long r : theorem_integer_roots(s))
        if (p(r) != 0) return detail::failed("root-theorems", detail::at(r, p(r)));
    return {"root-theorems"};
}

inline CheckResult special_values(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    for (int j = 0; j <= 4; ++j)
        if (special_value(s, j) != p(j))
            return detail::failed("special-values", "j=" + std::to_string(j) + ": closed form " +
                                                         special_value(s, j).get_str() + " vs " + p(j).get_str());
    return {"special-values"};
}

/// (Delta^j p)(0) = (-1)^(m+j) p(j) for j = 0..m.
inline CheckResult symmetry(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    for (int j = 0; j <= s.max(); ++j)
        if (p.coeff(static_cast<std::size_t>(j)) != sign_pow(s.max() + j) * p(j))
            return detail::failed("symmetry", "j=" + std::to_string(j));
    return {"symmetry"};
}

/// For S' = S + {m+k}: p_{S'}(m+l) = -p_S(m+l), l = 1..k-1. Tested for the
/// final gap of S itself and for extensions k = 2..4.
inline CheckResult in_gap_negation(const PeakSet& s) {
    const auto check = [](const PeakSet& base, const PeakSet& ext) -> std::optional<std::string> {
        const BinomialPoly pb = peak_poly(base), pe = peak_poly(ext);
        for (int x = base.max() + 1; x < ext.max(); ++x)
            if (pe(x) != -pb(x)) return ext.to_string() + " at " + std::to_string(x);
        return std::nullopt;
    };
    if (s.size() >= 2)
        if (auto w = check(s.without_max(), s)) return detail::failed("in-gap-negation", *w);
    for (int k = 2; k <= 4; ++k)
        if (auto w = check(s, s.with(s.max() + k))) return detail::failed("in-gap-negation", *w);
    return {"in-gap-negation"};
}

/// sum_{j=1}^{k-1} (-1)^(k-1-j) p(m+j) C(m+k, m+j) = 2 p(m+k) [k even], k = 0..6.
inline CheckResult alternating_sum(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    const int m = s.max();
    for (int k = 0; k <= 6; ++k) {
        Integer lhs = 0;
        for (int j = 1; j <= k - 1; ++j)
            lhs += sign_pow(k - 1 - j) * p(m + j) * binom(m + k, static_cast<unsigned long>(m + j));
        const Integer rhs = (k % 2 == 0) ? Integer(2 * p(m + k)) : Integer(0);
        if (lhs != rhs) return detail::failed("alternating-sum", "k=" + std::to_string(k));
    }
    return {"alternating-sum"};
}

inline CheckResult strict_growth(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    for (int j = s.max(); j <= s.max() + 5; ++j)
        if (!(p(j) < p(j + 1))) return detail::failed("strict-growth", detail::at(j, p(j)));
    return {"strict-growth"};
}

/// |p(j)| <= |p(k)| for 1 <= j < k <= m+3 with p(k) != 0, except the pair
/// (1, 3) when {2} is a proper subset of S, where p(1) = -2 p(3) = -(-2)^(|S|-1).
inline CheckResult modulus_monotonicity(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    const int top = s.max() + 3;
    const bool exception_family = s.contains(2) && s.size() > 1;
    for (int j = 1; j < top; ++j)
        for (int k = j + 1; k <= top; ++k) {
            const Integer pk = p(k);
            if (pk == 0 || abs(p(j)) <= abs(pk)) continue;
            if (exception_family && j == 1 && k == 3 && p(1) == -2 * pk && p(1) == -neg2_pow(static_cast<long>(s.size()) - 1))
                continue;
            return detail::failed("modulus-monotonicity", "j=" + std::to_string(j) + ", k=" + std::to_string(k));
        }
    return {"modulus-monotonicity"};
}

/// p(j) != 0, k >= j, p(k) = 0 implies k in S (k up to m+5).
inline CheckResult zero_location(const PeakSet& s) {
    const BinomialPoly p = peak_poly(s);
    int first_nonzero = -1;
    for (int j = 1; j <= s.max() + 5; ++j) {
        if (first_nonzero < 0 && p(j) != 0) first_nonzero = j;
        if (first_nonzero >= 0 && p(j) == 0 && !s.contains(j))
            return detail::failed("zero-location", "p(" + std::to_string(j) + ") = 0");
    }
    return {"zero-location"};
}

/// Gap-of-three split (leftmost and rightmost gap), shift identity and root
/// translation. Not applicable without a gap of three.
inline std::vector<CheckResult> gap3_structure(const PeakSet& s, const VerifyOptions& opt) {
    const auto ends = gap3_left_endpoints(s);
    if (ends.empty()) return {{"gap3-split", Outcome::not_applicable}, {"gap3-shift", Outcome::not_applicable}};
    std::vector<CheckResult> out;
    const RationalPoly p = to_monomial(peak_poly(s));

    CheckResult split{"gap3-split"};
    for (int e : {ends.front(), ends.back()})
        if (gap3_split_at(s, e).reconstruct() != p) {
            split = detail::failed("gap3-split", "reconstruction at gap " + std::to_string(e));
            break;
        }
    if (split.outcome == Outcome::pass) {
        const auto f = gap3_split(s);
        const RootReport rs = root_report(s, opt.residual_tol);
        const RootReport rr = root_report(f.right, opt.residual_tol);
        split.numerical = !rs.residual_roots.empty();
        auto moved = residual_values(rr);
        for (auto& z : moved) z += static_cast<double>(f.m + 1);
        if (!rs.converged || !rr.converged) {
            split.outcome = Outcome::inconclusive;
            split.witness = "root finder did not converge";
        } else if (!roots_match(residual_values(rs), moved, root_translation_tol)) {
            split = detail::failed("gap3-split", "residual roots are not those of S_R translated");
        }
    }
    out.push_back(split);

    CheckResult shift{"gap3-shift"};
    const Rational c = gap3_shift_constant(s);
    const RationalPoly lhs = to_monomial(peak_poly(s.shifted(1)));
    const RationalPoly rhs = c * (p.shifted(1) * RationalPoly({Rational(0), Rational(1)}));
    if (lhs != rhs) {
        shift = detail::failed("gap3-shift", "p_{S+1} != C(S) p_S(x-1) x with C = " + c.get_str());
    } else {
        const RootReport a = root_report(s, opt.residual_tol);
        const RootReport b = root_report(s.shifted(1), opt.residual_tol);
        shift.numerical = !a.residual_roots.empty();
        auto moved = residual_values(a);
        for (auto& z : moved) z += 1.0;
        if (!a.converged || !b.converged) {
            shift.outcome = Outcome::inconclusive;
            shift.witness = "root finder did not converge";
        } else if (!roots_match(residual_values(b), moved, root_translation_tol)) {
            shift = detail::failed("gap3-shift", "residual roots of S+1 are not those of S shifted by 1");
        }
    }
    out.push_back(shift);
    return out;
}

inline CheckResult factored_forms_agree(const PeakSet& s) {
    const auto forms = factored_forms(s);
    if (forms.empty()) return {"factored-family", Outcome::not_applicable};
    const RationalPoly p = to_monomial(peak_poly(s));
    for (const auto& f : forms)
        if (f.poly != p) return detail::failed("factored-family", std::string(to_string(f.family)));
    return {"factored-family"};
}

/// census = count_perms = inclusion-exclusion for every available n > m;
/// q_count equals the census superset count and bounds count_perms.
inline CheckResult oracle_equivalence(const PeakSet& s, const std::map<int, PeakSetCensus>& censuses) {
    bool any = false;
    for (const auto& [n, c] : censuses) {
        if (!s.is_admissible(n)) continue;
        any = true;
        const Integer direct = c.at(s);
        const Integer formula = count_perms(s, n);
        if (direct != formula || count_inclusion_exclusion(s, n) != direct)
            return detail::failed("oracle-equivalence", "n=" + std::to_string(n) + " census " + direct.get_str() +
                                                            " formula " + formula.get_str());
        const Integer q = q_count(s, n);
        if (q != c.superset_count(s) || q < formula)
            return detail::failed("oracle-equivalence", "q_count at n=" + std::to_string(n));
    }
    if (!any) return {"oracle-equivalence", Outcome::not_applicable};
    return {"oracle-equivalence"};
}

/// With no free index, |P_S(n)| = q_count(S, n) for n in {m+1, m+2}.
inline CheckResult no_free_indices(const PeakSet& s, std::vector<int>& disagreements) {
    CheckResult r{"no-free-indices", Outcome::not_applicable};
    for (int n : {s.max() + 1, s.max() + 2}) {
        if (!free_indices(s, n).empty()) continue;
        if (!free_indices_over_m_plus_2(s).empty()) disagreements.push_back(n);
        if (count_perms(s, n) != q_count(s, n))
            return detail::failed("no-free-indices", "n=" + std::to_string(n));
        r.outcome = Outcome::pass;
    }
    return r;
}

}  // namespace identities

/// All per-set checks.
inline VerificationReport verify_set(const PeakSet& s, const std::map<int, PeakSetCensus>& censuses,
                                     const VerifyOptions& opt) {
    VerificationReport rep;
    rep.set = s;
    rep.checks.push_back(identities::triple_agreement(s));
    rep.checks.push_back(identities::root_theorems(s));
    rep.checks.push_back(identities::special_values(s));
    rep.checks.push_back(identities::symmetry(s));
    rep.checks.push_back(identities::in_gap_negation(s));
    rep.checks.push_back(identities::alternating_sum(s));
    rep.checks.push_back(identities::strict_growth(s));
    rep.checks.push_back(identities::modulus_monotonicity(s));
    rep.checks.push_back(identities::zero_location(s));
    for (auto& c : identities::gap3_structure(s, opt)) rep.checks.push_back(std::move(c));
    rep.checks.push_back(identities::factored_forms_agree(s));
    rep.checks.push_back(identities::oracle_equivalence(s, censuses));
    rep.checks.push_back(identities::no_free_indices(s, rep.free_index_reading_disagreements));
    for (const auto& v : verify(s, opt)) rep.checks.push_back(CheckResult::from(v));
    return rep;
}

/// Checks that are not tied to a single S.
inline std::vector<CheckResult> verify_global(const std::map<int, PeakSetCensus>& censuses) {
    std::vector<CheckResult> out;

    CheckResult totals{"census-totals"};
    for (const auto& [n, c] : censuses) {
        Integer sum = 0;
        for (const auto& [s, cnt] : c.counts) sum += count_perms(s, n);
        if (c.total() != factorial(static_cast<unsigned long>(n)) || sum != c.total()) {
            totals = {"census-totals", Outcome::fail, "n=" + std::to_string(n)};
            break;
        }
    }
    out.push_back(totals);

    CheckResult tangent{"tangent-numbers"};
    const auto e = tangent_numbers(4);
    for (const auto& [n, c] : censuses) {
        if (n % 2 == 0 || n > 9) continue;
        std::vector<int> evens;
        for (int i = 2; i < n; i += 2) evens.push_back(i);
        if (c.at(PeakSet(evens)) != e[static_cast<std::size_t>(n / 2)]) {
            tangent = {"tangent-numbers", Outcome::fail, "E_" + std::to_string(n)};
            break;
        }
    }
    out.push_back(tangent);

    CheckResult kas{"kasraoui-max"};
    bool kas_any = false;
    for (const auto& [n, c] : censuses) {
        if (n < 6) continue;
        kas_any = true;
        Integer best = 0;
        for (const auto& [s, cnt] : c.counts) best = std::max(best, cnt);
        std::vector<PeakSet> argmax;
        for (const auto& [s, cnt] : c.counts)
            if (cnt == best) argmax.push_back(s);
        auto km = kasraoui_max(n);
        std::sort(km.sets.begin(), km.sets.end());
        if (km.count != best || km.sets != argmax) {
            kas = {"kasraoui-max", Outcome::fail, "n=" + std::to_string(n)};
            break;
        }
    }
    if (!kas_any) kas.outcome = Outcome::not_applicable;
    out.push_back(kas);

    CheckResult signed_check{"signed-counts"};
    bool signed_any = false;
    for (const auto& [n, c] : censuses) {
        if (n > 6) continue;
        signed_any = true;
        const PeakSetCensus sc = census_signed(n);
        for (const auto& [s, cnt] : c.counts)
            if (sc.at(s) != pow2(static_cast<unsigned long>(n)) * cnt || sc.at(s) != count_signed(s, n)) {
                signed_check = {"signed-counts", Outcome::fail, "n=" + std::to_string(n) + " " + s.to_string()};
                break;
            }
        if (sc.total() != pow2(static_cast<unsigned long>(n)) * c.total())
            signed_check = {"signed-counts", Outcome::fail, "n=" + std::to_string(n) + " totals"};
    }
    if (!signed_any) signed_check.outcome = Outcome::not_applicable;
    out.push_back(signed_check);
    return out;
}

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j = {{"outcome", to_string(c.outcome)}};
    if (c.witness) j["witness"] = *c.witness;
    if (c.numerical) j["numerical"] = true;
    return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& c : r.checks) checks[c.name] = to_json(c);
    nlohmann::json j = {{"S", r.set.elements()}, {"checks", checks}};
    if (!r.free_index_reading_disagreements.empty()) j["free_index_reading_disagreements"] = r.free_index_reading_disagreements;
    return j;
}

struct SweepSummary {
    // check name -> outcome -> count
    std::map<std::string, std::map<std::string, long>> counts;
    long sets = 0;
    bool any_fail = false;
    bool any_inconclusive = false;

    void add(const CheckResult& c) {
        ++counts[c.name][std::string(to_string(c.outcome))];
        any_fail = any_fail || c.outcome == Outcome::fail;
        any_inconclusive = any_inconclusive || c.outcome == Outcome::inconclusive;
    }

    /// 0 success, 1 check failure, 3 inconclusive numerics.
    int exit_code() const { return any_fail ? 1 : (any_inconclusive ? 3 : 0); }

    nlohmann::json to_json() const {
        return {{"summary", true}, {"sets", sets}, {"counts", counts}};
    }
};

/// Runs every check for every admissible S with max(S) <= max_peak. Reports
/// are delivered to `emit` in sweep order whatever the worker count.
inline SweepSummary run_sweep(const RunConfig& cfg, const std::function<void(const VerificationReport&)>& emit,
                              const std::function<void(const CheckResult&)>& emit_global = {}) {
    cfg.validate();
    std::map<int, PeakSetCensus> censuses;
    for (int n = 1; n <= cfg.oracle_n_max; ++n) censuses.emplace(n, census(n, cfg.workers));

    SweepSummary summary;
    for (const auto& g : verify_global(censuses)) {
        summary.add(g);
        if (emit_global) emit_global(g);
    }

    const auto sets = admissible_sets(cfg.max_peak);
    std::vector<std::optional<VerificationReport>> results(sets.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < sets.size(); i = next++)
            results[i] = verify_set(sets[i], censuses, cfg.tolerances);
    };
    if (cfg.workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work);
    }
    for (auto& r : results) {
        ++summary.sets;
        for (const auto& c : r->checks) summary.add(c);
        emit(*r);
    }
    return summary;
}

}  // namespace peakpoly
