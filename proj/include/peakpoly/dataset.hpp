#pragma once

// Newline-delimited JSON dataset: a schema header line followed by one row
// per admissible S with max(S) <= M, ordered by max(S) then lexicographically.
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are [numerator, denominator] pairs of such integers.
// Floats are printed with 17 significant digits.

#include "peakpoly/binomial_poly.hpp"
#include "peakpoly/integer.hpp"
#include "peakpoly/peak_core.hpp"
#include "peakpoly/peak_set.hpp"
#include "peakpoly/roots.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace peakpoly {

inline constexpr const char* dataset_schema = "peakpoly-dataset";
inline constexpr int dataset_version = 1;

struct DatasetRoot {
    enum class Kind { exact_integer, numerical };
    double re = 0;
    double im = 0;
    Kind kind = Kind::numerical;
    double residual = 0;
};

struct DatasetRow {
    std::vector<int> set;
    std::vector<Integer> poly_binomial_c0;
    std::vector<Rational> poly_monomial;
    std::vector<Integer> diffs_at_m;  // (Delta^j p)(m), j = 0..m
    std::vector<DatasetRoot> roots;

    /// Throws std::runtime_error naming the first violated invariant.
    void validate() const {
        if (set.empty()) throw std::runtime_error("dataset row: empty S");
        const auto m = static_cast<std::size_t>(set.back());
        if (diffs_at_m.size() != m + 1) throw std::runtime_error("dataset row: diffs_at_m must have m+1 entries");
        if (diffs_at_m.front() != 0) throw std::runtime_error("dataset row: diffs_at_m[0] != 0");
        if (diffs_at_m.back() != 0) throw std::runtime_error("dataset row: diffs_at_m[m] != 0");
        if (roots.size() != m - 1) throw std::runtime_error("dataset row: root count != m-1");
    }
};

inline DatasetRow build_dataset_row(const PeakSet& s, double residual_tol = default_residual_tol) {
    DatasetRow row;
    row.set = s.elements();
    const BinomialPoly p = peak_poly(s);
    row.poly_binomial_c0 = p.coeffs();
    row.poly_monomial = to_monomial(p).coeffs();
    const BinomialPoly at_m = recenter(p, s.max());
    for (int j = 0; j <= s.max(); ++j) row.diffs_at_m.push_back(at_m.coeff(static_cast<std::size_t>(j)));
    const RootReport rep = root_report(s, residual_tol);
    for (long r : rep.exact_integer_roots)
        row.roots.push_back({static_cast<double>(r), 0.0, DatasetRoot::Kind::exact_integer, 0.0});
    for (const auto& c : rep.residual_roots)
        row.roots.push_back({c.value.real(), c.value.imag(), DatasetRoot::Kind::numerical, c.residual});
    return row;
}

namespace detail {

inline std::string json_integer(const Integer& z) {
    if (to_int64(z)) return z.get_str();
    return "\"" + z.get_str() + "\"";
}

inline std::string json_double(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Integer parse_integer(const nlohmann::json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    throw std::runtime_error("dataset row: expected integer, got " + j.dump());
}

}  // namespace detail

inline std::string dataset_header(int max_peak) {
    nlohmann::json h = {{"schema", dataset_schema},
                        {"version", dataset_version},
                        {"max_peak", max_peak},
                        {"fields", {"S", "poly_binomial_c0", "poly_monomial", "diffs_at_m", "roots"}}};
    return h.dump();
}

inline std::string to_json_line(const DatasetRow& row) {
    std::string out = "{\"S\":[";
    for (std::size_t i = 0; i < row.set.size(); ++i) out += (i ? "," : "") + std::to_string(row.set[i]);
    out += "],\"poly_binomial_c0\":[";
    for (std::size_t i = 0; i < row.poly_binomial_c0.size(); ++i)
        out += (i ? "," : "") + detail::json_integer(row.poly_binomial_c0[i]);
    out += "],\"poly_monomial\":[";
    for (std::size_t i = 0; i < row.poly_monomial.size(); ++i)
        out += std::string(i ? "," : "") + "[" + detail::json_integer(row.poly_monomial[i].get_num()) + "," +
               detail::json_integer(row.poly_monomial[i].get_den()) + "]";
    out += "],\"diffs_at_m\":[";
    for (std::size_t i = 0; i < row.diffs_at_m.size(); ++i)
        out += (i ? "," : "") + detail::json_integer(row.diffs_at_m[i]);
    out += "],\"roots\":[";
    for (std::size_t i = 0; i < row.roots.size(); ++i) {
        const auto& r = row.roots[i];
        out += std::string(i ? "," : "") + "{\"re\":" + detail::json_double(r.re) +
               ",\"im\":" + detail::json_double(r.im) + ",\"kind\":\"" +
               (r.kind == DatasetRoot::Kind::exact_integer ? "exact-integer" : "numerical") +
               "\",\"residual\":" + detail::json_double(r.residual) + "}";
    }
    return out + "]}";
}

inline DatasetRow parse_dataset_row(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    DatasetRow row;
    row.set = j.at("S").get<std::vector<int>>();
    for (const auto& c : j.at("poly_binomial_c0")) row.poly_binomial_c0.push_back(detail::parse_integer(c));
    for (const auto& c : j.at("poly_monomial"))
        row.poly_monomial.push_back(make_rational(detail::parse_integer(c.at(0)), detail::parse_integer(c.at(1))));
    for (const auto& c : j.at("diffs_at_m")) row.diffs_at_m.push_back(detail::parse_integer(c));
    for (const auto& r : j.at("roots")) {
        DatasetRoot root;
        root.re = r.at("re").get<double>();
        root.im = r.at("im").get<double>();
        const auto kind = r.at("kind").get<std::string>();
        if (kind == "exact-integer") root.kind = DatasetRoot::Kind::exact_integer;
        else if (kind == "numerical") root.kind = DatasetRoot::Kind::numerical;
        else throw std::runtime_error("dataset row: unknown root kind '" + kind + "'");
        root.residual = r.at("residual").get<double>();
        row.roots.push_back(root);
    }
    return row;
}

/// Header plus one row per admissible S with max(S) <= max_peak.
inline void write_dataset(std::ostream& os, int max_peak, double residual_tol = default_residual_tol) {
    os << dataset_header(max_peak) << '\n';
    for (const auto& s : admissible_sets(max_peak)) os << to_json_line(build_dataset_row(s, residual_tol)) << '\n';
}

}  // namespace peakpoly
