#pragma once

// Roots of peak polynomials: exact integer roots are found and divided out
// in rational arithmetic first, and only the remaining factor goes through
// the double-precision Aberth-Ehrlich iteration.

#include "peakpoly/binomial_poly.hpp"
#include "peakpoly/integer.hpp"
#include "peakpoly/peak_core.hpp"
#include "peakpoly/peak_set.hpp"
#include "peakpoly/rational_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace peakpoly {

inline constexpr double default_residual_tol = 1e-9;
inline constexpr double default_region_tol = 1e-6;

/// Quotient q with p = (x - r) q. Throws unless p(r) == 0 exactly.
inline RationalPoly deflate(const RationalPoly& p, const Rational& r) {
    if (p.is_zero()) throw precondition_error("deflate: zero polynomial");
    if (p(r) != 0) throw precondition_error("deflate: " + r.get_str() + " is not an exact root");
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
        carry = carry * r + c[i];
        q[i - 1] = carry;
    }
    return RationalPoly(std::move(q));
}

/// Integer roots guaranteed by the root theorems: S itself, and 0..b when b
/// is the left endpoint of the last odd gap.
inline std::set<long> theorem_integer_roots(const PeakSet& s) {
    std::set<long> out(s.elements().begin(), s.elements().end());
    if (auto b = s.last_odd_gap_left())
        for (long i = 0; i <= *b; ++i) out.insert(i);
    return out;
}

struct IntegerRootScan {
    std::vector<long> roots;  // sorted, with multiplicity
    RationalPoly quotient;    // p divided by prod (x - r)
};

/// Divides out every integer root in [lo, hi], with multiplicity.
inline IntegerRootScan deflate_integer_roots(const RationalPoly& p, long lo, long hi) {
    IntegerRootScan scan{{}, p};
    for (long r = lo; r <= hi; ++r)
        while (scan.quotient.degree() >= 1 && scan.quotient(Rational(r)) == 0) {
            scan.roots.push_back(r);
            scan.quotient = deflate(scan.quotient, Rational(r));
        }
    return scan;
}

/// Integer roots of p_S in [-3, max(S)] with multiplicity; every
/// theorem-guaranteed root is checked to be among them.
inline std::vector<long> known_integer_roots(const PeakSet& s) {
    if (s.empty() || !s.is_admissible())
        throw precondition_error("known_integer_roots: S must be admissible and nonempty, got " + s.to_string());
    const BinomialPoly p = peak_poly(s);
    for (long r : theorem_integer_roots(s))
        if (p(r) != 0) throw std::logic_error("known_integer_roots: p_S(" + std::to_string(r) + ") != 0 for " + s.to_string());
    return deflate_integer_roots(to_monomial(p), -3, s.max()).roots;
}

struct ComplexRoot {
    std::complex<double> value;
    double residual = 0;  // |p(z)| of the monic double image
};

struct RootFindResult {
    std::vector<ComplexRoot> roots;  // sorted by (real, imag)
    bool converged = false;
    bool certified = false;
    int iterations = 0;
    std::string failure;  // empty on success
};

namespace detail {

using cplx = std::complex<double>;

inline cplx horner(const std::vector<double>& a, cplx z) {
    cplx acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// max_i |a_i| |z|^i
inline double term_scale(const std::vector<double>& a, double r) {
    double s = 0, pw = 1;
    for (double c : a) {
        s = std::max(s, std::abs(c) * pw);
        pw *= r;
    }
    return s;
}

}  // namespace detail

/// All deg(p) complex roots of the monic double image of p by Aberth-Ehrlich
/// simultaneous iteration from a rotated circle of radius 1 + max|c_i|.
///
/// Certification requires (a) |p(z)| <= tol * max_i |c_i||z|^i at every root
/// and (b) the elementary symmetric functions of the roots reproducing the
/// coefficients within tol * deg, relative to the same functions evaluated
/// on |z_i|.
inline RootFindResult find_complex_roots(const RationalPoly& p, double tol = default_residual_tol,
                                         int max_iterations = 1000) {
    using detail::cplx;
    if (p.degree() < 1) {
        if (p.is_zero()) throw precondition_error("find_complex_roots: zero polynomial");
        return RootFindResult{{}, true, true, 0, {}};
    }
    const auto d = static_cast<std::size_t>(p.degree());
    const Rational lead = p.leading();
    std::vector<double> a(d + 1);
    for (std::size_t i = 0; i <= d; ++i) a[i] = Rational(p.coeffs()[i] / lead).get_d();
    a[d] = 1.0;
    std::vector<double> da(d);
    for (std::size_t i = 1; i <= d; ++i) da[i - 1] = a[i] * static_cast<double>(i);

    double bound = 0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(a[i]));
    const double radius = 1.0 + bound;

    std::vector<cplx> z(d);
    for (std::size_t k = 0; k < d; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);

    RootFindResult result;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int it = 1; it <= max_iterations; ++it) {
        bool done = true;
        for (std::size_t k = 0; k < d; ++k) {
            const cplx pz = detail::horner(a, z[k]);
            // stop moving roots whose value is already at rounding level
            if (std::abs(pz) <= 4.0 * static_cast<double>(d) * eps * detail::term_scale(a, std::abs(z[k]))) continue;
            const cplx ratio = pz / detail::horner(da, z[k]);
            cplx repulsion = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) > 1e-15 * (1.0 + std::abs(z[k]))) done = false;
        }
        result.iterations = it;
        if (done) {
            result.converged = true;
            break;
        }
    }
    if (!result.converged) result.failure = "no convergence within " + std::to_string(max_iterations) + " iterations";

    bool residual_ok = true;
    for (const cplx& root : z) {
        const double res = std::abs(detail::horner(a, root));
        residual_ok = residual_ok && res <= tol * detail::term_scale(a, std::abs(root));
        result.roots.push_back({root, res});
    }

    // expand prod (x - z_k) and the same product over |z_k| for scale
    std::vector<cplx> e{1.0};
    std::vector<double> emag{1.0};
    for (const cplx& root : z) {
        std::vector<cplx> ne(e.size() + 1, 0.0);
        std::vector<double> nm(emag.size() + 1, 0.0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            ne[i + 1] += e[i];
            ne[i] -= root * e[i];
            nm[i + 1] += emag[i];
            nm[i] += std::abs(root) * emag[i];
        }
        e = std::move(ne);
        emag = std::move(nm);
    }
    bool symmetric_ok = true;
    for (std::size_t i = 0; i <= d; ++i)
        symmetric_ok =
            symmetric_ok && std::abs(e[i] - a[i]) <= tol * static_cast<double>(d) * std::max(1.0, emag[i]);

    result.certified = result.converged && residual_ok && symmetric_ok;
    if (result.converged && !result.certified)
        result.failure = residual_ok ? "symmetric-function check failed" : "residual check failed";

    std::sort(result.roots.begin(), result.roots.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return result;
}

struct RootReport {
    PeakSet set;
    std::vector<long> exact_integer_roots;   // with multiplicity
    std::vector<ComplexRoot> residual_roots;  // roots of the deflated factor
    RationalPoly deflated;
    bool converged = false;
    bool certified = false;
    std::string failure;

    std::size_t root_count() const { return exact_integer_roots.size() + residual_roots.size(); }
};

inline RootReport root_report(const PeakSet& s, double residual_tol = default_residual_tol) {
    if (s.empty() || !s.is_admissible())
        throw precondition_error("root_report: S must be admissible and nonempty, got " + s.to_string());
    RootReport rep;
    rep.set = s;
    const RationalPoly p = to_monomial(peak_poly(s));
    auto scan = deflate_integer_roots(p, -3, s.max());
    rep.exact_integer_roots = std::move(scan.roots);
    rep.deflated = std::move(scan.quotient);
    auto found = find_complex_roots(rep.deflated, residual_tol);
    rep.residual_roots = std::move(found.roots);
    rep.converged = found.converged;
    rep.certified = found.certified;
    rep.failure = std::move(found.failure);
    return rep;
}

/// True if the two root lists match as multisets within eps (greedy nearest pairing).
inline bool roots_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double eps) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto best = b.end();
        double best_d = std::numeric_limits<double>::infinity();
        for (auto it = b.begin(); it != b.end(); ++it)
            if (std::abs(*it - x) < best_d) {
                best_d = std::abs(*it - x);
                best = it;
            }
        if (best == b.end() || best_d > eps) return false;
        b.erase(best);
    }
    return true;
}

inline std::vector<std::complex<double>> residual_values(const RootReport& r) {
    std::vector<std::complex<double>> out;
    for (const auto& c : r.residual_roots) out.push_back(c.value);
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture checks

enum class Outcome { pass, fail, inconclusive, not_applicable };

inline std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::inconclusive: return "inconclusive";
        case Outcome::not_applicable: return "n/a";
    }
    return "?";
}

enum class Check { positivity, bounded_roots, integral_roots, final_real_root, bounded_implies_positive };

inline constexpr Check all_checks[] = {Check::positivity, Check::bounded_roots, Check::integral_roots,
                                       Check::final_real_root, Check::bounded_implies_positive};

inline std::string_view to_string(Check c) {
    switch (c) {
        case Check::positivity: return "positivity";
        case Check::bounded_roots: return "bounded-roots";
        case Check::integral_roots: return "integral-roots-classification";
        case Check::final_real_root: return "final-real-root";
        case Check::bounded_implies_positive: return "bounded-implies-positive";
    }
    return "?";
}

struct ConjectureVerdict {
    Check check;
    PeakSet set;
    Outcome outcome = Outcome::pass;
    std::optional<std::string> witness = std::nullopt;  // always set on failure
    bool numerical = false;              // outcome relies on floating-point roots

    bool passed() const { return outcome == Outcome::pass || outcome == Outcome::not_applicable; }
};

/// {2}, {2,4}, {3}, {3,5}, {..., a, a+3} and {..., a, a+3, a+5}.
inline bool in_integral_root_family(const PeakSet& s) {
    if (s == PeakSet{2} || s == PeakSet{2, 4} || s == PeakSet{3} || s == PeakSet{3, 5}) return true;
    const auto g = s.gaps();
    if (!g.empty() && g.back() == 3) return true;
    return g.size() >= 2 && g.back() == 2 && g[g.size() - 2] == 3;
}

namespace detail {

inline std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline ConjectureVerdict check_positivity(const PeakSet& s) {
    ConjectureVerdict v{Check::positivity, s};
    const BinomialPoly at_m = recenter(peak_poly(s), s.max());
    for (int j = 1; j <= s.max() - 1; ++j)
        if (at_m.coeff(static_cast<std::size_t>(j)) <= 0) {
            v.outcome = Outcome::fail;
            v.witness = "(Delta^" + std::to_string(j) + " p)(m) = " + at_m.coeff(static_cast<std::size_t>(j)).get_str();
            return v;
        }
    return v;
}

inline ConjectureVerdict check_bounded(const PeakSet& s, const RootReport& rep, double tol) {
    ConjectureVerdict v{Check::bounded_roots, s};
    const long m = s.max();
    for (long r : rep.exact_integer_roots)
        if (r < -3 || std::abs(r) > m) {
            v.outcome = Outcome::fail;
            v.witness = "integer root " + std::to_string(r);
            return v;
        }
    v.numerical = !rep.residual_roots.empty();
    if (!rep.converged) {
        v.outcome = Outcome::inconclusive;
        v.witness = rep.failure;
        return v;
    }
    for (const auto& c : rep.residual_roots)
        if (std::abs(c.value) > static_cast<double>(m) + tol || c.value.real() < -3.0 - tol) {
            v.outcome = Outcome::fail;
            v.witness = "root " + fmt_complex(c.value);
            return v;
        }
    return v;
}

inline ConjectureVerdict check_integral(const PeakSet& s, const RootReport& rep, double tol) {
    ConjectureVerdict v{Check::integral_roots, s};
    v.numerical = !rep.residual_roots.empty();
    if (!rep.converged) {
        v.outcome = Outcome::inconclusive;
        v.witness = rep.failure;
        return v;
    }
    bool all_real = true;
    bool all_integral = true;
    std::optional<std::complex<double>> non_real;
    const BinomialPoly p = peak_poly(s);
    for (const auto& c : rep.residual_roots) {
        if (std::abs(c.value.imag()) > tol) {
            all_real = false;
            if (!non_real) non_real = c.value;
            continue;
        }
        const double nearest = std::round(c.value.real());
        if (std::abs(c.value.real() - nearest) > tol || p(static_cast<long>(nearest)) != 0) all_integral = false;
    }
    const bool family = in_integral_root_family(s);
    if (all_real != family) {
        v.outcome = Outcome::fail;
        v.witness = family ? "listed family but non-real root " + fmt_complex(*non_real)
                           : std::string("all roots real but S is not in a listed family");
    } else if (all_real && !all_integral) {
        v.outcome = Outcome::fail;
        v.witness = "all roots real but some root is not an exact integer";
    }
    return v;
}

inline ConjectureVerdict check_final_real_root(const PeakSet& s, const RootReport& rep, double tol) {
    ConjectureVerdict v{Check::final_real_root, s};
    if (s.size() < 2) {
        v.outcome = Outcome::not_applicable;
        return v;
    }
    const long m = s.max();
    const long m1 = s.without_max().max();
    for (long r : rep.exact_integer_roots)
        if ((r > m1) != (r == m)) {
            v.outcome = Outcome::fail;
            v.witness = "integer root " + std::to_string(r);
            return v;
        }
    if (!rep.converged) {
        v.outcome = Outcome::inconclusive;
        v.witness = rep.failure;
        return v;
    }
    for (const auto& c : rep.residual_roots) {
        if (std::abs(c.value.imag()) > tol) continue;
        v.numerical = true;
        if (c.value.real() > static_cast<double>(m1) + tol) {
            v.outcome = Outcome::fail;
            v.witness = "real root " + fmt_complex(c.value);
            return v;
        }
    }
    return v;
}

}  // namespace detail

struct VerifyOptions {
    double residual_tol = default_residual_tol;
    double region_tol = default_region_tol;
};

/// Runs the requested conjecture checks for one admissible nonempty S.
inline std::vector<ConjectureVerdict> verify(const PeakSet& s, std::span<const Check> checks,
                                             const VerifyOptions& opt = {}) {
    if (s.empty() || !s.is_admissible())
        throw precondition_error("verify: S must be admissible and nonempty, got " + s.to_string());
    std::optional<RootReport> rep;
    const auto report = [&]() -> const RootReport& {
        if (!rep) rep = root_report(s, opt.residual_tol);
        return *rep;
    };
    std::optional<ConjectureVerdict> positivity, bounded;
    const auto get_positivity = [&]() -> const ConjectureVerdict& {
        if (!positivity) positivity = detail::check_positivity(s);
        return *positivity;
    };
    const auto get_bounded = [&]() -> const ConjectureVerdict& {
        if (!bounded) bounded = detail::check_bounded(s, report(), opt.region_tol);
        return *bounded;
    };

    std::vector<ConjectureVerdict> out;
    for (Check c : checks) {
        switch (c) {
            case Check::positivity: out.push_back(get_positivity()); break;
            case Check::bounded_roots: out.push_back(get_bounded()); break;
            case Check::integral_roots: out.push_back(detail::check_integral(s, report(), opt.region_tol)); break;
            case Check::final_real_root:
                out.push_back(detail::check_final_real_root(s, report(), opt.region_tol));
                break;
            case Check::bounded_implies_positive: {
                ConjectureVerdict v{Check::bounded_implies_positive, s};
                const auto& b = get_bounded();
                v.numerical = b.numerical;
                if (b.outcome == Outcome::inconclusive) {
                    v.outcome = Outcome::inconclusive;
                    v.witness = b.witness;
                } else if (b.outcome != Outcome::pass) {
                    v.outcome = Outcome::not_applicable;
                } else if (get_positivity().outcome != Outcome::pass) {
                    v.outcome = Outcome::fail;
                    v.witness = "roots bounded but " + get_positivity().witness.value_or("positivity failed");
                }
                out.push_back(std::move(v));
                break;
            }
        }
    }
    return out;
}

inline std::vector<ConjectureVerdict> verify(const PeakSet& s, const VerifyOptions& opt = {}) {
    return verify(s, std::span<const Check>(all_checks), opt);
}

}  // namespace peakpoly
