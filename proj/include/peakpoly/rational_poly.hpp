#pragma once

// Dense univariate polynomials with exact rational coefficients in the
// monomial basis.

#include "peakpoly/integer.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace peakpoly {

class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }

    /// x - r
    static RationalPoly linear_root(const Rational& r) { return RationalPoly({-r, Rational(1)}); }

    /// scale * prod (x - r_i)
    static RationalPoly from_roots(const Rational& scale, std::span<const Rational> roots) {
        RationalPoly p = constant(scale);
        for (const auto& r : roots) p = p * linear_root(r);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return RationalPoly(std::move(out));
    }

    RationalPoly operator-() const {
        std::vector<Rational> out(coeffs_);
        for (auto& c : out) c = -c;
        return RationalPoly(std::move(out));
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPoly(std::move(out));
    }

    friend RationalPoly operator*(const Rational& s, const RationalPoly& p) {
        std::vector<Rational> out(p.coeffs_);
        for (auto& c : out) c *= s;
        return RationalPoly(std::move(out));
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// q(x) = p(x - shift), by Horner composition.
    RationalPoly shifted(const Rational& shift) const {
        RationalPoly acc;
        const RationalPoly lin = linear_root(shift);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (long i = p.degree(); i >= 0; --i) {
            const Rational& c = p.coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            const Rational mag = abs(c);
            if (mag != 1 || i == 0) os << mag;
            if (i > 0) os << (mag != 1 ? "*x" : "x");
            if (i > 1) os << "^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        for (auto& c : coeffs_) c.canonicalize();
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace peakpoly
