#pragma once

// Integer-valued polynomials stored in the binomial basis
//   p(x) = sum_j a_j * C(x - c, j)
// centered at an integer c. Coefficient j at center k is (Delta^j p)(k).

#include "peakpoly/integer.hpp"
#include "peakpoly/rational_poly.hpp"

#include <limits>
#include <ostream>
#include <utility>
#include <vector>

namespace peakpoly {

/// Falling-factorial binomial n(n-1)...(n-j+1)/j!, valid for negative n.
inline Integer binom(const Integer& n, unsigned long j) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), j);
    return r;
}

inline Integer binom(long n, unsigned long j) { return binom(Integer(n), j); }

class BinomialPoly {
public:
    static constexpr long zero_degree = std::numeric_limits<long>::min();

    /// The zero polynomial.
    BinomialPoly() = default;
    BinomialPoly(long center, std::vector<Integer> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static BinomialPoly constant(const Integer& c, long center = 0) { return {center, {c}}; }

    /// coeff * C(x - center, j)
    static BinomialPoly basis(unsigned long j, const Integer& coeff = 1, long center = 0) {
        std::vector<Integer> cs(j + 1, Integer(0));
        cs[j] = coeff;
        return {center, std::move(cs)};
    }

    long center() const { return center_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return is_zero() ? zero_degree : static_cast<long>(coeffs_.size()) - 1; }

    Integer coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }

    Integer operator()(const Integer& n) const {
        const Integer t = n - center_;
        Integer acc = 0;
        Integer term = 1;  // C(t, j)
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (j > 0) {
                term *= t - static_cast<long>(j - 1);
                mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), j);
            }
            acc += coeffs_[j] * term;
        }
        return acc;
    }
    Integer operator()(long n) const { return (*this)(Integer(n)); }

    /// Same-center sum; operands at different centers are aligned to the left one.
    friend BinomialPoly operator+(const BinomialPoly& a, const BinomialPoly& b);
    friend BinomialPoly operator-(const BinomialPoly& a, const BinomialPoly& b);

    friend BinomialPoly operator*(const Integer& s, const BinomialPoly& p) {
        std::vector<Integer> out(p.coeffs_);
        for (auto& c : out) c *= s;
        return {p.center_, std::move(out)};
    }

    BinomialPoly operator-() const { return Integer(-1) * *this; }

    /// Representation equality: same center and coefficients.
    friend bool operator==(const BinomialPoly& a, const BinomialPoly& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.center_ == b.center_);
    }

    friend std::ostream& operator<<(std::ostream& os, const BinomialPoly& p) {
        os << "[c=" << p.center_ << ":";
        for (const auto& c : p.coeffs_) os << " " << c;
        return os << "]";
    }

private:
    long center_ = 0;
    std::vector<Integer> coeffs_;
};

/// Exact evaluation; integer inputs always give integer outputs.
inline Integer eval(const BinomialPoly& p, const Integer& n) { return p(n); }
inline Integer eval(const BinomialPoly& p, long n) { return p(n); }

/// Delta p(x) = p(x+1) - p(x): a left shift of the coefficient sequence.
inline BinomialPoly forward_difference(const BinomialPoly& p) {
    if (p.coeffs().size() <= 1) return BinomialPoly(p.center(), {});
    return {p.center(), std::vector<Integer>(p.coeffs().begin() + 1, p.coeffs().end())};
}

/// Moves the expansion point one column at a time using
/// (Delta^j p)(k+1) = (Delta^j p)(k) + (Delta^{j+1} p)(k).
inline BinomialPoly recenter(const BinomialPoly& p, long new_center) {
    std::vector<Integer> a = p.coeffs();
    const std::size_t d = a.size();
    if (d == 0) return {new_center, {}};
    for (long k = p.center(); k < new_center; ++k)
        for (std::size_t j = 0; j + 1 < d; ++j) a[j] += a[j + 1];
    for (long k = p.center(); k > new_center; --k)
        for (std::size_t j = d - 1; j-- > 0;) a[j] -= a[j + 1];
    return {new_center, std::move(a)};
}

inline BinomialPoly operator+(const BinomialPoly& a, const BinomialPoly& b) {
    if (a.is_zero()) return recenter(b, a.center());
    const BinomialPoly bb = recenter(b, a.center_);
    std::vector<Integer> out(std::max(a.coeffs_.size(), bb.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + bb.coeff(i);
    return {a.center_, std::move(out)};
}

inline BinomialPoly operator-(const BinomialPoly& a, const BinomialPoly& b) { return a + (-b); }

inline RationalPoly to_monomial(const BinomialPoly& p) {
    RationalPoly acc;
    RationalPoly basis = RationalPoly::constant(1);  // C(x - c, j)
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        if (j > 0) {
            basis = basis * RationalPoly::linear_root(Rational(p.center() + static_cast<long>(j) - 1));
            basis = Rational(1, static_cast<long>(j)) * basis;
        }
        if (p.coeffs()[j] != 0) acc = acc + Rational(p.coeffs()[j]) * basis;
    }
    return acc;
}

/// C(x-1, m-1) = sum_{k<m} (-1)^{m-1-k} C(x, k), centered at 0.
inline BinomialPoly vandermonde_shift(long m) {
    if (m < 1) throw precondition_error("vandermonde_shift: m must be >= 1");
    std::vector<Integer> cs(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) cs[static_cast<std::size_t>(k)] = sign_pow(m - 1 - k);
    return {0, std::move(cs)};
}

}  // namespace peakpoly
