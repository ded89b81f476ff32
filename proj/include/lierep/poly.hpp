#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lierep/matrix.hpp"

namespace lierep {

/// Polynomial over the Gaussian rationals, coefficients lowest degree first.
/// Trailing zero coefficients are trimmed; the zero polynomial is {}.
struct Poly {
    std::vector<GaussRat> coeffs;

    Poly() = default;
    explicit Poly(std::vector<GaussRat> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    GaussRat eval(const GaussRat& x) const {
        GaussRat acc;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
        return acc;
    }

    /// Synthetic division by (t - r); caller guarantees r is a root.
    Poly deflate(const GaussRat& r) const {
        std::vector<GaussRat> out(coeffs.size() - 1);
        out.back() = coeffs.back();
        for (std::size_t k = coeffs.size() - 2; k-- > 0;) out[k] = coeffs[k + 1] + out[k + 1] * r;
        return Poly(std::move(out));
    }

    bool operator==(const Poly& o) const { return coeffs == o.coeffs; }
};

/// Monic characteristic polynomial of a square matrix via the
/// Faddeev-LeVerrier trace recursion (exact, division only by integers).
Poly char_poly(const Mat<GaussRat>& m);

struct RootList {
    std::vector<std::pair<GaussRat, std::size_t>> roots;  // (root, multiplicity)
    bool full_degree = false;  // true iff found roots account for the degree
};

/// All roots of p lying in Q(i), with multiplicities. Candidates are
/// quotients of Gaussian-integer divisors of the trailing/leading
/// coefficients after clearing denominators; each candidate is verified by
/// evaluation and multiplicity extracted by deflation.
RootList gauss_rational_roots(const Poly& p);

}  // namespace lierep
