// expsum.hpp -- exponential sums attached to C(t1)-coordinate vectors:
// f(a2,a3) = sum c(n,m) e^{i(2m a2 - 2n a3)}, canonicalized by a monomial
// phase so the lex-least support point sits at the origin
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "tg/lattice.hpp"

namespace tg {

// frequencies: entry {p,q} with coefficient c contributes c e^{i(p a2 + q a3)}
struct ExpSum {
    LatticeMap freq;

    bool zero() const { return freq.empty(); }
    bool constant() const {
        return freq.empty() || (freq.size() == 1 && freq.entries().begin()->first == Index2{0, 0});
    }
    bool monomial() const { return freq.size() <= 1; }
    bool operator==(const ExpSum&) const = default;
};

// phase canonicalization: translate so lex-min support = (0,0)
ExpSum canonicalize(LatticeMap freq);

// the sum attached to a TCoords vector; (n,m) -> frequency (2m, -2n)
ExpSum expsum_of(const LatticeMap& tcoords);

std::complex<double> expsum_eval(const ExpSum& f, double a2, double a3);

// Factored real form: when the coefficients are symmetric about the
// support midpoint, f = e^{i(mu . theta)} g with g a real cosine sum
//   g = sum over half-support of a_w cos(w . theta).
// cosine_terms holds (w, a_w) with w = (0,0) first when present.
struct RealForm {
    Index2 center;                                    // mu
    std::vector<std::pair<Index2, int64_t>> cosine_terms;
};
std::optional<RealForm> real_form(const ExpSum& f);

double real_form_eval(const RealForm& g, double a2, double a3);

// A stripped rational-line factor Phi_order(X^a Y^b): its zero set in the
// parameter triangle is a union of straight lines a*a2 + b*a3 = const*pi
// consisting of non-typical shapes only.
struct LineFactor {
    int a = 0, b = 0, order = 1;
};

// Divides out every cyclotomic factor supported on a single lattice
// direction. Returns the stripped sum; factors are appended to lines.
ExpSum strip_line_factors(const ExpSum& f, std::vector<LineFactor>& lines);

// True when the support of f lies on one line through the lex-min point
// (univariate in a single monomial direction).
bool collinear_support(const ExpSum& f);

}  // namespace tg
