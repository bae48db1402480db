#pragma once

#include <map>

#include "polyharm/laurent.hpp"
#include "polyharm/ncpoly.hpp"
#include "polyharm/qpoly.hpp"

namespace polyharm {

// The polylogarithm of a word at non-positive indices, as a Laurent
// polynomial in u = (1-z)^{-1}: Li of the empty word is 1, and
// Li_{y_s w} = theta0^s (lambda * Li_w). Integer coefficients, powers
// 1..(w)+|w| for nonempty words. Operator-calculus route.
LaurentU polylog_op(const Word& w);

// Independent route: for a single letter y_n the closed form
//   Li_{y_n} = Sum_{t=1..n+1} (t-1)! (-1)^{t+n+1} S2(n+1,t) u^t   (n >= 1),
// Li_{y_0} = u - 1, and for longer words the binomial splitting
//   Li_{y_{s1} y_{s2} w} = Sum_{t=0..s1} binom(s1,t) Li_{y_t} Li_{y_{s1+s2-t} w}.
LaurentU polylog_rec(const Word& w);

// Linear extension to Q<Y0>.
LaurentU polylog_poly(const NCPoly& p);

// u^k = u + Sum_{j=2..k} S1(k,j)/(k-1)! * Li_{y_{j-1}}; the coefficient of u
// is always 1, `letters` maps s >= 1 to the coefficient of Li_{y_s}.
struct UPowerInLiBasis {
    std::map<unsigned long, Rat> letters;
};
UPowerInLiBasis u_power_in_li_basis(unsigned k);  // k >= 1

// Unique decomposition of f over {1} ∪ {Li of single letters}. Throws
// std::domain_error when f lies outside the span (i.e. has negative
// u-powers).
struct LiBasisCoeffs {
    Rat constant;
    std::map<unsigned long, Rat> letters;
    bool operator==(const LiBasisCoeffs& o) const = default;
};
LiBasisCoeffs li_basis_decompose(const LaurentU& f);

// The composition-sum coefficient grid l_{i,j} of a word with all indices
// >= 1: i ranges r..(w), j ranges 0..(w)-s_r, and the assembly
//   lambda^{|w|} Sum l_{i,j} z^{i-1-j} (1-z)^{-i}
// reproduces the polylogarithm.
struct LijTable {
    size_t i_min, i_max, j_max;
    std::vector<std::vector<Rat>> l;  // l[i - i_min][j]
    Rat at(size_t i, size_t j) const;
};
LijTable lij_table(const Word& w);
LaurentU lij_assemble(const LijTable& t, const Word& w);

// Basis transport Q[N] -> Q[u]: decompose h over {1} ∪ {H of single
// letters} (triangular by degree) and carry the coefficients to
// {1} ∪ {Li of single letters}. chi(hsum(w)) = polylog_op(w).
LaurentU chi(const QPoly& h);

// Checks Li_w * (1-z)^{(w)+|w|} = z^{|w|} * A_w(z) with A the extended
// Eulerian polynomial, as exact polynomials in z.
bool eulerian_form_check(const Word& w);

}  // namespace polyharm
