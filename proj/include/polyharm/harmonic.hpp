#pragma once

#include "polyharm/ncpoly.hpp"
#include "polyharm/qpoly.hpp"
#include "polyharm/special_numbers.hpp"

namespace polyharm {

// Unique polynomial f with f(0) = 0 solving f(x+1) - f(x) = P(x): decompose
// P over the binomial basis by exact forward differences at 0 and shift each
// binom(x,j) to binom(x,j+1).
QPoly solve_difference(const QPoly& P);

// The harmonic sum of a word as an exact polynomial in the upper summation
// bound N, degree (w)+|w|. H of the empty word is 1; built by peeling the
// leftmost letter: H_{y_s w}(x+1) - H_{y_s w}(x) = (x+1)^s H_w(x), H(0) = 0.
QPoly hsum(const Word& w);

// Literal nested sum Sum_{N >= n1 > ... > nr > 0} n1^{s1}...nr^{sr};
// independent oracle for hsum.
Rat hsum_brute(const Word& w, unsigned long N);

// Linear extension to Q<Y0>.
QPoly hsum_poly(const NCPoly& p);

// For a word with all indices >= 1, the exact quotient G with
// H_w(N) = (N+1) N (N-1) ... (N-|w|+1) G(N); degree (w)-1.
QPoly gfactor(const Word& w);

// Q_k with H applied to Q_k equal to N^k:
//   N^k = Sum_{j=0..k-1} (-1)^{j+k-1} binom(k,j) H_{y_j}(N), k >= 1.
NCPoly power_as_hsums(unsigned k);

// Faulhaber-style evaluation through the beta family: with m_i = s_i + 1,
//   H_w(N) = [beta_{y_{m1}..y_{mr}}(N+1)
//             - Sum_{k<r} b'_{y_{m_{k+1}}..y_{mr}} beta_{y_{m1}..y_{mk}}(N+1)]
//            / (m1 ... mr).
// Equals hsum(w) for every choice of family constants.
QPoly hsum_via_beta(const Word& w, const ExtBernoulliFamily& fam);

}  // namespace polyharm
