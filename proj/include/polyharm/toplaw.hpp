#pragma once

#include <map>

#include "polyharm/ncpoly.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

// Result of the commutative product realizing multiplication of
// polylogarithms: a scalar multiple of the empty word plus a combination of
// single letters. The constant is nonzero only for the product of two empty
// words.
struct TopResult {
    Rat constant;
    std::map<unsigned long, Rat> letters;
    bool operator==(const TopResult& o) const = default;

    NCPoly to_ncpoly() const;
};

// u top v: decompose Li_u * Li_v over {1} ∪ {Li of single letters}.
// Li of the result equals Li_u * Li_v exactly.
TopResult top(const Word& u, const Word& v);

// Bilinear extension; associative and commutative.
NCPoly top_poly(const NCPoly& p, const NCPoly& q);

// w top 1: the letter-basis normal form of a word. w minus its normal form
// generates the kernel.
TopResult letter_normal_form(const Word& w);

// True when Li of p is the zero function (equivalently, H of p is zero).
bool kernel_member(const NCPoly& p);

// Convolution of Eulerian numbers: A_{m,n,k} = Sum_t A_{n,t} A_{m,k-t},
// zero outside 0 <= k <= m+n-2.
Int A_mnk(unsigned m, unsigned n, long k);

// Coefficient of u^k in Li_{y_m} * Li_{y_n} (ground truth by extraction).
Rat gamma_mnk(unsigned m, unsigned n, unsigned k);

// Closed form Sum_{j=m+n-k..m+n-2} A_{m,n,j} binom(j+2, m+n+2-k) (-1)^{m+n-k};
// kept as a cross-checked alternative to gamma_mnk.
Rat gamma_mnk_closed(unsigned m, unsigned n, unsigned k);

// Assembly of y_m top y_n from the gamma coefficients via
// u^k -> (e + y_0) + Sum_{j=2..k} S1(k,j)/(k-1)! y_{j-1}.
NCPoly top_letters_via_gamma(unsigned m, unsigned n);

}  // namespace polyharm
