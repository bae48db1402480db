#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "polyharm/qpoly.hpp"
#include "polyharm/rational.hpp"
#include "polyharm/word.hpp"

namespace polyharm {

// Bernoulli numbers with b1 = -1/2 (the convention under which
// (n+1)*Sum_{k<=N} k^n = Sum binom(n+1,k) b_k (N+1)^{n+1-k}).
Rat bernoulli(unsigned n);

// Unsigned Stirling numbers of the first kind: coefficients of the rising
// factorial x(x+1)...(x+n-1) = Sum_k S1(n,k) x^k.
Int stirling1(unsigned n, unsigned k);

// Second kind, by the explicit alternating binomial sum.
Int stirling2(unsigned n, unsigned k);

// Second kind recovered from S1 alone, as the inverse of the signed-S1
// unitriangular matrix expanded over descending index chains:
//   S2(i,j) = (-1)^{i+j} Sum_{k>=0} (-1)^{k+1}
//             Sum_{i>t1>...>tk>j} S1(i,t1) S1(t1,t2) ... S1(tk,j),  i > j.
// An independent route used to cross-check stirling2.
Rat stirling2_via_s1(unsigned i, unsigned j);

// Eulerian numbers and the classical Eulerian polynomials A_n(z), A_0 = 1.
Int eulerian_number(unsigned n, long k);
ZPoly eulerian_poly(unsigned n);

// Extended Eulerian polynomial of a word: A of a single letter y_s is the
// classical A_s, and for longer words
//   A_{y_{s1} y_{s2} w} = Sum_{t=0..s1} binom(s1,t) A_{y_t} A_{y_{s1+s2-t} w}.
// Integer coefficients; deg <= (w). Defined on all of Y0* (A of y0 is 1).
ZPoly ext_eulerian(const Word& w);

// The extended Bernoulli polynomial family {B_w}: B of the empty word is 1,
// and B_w is the unique polynomial with B_w(0) = b_w satisfying
//   B_{y_{s1} v}(z+1) - B_{y_{s1} v}(z) = s1 z^{s1-1} B_v(z).
// The constants b_w are arbitrary; defaults are the classical Bernoulli
// numbers on single letters and 0 on longer words.
class ExtBernoulliFamily {
public:
    ExtBernoulliFamily() = default;
    ExtBernoulliFamily(const ExtBernoulliFamily& o);
    ExtBernoulliFamily& operator=(const ExtBernoulliFamily& o);

    void set_constant(const Word& w, const Rat& b);
    Rat constant(const Word& w) const;  // b_w; 1 for the empty word

    QPoly ext_bernoulli(const Word& w) const;  // B_w
    // beta_w = B_w - B_w(1); equals B_w - b_w whenever s1 != 1, and is the
    // variant for which the telescoped sum
    //   beta_w(N+1) = Sum_{k=1..N} s1 k^{s1-1} B_tail(k)
    // holds for every first letter.
    QPoly beta(const Word& w) const;

    // b'_w: b' of a single letter is b of it, and for longer words
    //   b'_w = b_w - Sum_{w = pq, p,q nonempty} b_q b'_p.
    Rat bprime(const Word& w) const;

    // B_w(1); equals b_w except when w starts with the letter 1, where the
    // recurrence at z = 0 forces B_w(1) - B_w(0) = b of the tail.
    Rat constant_at_one(const Word& w) const;

    // The b' recursion over the value-at-one constants. This is the family
    // under which beta expands over harmonic sums for every word, including
    // tails starting with the letter 1.
    Rat bprime_at_one(const Word& w) const;

private:
    Rat bprime_over(const Word& w, bool at_one,
                    std::map<Word, Rat, WordGradedLess>& cache) const;

    std::map<Word, Rat, WordGradedLess> constants_;
    mutable std::mutex mu_;
    mutable std::map<Word, QPoly, WordGradedLess> bcache_;
    mutable std::map<Word, Rat, WordGradedLess> bprime_cache_;
    mutable std::map<Word, Rat, WordGradedLess> bprime_one_cache_;
};

// Dense matrix of exact rationals; finite truncation of the infinite
// triangular arrays used for basis changes.
class MatrixQ {
public:
    MatrixQ(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    static MatrixQ identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    bool operator==(const MatrixQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Faulhaber matrix: row i (i = 0..n-1) holds the coefficients of H of the
// single letter y_i over the monomial basis N^j (j = 1..n), stored 0-based.
MatrixQ build_M(size_t n);

// T(i,j) = S1(i, j+1)/(i-1)! for i > j else 0; rows i = 1..n, columns
// j = 0..n-1, stored 0-based. Encodes u^k over {u} ∪ {Li of single letters}.
MatrixQ build_T(size_t n);

// X(i,j) = j! S2(i,j), i,j = 1..n, stored 0-based. Encodes N^k over the
// binomial-coefficient basis.
MatrixQ build_X(size_t n);

// Lower-triangular change of basis between the beta family and harmonic
// sums, for a word with all indices >= 1 (throws std::invalid_argument on a
// zero index):
//   D(i,j) = n1...nj * b_{y_{n_{j+1}}...y_{n_i}}   for j <= i.
MatrixQ build_D(const Word& w, const ExtBernoulliFamily& fam);

// Closed-form inverse: Dinv(i,i) = 1/(n1...ni) and
// Dinv(i,j) = -b'_{y_{n_{j+1}}...y_{n_i}}/(n1...ni) for j < i.
MatrixQ build_Dinv(const Word& w, const ExtBernoulliFamily& fam);

}  // namespace polyharm
