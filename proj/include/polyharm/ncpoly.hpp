#pragma once

#include <map>
#include <string>

#include "polyharm/rational.hpp"
#include "polyharm/word.hpp"

namespace polyharm {

// Finite formal linear combination of words with exact rational coefficients
// (an element of Q<Y0>). Canonical: no zero coefficients, terms keyed in the
// graded word order.
class NCPoly {
public:
    using TermMap = std::map<Word, Rat, WordGradedLess>;

    NCPoly() = default;
    NCPoly(const Word& w) { add_term(w, 1); }
    NCPoly(const Rat& c, const Word& w) { add_term(w, c); }

    static NCPoly one() { return NCPoly(Word()); }

    bool is_zero() const { return t_.empty(); }
    size_t support_size() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    Rat coeff(const Word& w) const;

    void add_term(const Word& w, const Rat& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Rat& c, const NCPoly& p);
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }

    // largest (w)+|w| over the support; the poly must be nonzero
    uint64_t max_grade() const;
    NCPoly graded_part(uint64_t grade) const;

    // "3/2*y2.y1 + y0 - 1/6*e", highest term first
    std::string str() const;

private:
    TermMap t_;
};

enum class ProductLaw { Shuffle, Stuffle, Top };

// Word-level products, extended bilinearly by ncp_product. Recursions
// memoize on suffix pairs within each call.
NCPoly shuffle(const Word& u, const Word& v);
NCPoly stuffle(const Word& u, const Word& v);

NCPoly ncp_combine(const Rat& a, const NCPoly& p, const Rat& b, const NCPoly& q);
NCPoly ncp_product(ProductLaw law, const NCPoly& p, const NCPoly& q);

// Accepts sums of terms "coeff*word", "word", "coeff"; words in the y-dot
// or comma-list form, "e" for the empty word. Throws ParseError.
NCPoly parse_ncpoly(const std::string& text);

}  // namespace polyharm
