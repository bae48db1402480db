#pragma once

#include <string>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

// Dense univariate polynomial over Q, ascending coefficients, trailing zeros
// trimmed. Serves both polynomials in the summation bound N and polynomials
// in the series variable z.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant);  // implicit: scalars embed as constants
    QPoly(int constant) : QPoly(Rat(constant)) {}
    explicit QPoly(std::vector<Rat> coeffs);

    static QPoly variable();                               // x
    static QPoly monomial(size_t k, const Rat& a = Rat(1));  // a*x^k
    // binom(x, k) = x(x-1)...(x-k+1)/k!
    static QPoly binom_basis(unsigned k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rat& a, const QPoly& p);
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    QPoly shifted(const Rat& a) const;  // P(x + a)
    QPoly pow(unsigned long e) const;

    // Quotient/remainder of exact rational division by a nonzero divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    // Division that must be exact; a nonzero remainder is an internal bug.
    QPoly exact_div(const QPoly& divisor) const;

    // Human-readable form, leading term first, e.g. "1/2*N^2 + 1/2*N".
    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rat> c_;
};

using NPoly = QPoly;  // polynomials in the upper summation bound N
using ZPoly = QPoly;  // polynomials in the series variable z

}  // namespace polyharm
