#pragma once

#include <map>
#include <string>

#include "polyharm/qpoly.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

// Laurent polynomial in the formal symbol u = (1-z)^{-1}, sparse map from
// integer power to exact rational. The substitution z = 1 - u^{-1} turns the
// whole operator calculus into finite Laurent manipulation: the rational
// function z/(1-z) is u - 1, and z d/dz is (u^2 - u) d/du.
class LaurentU {
public:
    LaurentU() = default;
    LaurentU(const Rat& constant);  // implicit scalar embedding
    LaurentU(int constant) : LaurentU(Rat(constant)) {}

    static LaurentU u_power(long k, const Rat& a = Rat(1));

    bool is_zero() const { return c_.empty(); }
    Rat coeff(long k) const;
    long min_power() const;  // requires nonzero
    long max_power() const;  // requires nonzero
    const std::map<long, Rat>& terms() const { return c_; }

    void add_term(long k, const Rat& a);

    LaurentU operator-() const;
    LaurentU& operator+=(const LaurentU& o);
    LaurentU& operator-=(const LaurentU& o);
    friend LaurentU operator+(LaurentU a, const LaurentU& b) { return a += b; }
    friend LaurentU operator-(LaurentU a, const LaurentU& b) { return a -= b; }
    friend LaurentU operator*(const LaurentU& a, const LaurentU& b);
    friend LaurentU operator*(const Rat& a, const LaurentU& f);
    bool operator==(const LaurentU& o) const { return c_ == o.c_; }

    std::string str() const;  // in u, highest power first

private:
    std::map<long, Rat> c_;
};

// z d/dz under z = 1 - u^{-1}: (u^2 - u) d/du, termwise.
LaurentU theta0(const LaurentU& f);

// Multiplication by z/(1-z) = u - 1.
LaurentU lambda_mul(const LaurentU& f);

// f * (1-z)^p as a polynomial in z; requires p >= max u-power of f.
ZPoly laurent_to_zpoly(const LaurentU& f, uint64_t p);

// Coefficient of z^n in the power-series expansion of f around z = 0.
Rat series_coeff(const LaurentU& f, unsigned long n);

}  // namespace polyharm
