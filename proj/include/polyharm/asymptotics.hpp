#pragma once

#include <optional>

#include "polyharm/ncpoly.hpp"
#include "polyharm/rational.hpp"

namespace polyharm {

// Leading asymptotic constant of the harmonic sum of a word:
// C_w = prod over nonempty suffixes v of w of ((v)+|v|)^{-1}; C of the
// empty word is 1. A character for the shuffle product.
Rat cminus(const Word& w);

// Leading coefficient of the polylogarithm at u = (1-z)^{-1}:
// B_w = ((w)+|w|)! * C_w, a positive integer on words.
Rat bminus(const Word& w);

// Asymptotic profile of a noncommutative polynomial outside the kernel:
// degree n(P) of H_P, its leading coefficient, and the coefficient of
// u^{n(P)} in Li_P. Empty optional when H_P = 0.
struct AsymProfile {
    uint64_t degree = 0;
    Rat lead_h;   // C_P
    Rat lead_li;  // B_P
    bool operator==(const AsymProfile& o) const = default;
};

// Full-expansion route: read the answers off the exact H_P and Li_P.
std::optional<AsymProfile> asym_profile(const NCPoly& p);

// Step-down scan: try the top grade with the per-word constants first, then
// walk down one coefficient order at a time, combining per-word coefficient
// extraction for the higher-grade support with the constants at the current
// grade. Agrees with asym_profile everywhere.
std::optional<AsymProfile> asym_profile_scan(const NCPoly& p);

// Coefficient of a word in the grading series: t^{(w)+|w|}, and with the
// factorial weight ((w)+|w|)! t^{(w)+|w|}.
struct GradedMonomial {
    uint64_t power;
    Rat coeff;
    bool operator==(const GradedMonomial& o) const = default;
};
GradedMonomial theta_coeff(const Word& w);
GradedMonomial lambda_coeff(const Word& w);

// Exponent of t attached to w by expanding the letter series
// (Sum_y t^{(y)+1} y)* letter by letter; equals (w)+|w|.
uint64_t kleene_star_exponent(const Word& w);

// True when the leading coefficient of the harmonic sum equals cminus(w)
// and the top Laurent coefficient of the polylogarithm equals bminus(w).
bool hadamard_limit_check(const Word& w);

// Linear extension of cminus on a grade-homogeneous polynomial; throws
// std::invalid_argument when the support mixes grades.
Rat cminus_graded(const NCPoly& p, uint64_t grade);

}  // namespace polyharm
