#include "polyharm/asymptotics.hpp"

#include <stdexcept>

#include "polyharm/harmonic.hpp"
#include "polyharm/polylog.hpp"

namespace polyharm {

Rat cminus(const Word& w) {
    Rat c = 1;
    for (size_t i = 0; i < w.length(); ++i)
        c /= Rat(Int(w.suffix_from(i).grade()));
    return c;
}

Rat bminus(const Word& w) {
    return Rat(factorial(w.grade())) * cminus(w);
}

std::optional<AsymProfile> asym_profile(const NCPoly& p) {
    const QPoly h = hsum_poly(p);
    if (h.is_zero()) return std::nullopt;
    AsymProfile out;
    out.degree = static_cast<uint64_t>(h.degree());
    out.lead_h = h.lead();
    out.lead_li = polylog_poly(p).coeff(static_cast<long>(out.degree));
    return out;
}

std::optional<AsymProfile> asym_profile_scan(const NCPoly& p) {
    if (p.is_zero()) return std::nullopt;
    const uint64_t p_max = p.max_grade();
    for (uint64_t step = 0; step <= p_max; ++step) {
        const uint64_t grade = p_max - step;
        Rat c = 0, b = 0;
        for (const auto& [w, coeff] : p.terms()) {
            if (w.grade() == grade) {
                c += coeff * cminus(w);
                b += coeff * bminus(w);
            } else if (w.grade() > grade) {
                c += coeff * hsum(w).coeff(grade);
                b += coeff * polylog_op(w).coeff(static_cast<long>(grade));
            }
        }
        if (c != 0 || b != 0) return AsymProfile{grade, c, b};
    }
    return std::nullopt;
}

GradedMonomial theta_coeff(const Word& w) { return {w.grade(), Rat(1)}; }

GradedMonomial lambda_coeff(const Word& w) { return {w.grade(), Rat(factorial(w.grade()))}; }

uint64_t kleene_star_exponent(const Word& w) {
    // the only factorization of w into letters is its own letter sequence,
    // each contributing t^{(y)+1}
    uint64_t e = 0;
    for (uint32_t s : w) e += static_cast<uint64_t>(s) + 1;
    return e;
}

bool hadamard_limit_check(const Word& w) {
    return hsum(w).coeff(w.grade()) == cminus(w) &&
           polylog_op(w).coeff(static_cast<long>(w.grade())) == bminus(w);
}

Rat cminus_graded(const NCPoly& p, uint64_t grade) {
    Rat total = 0;
    for (const auto& [w, c] : p.terms()) {
        if (w.grade() != grade)
            throw std::invalid_argument("cminus_graded: support is not grade-homogeneous");
        total += c * cminus(w);
    }
    return total;
}

}  // namespace polyharm
