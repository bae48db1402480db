#include "polyharm/toplaw.hpp"

#include <stdexcept>

#include "polyharm/polylog.hpp"
#include "polyharm/special_numbers.hpp"

namespace polyharm {

NCPoly TopResult::to_ncpoly() const {
    NCPoly p;
    p.add_term(Word(), constant);
    for (const auto& [s, c] : letters) p.add_term(Word::letter(static_cast<uint32_t>(s)), c);
    return p;
}

namespace {

TopResult from_li_coeffs(const LiBasisCoeffs& d) {
    TopResult r;
    r.constant = d.constant;
    r.letters = d.letters;
    return r;
}

}  // namespace

TopResult top(const Word& u, const Word& v) {
    return from_li_coeffs(li_basis_decompose(polylog_op(u) * polylog_op(v)));
}

NCPoly top_poly(const NCPoly& p, const NCPoly& q) {
    // bilinear extension; by linearity of the decomposition this is the
    // decomposition of the product of the images
    return from_li_coeffs(li_basis_decompose(polylog_poly(p) * polylog_poly(q))).to_ncpoly();
}

NCPoly ncp_product(ProductLaw law, const NCPoly& p, const NCPoly& q) {
    switch (law) {
        case ProductLaw::Top:
            return top_poly(p, q);
        case ProductLaw::Shuffle:
        case ProductLaw::Stuffle: {
            NCPoly r;
            for (const auto& [u, a] : p.terms())
                for (const auto& [v, b] : q.terms()) {
                    const NCPoly uv = law == ProductLaw::Shuffle ? shuffle(u, v) : stuffle(u, v);
                    r += (a * b) * uv;
                }
            return r;
        }
    }
    throw std::logic_error("ncp_product: unknown law");
}

TopResult letter_normal_form(const Word& w) {
    return from_li_coeffs(li_basis_decompose(polylog_op(w)));
}

bool kernel_member(const NCPoly& p) { return polylog_poly(p).is_zero(); }

Int A_mnk(unsigned m, unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(m) + static_cast<long>(n) - 2) return 0;
    Int sum = 0;
    for (long t = 0; t <= k; ++t) sum += eulerian_number(n, t) * eulerian_number(m, k - t);
    return sum;
}

Rat gamma_mnk(unsigned m, unsigned n, unsigned k) {
    return (polylog_op(Word::letter(m)) * polylog_op(Word::letter(n))).coeff(k);
}

Rat gamma_mnk_closed(unsigned m, unsigned n, unsigned k) {
    const long mn = static_cast<long>(m) + static_cast<long>(n);
    if (static_cast<long>(k) > mn + 2) return 0;
    Rat sum = 0;
    for (long j = mn - static_cast<long>(k); j <= mn - 2; ++j) {
        if (j < 0) continue;
        sum += Rat(A_mnk(m, n, j) *
                   binomial(static_cast<unsigned long>(j) + 2,
                            static_cast<unsigned long>(mn + 2 - static_cast<long>(k))));
    }
    if ((mn - static_cast<long>(k)) % 2 != 0) sum = -sum;
    return sum;
}

NCPoly top_letters_via_gamma(unsigned m, unsigned n) {
    NCPoly out;
    for (unsigned k = 2; k <= m + n + 2; ++k) {
        const Rat g = gamma_mnk(m, n, k);
        if (g == 0) continue;
        out.add_term(Word(), g);
        out.add_term(Word::letter(0), g);
        for (unsigned j = 2; j <= k; ++j)
            out.add_term(Word::letter(j - 1), g * make_rat(stirling1(k, j), factorial(k - 1)));
    }
    return out;
}

}  // namespace polyharm
