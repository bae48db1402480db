#include "polyharm/harmonic.hpp"

#include <mutex>
#include <stdexcept>

namespace polyharm {

QPoly solve_difference(const QPoly& P) {
    if (P.is_zero()) return {};
    const size_t d = static_cast<size_t>(P.degree());
    // forward differences of the values P(0..d) give the binomial-basis
    // coefficients a_j
    std::vector<Rat> diffs(d + 1);
    for (size_t i = 0; i <= d; ++i) diffs[i] = P.eval(Rat(Int(i)));
    std::vector<Rat> a(d + 1);
    for (size_t j = 0; j <= d; ++j) {
        a[j] = diffs[0];
        for (size_t i = 0; i + 1 <= d - j; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    }
    QPoly f;
    for (size_t j = 0; j <= d; ++j)
        if (a[j] != 0) f += a[j] * QPoly::binom_basis(static_cast<unsigned>(j + 1));
    return f;
}

QPoly hsum(const Word& w) {
    static std::map<Word, QPoly, WordGradedLess> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    QPoly h;
    if (w.empty()) {
        h = QPoly(Rat(1));
    } else {
        const QPoly tail = hsum(w.suffix_from(1));
        const QPoly rhs = QPoly({Rat(1), Rat(1)}).pow(w.first()) * tail;  // (x+1)^s H_tail(x)
        h = solve_difference(rhs);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, h);
    return h;
}

Rat hsum_brute(const Word& w, unsigned long N) {
    if (w.empty()) return 1;
    Rat total = 0;
    const Word tail = w.suffix_from(1);
    for (unsigned long n = 1; n <= N; ++n)
        total += Rat(ipow(Int(n), w.first())) * hsum_brute(tail, n - 1);
    return total;
}

QPoly hsum_poly(const NCPoly& p) {
    QPoly r;
    for (const auto& [w, c] : p.terms()) r += c * hsum(w);
    return r;
}

QPoly gfactor(const Word& w) {
    if (w.empty()) throw std::invalid_argument("gfactor: empty word");
    for (uint32_t s : w)
        if (s == 0) throw std::invalid_argument("gfactor: word has a zero index");
    QPoly divisor(Rat(1));
    // (N+1) N (N-1) ... (N-|w|+1)
    for (long t = -1; t < static_cast<long>(w.length()); ++t)
        divisor = divisor * (QPoly::variable() - QPoly(Rat(Int(t))));
    return hsum(w).exact_div(divisor);
}

NCPoly power_as_hsums(unsigned k) {
    if (k == 0) throw std::invalid_argument("power_as_hsums: k must be positive");
    NCPoly q;
    for (unsigned j = 0; j < k; ++j) {
        Rat c = Rat(binomial(k, j));
        if ((j + k - 1) % 2 == 1) c = -c;
        q.add_term(Word::letter(j), c);
    }
    return q;
}

QPoly hsum_via_beta(const Word& w, const ExtBernoulliFamily& fam) {
    if (w.empty()) return QPoly(Rat(1));
    const size_t r = w.length();
    std::vector<uint32_t> shifted(w.indices());
    for (auto& s : shifted) s += 1;
    const Word m(std::move(shifted));

    Int denom = 1;
    for (uint32_t s : m) denom *= Int(s);

    // beta expands over harmonic sums with the value-at-one constants, so
    // the inverting b' family is the at-one variant
    QPoly num = fam.beta(m).shifted(1);  // beta_{y_m1..y_mr}(N+1)
    for (size_t k = 1; k < r; ++k)
        num -= fam.bprime_at_one(m.suffix_from(k)) * fam.beta(m.prefix(k)).shifted(1);
    return make_rat(1, denom) * num;
}

}  // namespace polyharm
