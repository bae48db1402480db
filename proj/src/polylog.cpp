#include "polyharm/polylog.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "polyharm/harmonic.hpp"
#include "polyharm/special_numbers.hpp"

namespace polyharm {

LaurentU polylog_op(const Word& w) {
    static std::map<Word, LaurentU, WordGradedLess> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    LaurentU f;
    if (w.empty()) {
        f = LaurentU(Rat(1));
    } else {
        f = lambda_mul(polylog_op(w.suffix_from(1)));
        for (uint32_t step = 0; step < w.first(); ++step) f = theta0(f);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, f);
    return f;
}

LaurentU polylog_rec(const Word& w) {
    static std::map<Word, LaurentU, WordGradedLess> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    LaurentU f;
    if (w.empty()) {
        f = LaurentU(Rat(1));
    } else if (w.length() == 1) {
        const uint32_t n = w[0];
        if (n == 0) {
            f = LaurentU::u_power(1) - LaurentU(Rat(1));
        } else {
            for (uint32_t t = 1; t <= n + 1; ++t) {
                Rat c = Rat(factorial(t - 1) * stirling2(n + 1, t));
                if ((t + n + 1) % 2 == 1) c = -c;
                f.add_term(t, c);
            }
        }
    } else {
        const uint32_t s1 = w[0], s2 = w[1];
        const Word rest = w.suffix_from(2);
        for (uint32_t t = 0; t <= s1; ++t)
            f += Rat(binomial(s1, t)) *
                 (polylog_rec(Word::letter(t)) * polylog_rec(prepend(s1 + s2 - t, rest)));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, f);
    return f;
}

LaurentU polylog_poly(const NCPoly& p) {
    LaurentU r;
    for (const auto& [w, c] : p.terms()) r += c * polylog_op(w);
    return r;
}

UPowerInLiBasis u_power_in_li_basis(unsigned k) {
    if (k == 0) throw std::invalid_argument("u_power_in_li_basis: k must be positive");
    UPowerInLiBasis out;
    for (unsigned j = 2; j <= k; ++j)
        out.letters[j - 1] = make_rat(stirling1(k, j), factorial(k - 1));
    return out;
}

LiBasisCoeffs li_basis_decompose(const LaurentU& f) {
    LiBasisCoeffs out;
    out.constant = 0;
    if (f.is_zero()) return out;
    if (f.min_power() < 0)
        throw std::domain_error("li_basis_decompose: negative u-powers lie outside the span");
    Rat u_total = 0;  // aggregated coefficient of plain u across all u^k
    for (const auto& [k, a] : f.terms()) {
        if (k == 0) {
            out.constant += a;
            continue;
        }
        u_total += a;
        const auto rep = u_power_in_li_basis(static_cast<unsigned>(k));
        for (const auto& [s, c] : rep.letters) {
            auto [it, inserted] = out.letters.emplace(s, a * c);
            if (!inserted) it->second += a * c;
        }
    }
    // u = 1 + Li of y0
    out.constant += u_total;
    if (u_total != 0) {
        auto [it, inserted] = out.letters.emplace(0, u_total);
        if (!inserted) it->second += u_total;
    }
    for (auto it = out.letters.begin(); it != out.letters.end();)
        it = it->second == 0 ? out.letters.erase(it) : std::next(it);
    return out;
}

Rat LijTable::at(size_t i, size_t j) const {
    if (i < i_min || i > i_max || j > j_max) return 0;
    return l[i - i_min][j];
}

namespace {

void enumerate_compositions(const std::vector<uint32_t>& upper, const std::vector<uint32_t>& lower,
                            size_t pos, std::vector<uint32_t>& acc,
                            const std::function<void(const std::vector<uint32_t>&)>& emit) {
    if (pos == upper.size()) {
        emit(acc);
        return;
    }
    for (uint32_t v = lower[pos]; v <= upper[pos]; ++v) {
        acc.push_back(v);
        enumerate_compositions(upper, lower, pos + 1, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

LijTable lij_table(const Word& w) {
    if (w.empty()) throw std::invalid_argument("lij_table: empty word");
    for (uint32_t s : w)
        if (s == 0) throw std::invalid_argument("lij_table: word has a zero index");
    const size_t r = w.length();
    const uint64_t weight = w.weight();

    LijTable t;
    t.i_min = r;
    t.i_max = weight;
    t.j_max = weight - w[r - 1];
    t.l.assign(t.i_max - t.i_min + 1, std::vector<Rat>(t.j_max + 1, Rat(0)));

    std::vector<uint32_t> k_upper(w.indices());
    std::vector<uint32_t> k_lower(r, 1);
    std::vector<uint32_t> k_acc;
    enumerate_compositions(k_upper, k_lower, 0, k_acc, [&](const std::vector<uint32_t>& k) {
        uint64_t i = 0;
        for (uint32_t v : k) i += v;
        Rat factor = 1;
        for (size_t n = 0; n < r; ++n)
            factor *= Rat(factorial(k[n]) * stirling2(w[static_cast<size_t>(n)], k[n]));
        if (factor == 0) return;
        if (r == 1) {
            t.l[i - t.i_min][0] += factor;
            return;
        }
        // inner sum over (t_1..t_{r-1}) with 0 <= t_m <= k_m
        std::vector<uint32_t> t_upper(k.begin(), k.begin() + static_cast<long>(r - 1));
        std::vector<uint32_t> t_lower(r - 1, 0);
        std::vector<uint32_t> t_acc;
        enumerate_compositions(t_upper, t_lower, 0, t_acc, [&](const std::vector<uint32_t>& tt) {
            uint64_t j = 0;
            for (uint32_t v : tt) j += v;
            Rat prod = factor;
            // tail sums over the last p of the k's and the last p-1 of the t's
            uint64_t k_tail = 0, t_tail = 0;
            for (size_t p = 1; p < r; ++p) {
                k_tail += k[r - p];  // k_r + ... + k_{r-p+1}
                const size_t idx = r - 1 - p;  // 0-based position of t_{r-p}
                prod *= Rat(binomial(k_tail + p - t_tail, tt[idx]));
                prod *= Rat(binomial(k[idx] + t_tail, k[idx] - tt[idx]));
                t_tail += tt[idx];
            }
            if (prod != 0) t.l[i - t.i_min][j] += prod;
        });
    });
    return t;
}

LaurentU lij_assemble(const LijTable& t, const Word& w) {
    // lambda^{|w|} Sum l_{i,j} z^{i-1-j} (1-z)^{-i}, with z = 1 - u^{-1}
    LaurentU lam_pow(Rat(1));
    for (size_t q = 0; q < w.length(); ++q) lam_pow = lambda_mul(lam_pow);
    LaurentU total;
    for (size_t i = t.i_min; i <= t.i_max; ++i) {
        for (size_t j = 0; j <= t.j_max; ++j) {
            const Rat& lij = t.at(i, j);
            if (lij == 0) continue;
            if (j + 1 > i) throw std::logic_error("lij_assemble: negative z-exponent");
            const unsigned long a = static_cast<unsigned long>(i - 1 - j);
            // z^a = (1 - u^{-1})^a
            LaurentU zpow;
            for (unsigned long q = 0; q <= a; ++q) {
                Rat c = Rat(binomial(a, q));
                if (q % 2 == 1) c = -c;
                zpow.add_term(-static_cast<long>(q), c);
            }
            total += lij * (zpow * LaurentU::u_power(static_cast<long>(i)));
        }
    }
    return lam_pow * total;
}

LaurentU chi(const QPoly& h) {
    QPoly rem = h;
    std::map<unsigned long, Rat> coeffs;  // index s of the single letter
    while (rem.degree() >= 1) {
        const unsigned long s = static_cast<unsigned long>(rem.degree()) - 1;
        const QPoly basis = hsum(Word::letter(static_cast<uint32_t>(s)));
        const Rat a = rem.lead() / basis.lead();
        coeffs[s] = a;
        rem -= a * basis;
    }
    LaurentU out(rem.coeff(0));
    for (const auto& [s, a] : coeffs)
        out += a * polylog_op(Word::letter(static_cast<uint32_t>(s)));
    return out;
}

bool eulerian_form_check(const Word& w) {
    const LaurentU f = polylog_op(w);
    const ZPoly lhs = laurent_to_zpoly(f, w.grade());
    const ZPoly rhs = ZPoly::monomial(w.length()) * ext_eulerian(w);
    return lhs == rhs;
}

}  // namespace polyharm
