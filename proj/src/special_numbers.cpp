#include "polyharm/special_numbers.hpp"

#include <mutex>
#include <stdexcept>

#include "polyharm/harmonic.hpp"

namespace polyharm {

namespace {

std::mutex number_mu;

}  // namespace

Rat bernoulli(unsigned n) {
    static std::vector<Rat> cache;
    std::lock_guard<std::mutex> lock(number_mu);
    // Sum_{k=0..m} binom(m+1,k) b_k = 0 for m >= 1 pins b_1 = -1/2.
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        if (m == 0) {
            cache.emplace_back(1);
        } else {
            Rat s = 0;
            for (unsigned k = 0; k < m; ++k) s += Rat(binomial(m + 1, k)) * cache[k];
            cache.push_back(-s / Rat(Int(m) + 1));
        }
    }
    return cache[n];
}

Int stirling1(unsigned n, unsigned k) {
    static std::vector<std::vector<Int>> rows;  // rows[n][k], k = 0..n
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(number_mu);
    while (rows.size() <= n) {
        const unsigned m = static_cast<unsigned>(rows.size());
        std::vector<Int> row(m + 1, Int(0));
        if (m == 0) {
            row[0] = 1;
        } else {
            const auto& prev = rows[m - 1];
            for (unsigned j = 0; j <= m; ++j) {
                Int v = 0;
                if (j >= 1) v += prev[j - 1];
                if (j <= m - 1) v += Int(m - 1) * prev[j];
                row[j] = v;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int sum = 0;
    for (unsigned i = 0; i <= k; ++i) {
        Int term = binomial(k, i) * ipow(Int(k - i), n);
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    Int fk = factorial(k);
    if (sum % fk != 0) throw std::logic_error("stirling2: inexact division");
    return sum / fk;
}

namespace {

// G(i,j) = Sum_{k>=0} (-1)^{k+1} Sum_{i>t1>...>tk>j} S1(i,t1)...S1(tk,j)
Int chain_sum(unsigned i, unsigned j, std::map<std::pair<unsigned, unsigned>, Int>& memo) {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int g = -stirling1(i, j);
    for (unsigned t = j + 1; t < i; ++t) g -= stirling1(i, t) * chain_sum(t, j, memo);
    memo.emplace(key, g);
    return g;
}

}  // namespace

Rat stirling2_via_s1(unsigned i, unsigned j) {
    if (j > i || j == 0) return 0;
    if (i == j) return make_rat(1, stirling1(i, i));
    std::map<std::pair<unsigned, unsigned>, Int> memo;
    Int g = chain_sum(i, j, memo);
    if ((i + j) % 2 == 1) g = -g;
    return make_rat(g, stirling1(i, i) * stirling1(j, j));
}

Int eulerian_number(unsigned n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0 || k > static_cast<long>(n) - 1) return 0;
    Int sum = 0;
    for (long j = 0; j <= k; ++j) {
        Int term = binomial(n + 1, static_cast<unsigned long>(j)) *
                   ipow(Int(k + 1 - j), n);
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

ZPoly eulerian_poly(unsigned n) {
    if (n == 0) return ZPoly(Rat(1));
    std::vector<Rat> c(n, Rat(0));
    for (unsigned k = 0; k < n; ++k) c[k] = Rat(eulerian_number(n, k));
    return ZPoly(std::move(c));
}

ZPoly ext_eulerian(const Word& w) {
    static std::map<Word, ZPoly, WordGradedLess> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    ZPoly result;
    if (w.empty()) {
        result = ZPoly(Rat(1));
    } else if (w.length() == 1) {
        result = eulerian_poly(w[0]);
    } else {
        const uint32_t s1 = w[0], s2 = w[1];
        const Word rest = w.suffix_from(2);
        for (uint32_t t = 0; t <= s1; ++t) {
            result += Rat(binomial(s1, t)) *
                      (ext_eulerian(Word::letter(t)) * ext_eulerian(prepend(s1 + s2 - t, rest)));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(w, result);
    return result;
}

ExtBernoulliFamily::ExtBernoulliFamily(const ExtBernoulliFamily& o) {
    std::lock_guard<std::mutex> lock(o.mu_);
    constants_ = o.constants_;
    bcache_ = o.bcache_;
    bprime_cache_ = o.bprime_cache_;
    bprime_one_cache_ = o.bprime_one_cache_;
}

ExtBernoulliFamily& ExtBernoulliFamily::operator=(const ExtBernoulliFamily& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mu_, o.mu_);
    constants_ = o.constants_;
    bcache_ = o.bcache_;
    bprime_cache_ = o.bprime_cache_;
    bprime_one_cache_ = o.bprime_one_cache_;
    return *this;
}

void ExtBernoulliFamily::set_constant(const Word& w, const Rat& b) {
    if (w.empty()) throw std::invalid_argument("ExtBernoulliFamily: b of the empty word is fixed to 1");
    std::lock_guard<std::mutex> lock(mu_);
    constants_[w] = b;
    bcache_.clear();
    bprime_cache_.clear();
    bprime_one_cache_.clear();
}

Rat ExtBernoulliFamily::constant(const Word& w) const {
    if (w.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = constants_.find(w); it != constants_.end()) return it->second;
    }
    if (w.length() == 1) return bernoulli(w[0]);
    return 0;
}

QPoly ExtBernoulliFamily::ext_bernoulli(const Word& w) const {
    if (w.empty()) return QPoly(Rat(1));
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = bcache_.find(w); it != bcache_.end()) return it->second;
    }
    const uint32_t s1 = w[0];
    QPoly rhs;  // s1 z^{s1-1} B_tail(z); zero when s1 = 0
    if (s1 > 0) rhs = QPoly::monomial(s1 - 1, Rat(s1)) * ext_bernoulli(w.suffix_from(1));
    QPoly b = QPoly(constant(w)) + solve_difference(rhs);
    std::lock_guard<std::mutex> lock(mu_);
    bcache_.emplace(w, b);
    return b;
}

QPoly ExtBernoulliFamily::beta(const Word& w) const {
    QPoly b = ext_bernoulli(w);
    return b - QPoly(b.eval(1));
}

Rat ExtBernoulliFamily::bprime_over(const Word& w, bool at_one,
                                    std::map<Word, Rat, WordGradedLess>& cache) const {
    auto base = [&](const Word& v) { return at_one ? constant_at_one(v) : constant(v); };
    if (w.empty()) throw std::invalid_argument("bprime: empty word");
    if (w.length() == 1) return base(w);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }
    Rat r = base(w);
    for (size_t cut = 1; cut < w.length(); ++cut)
        r -= base(w.suffix_from(cut)) * bprime_over(w.prefix(cut), at_one, cache);
    std::lock_guard<std::mutex> lock(mu_);
    cache.emplace(w, r);
    return r;
}

Rat ExtBernoulliFamily::bprime(const Word& w) const { return bprime_over(w, false, bprime_cache_); }

Rat ExtBernoulliFamily::constant_at_one(const Word& w) const {
    if (w.empty()) return 1;
    if (w.first() != 1) return constant(w);
    return constant(w) + constant(w.suffix_from(1));
}

Rat ExtBernoulliFamily::bprime_at_one(const Word& w) const {
    return bprime_over(w, true, bprime_one_cache_);
}

MatrixQ MatrixQ::identity(size_t n) {
    MatrixQ m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("MatrixQ: dimension mismatch");
    MatrixQ r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

MatrixQ build_M(size_t n) {
    // abstract indices: i = 0..n-1 (rows), j = 1..n (columns)
    MatrixQ m(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            Rat v;
            if (i + 1 < j) {
                v = 0;
            } else if (j == 1) {
                v = (i == 1) ? make_rat(1, 2) : bernoulli(static_cast<unsigned>(i));
            } else {
                v = m.at(i - 1, j - 2) * Rat(Int(i)) / Rat(Int(j));
            }
            m.at(i, j - 1) = v;
        }
    }
    return m;
}

MatrixQ build_T(size_t n) {
    // abstract indices: i = 1..n (rows), j = 0..n-1 (columns)
    MatrixQ t(n, n);
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i > j)
                t.at(i - 1, j) = make_rat(stirling1(static_cast<unsigned>(i), static_cast<unsigned>(j + 1)),
                                          factorial(static_cast<unsigned long>(i - 1)));
    return t;
}

MatrixQ build_X(size_t n) {
    MatrixQ x(n, n);
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= i; ++j)
            x.at(i - 1, j - 1) = Rat(factorial(j) * stirling2(static_cast<unsigned>(i), static_cast<unsigned>(j)));
    return x;
}

namespace {

void require_positive_indices(const Word& w) {
    for (uint32_t s : w)
        if (s == 0) throw std::invalid_argument("matrix D: word has a zero index");
    if (w.empty()) throw std::invalid_argument("matrix D: empty word");
}

}  // namespace

MatrixQ build_D(const Word& w, const ExtBernoulliFamily& fam) {
    require_positive_indices(w);
    const size_t r = w.length();
    MatrixQ d(r, r);
    std::vector<Int> prefix_prod(r + 1, Int(1));
    for (size_t i = 0; i < r; ++i) prefix_prod[i + 1] = prefix_prod[i] * Int(w[i]);
    for (size_t i = 1; i <= r; ++i)
        for (size_t j = 1; j <= i; ++j) {
            // b of y_{n_{j+1}}..y_{n_i} (empty when j = i)
            const Word mid = w.prefix(i).suffix_from(j);
            d.at(i - 1, j - 1) = Rat(prefix_prod[j]) * fam.constant(mid);
        }
    return d;
}

MatrixQ build_Dinv(const Word& w, const ExtBernoulliFamily& fam) {
    require_positive_indices(w);
    const size_t r = w.length();
    MatrixQ v(r, r);
    std::vector<Int> prefix_prod(r + 1, Int(1));
    for (size_t i = 0; i < r; ++i) prefix_prod[i + 1] = prefix_prod[i] * Int(w[i]);
    for (size_t i = 1; i <= r; ++i) {
        v.at(i - 1, i - 1) = make_rat(1, prefix_prod[i]);
        for (size_t j = 1; j < i; ++j) {
            const Word mid = w.prefix(i).suffix_from(j);
            v.at(i - 1, j - 1) = -fam.bprime(mid) / Rat(prefix_prod[i]);
        }
    }
    return v;
}

}  // namespace polyharm
