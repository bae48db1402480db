#include "polyharm/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace polyharm {

LaurentU::LaurentU(const Rat& constant) {
    if (constant != 0) c_[0] = constant;
}

LaurentU LaurentU::u_power(long k, const Rat& a) {
    LaurentU f;
    if (a != 0) f.c_[k] = a;
    return f;
}

Rat LaurentU::coeff(long k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rat(0) : it->second;
}

long LaurentU::min_power() const {
    if (c_.empty()) throw std::invalid_argument("LaurentU::min_power: zero element");
    return c_.begin()->first;
}

long LaurentU::max_power() const {
    if (c_.empty()) throw std::invalid_argument("LaurentU::max_power: zero element");
    return c_.rbegin()->first;
}

void LaurentU::add_term(long k, const Rat& a) {
    if (a == 0) return;
    auto [it, inserted] = c_.emplace(k, a);
    if (!inserted) {
        it->second += a;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentU LaurentU::operator-() const {
    LaurentU r = *this;
    for (auto& [k, a] : r.c_) a = -a;
    return r;
}

LaurentU& LaurentU::operator+=(const LaurentU& o) {
    for (const auto& [k, a] : o.c_) add_term(k, a);
    return *this;
}

LaurentU& LaurentU::operator-=(const LaurentU& o) {
    for (const auto& [k, a] : o.c_) add_term(k, -a);
    return *this;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    LaurentU r;
    for (const auto& [i, x] : a.c_)
        for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
    return r;
}

LaurentU operator*(const Rat& a, const LaurentU& f) {
    LaurentU r;
    if (a == 0) return r;
    for (const auto& [k, x] : f.c_) r.c_[k] = a * x;
    return r;
}

std::string LaurentU::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const Rat& a = it->second;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        const long k = it->first;
        if (k == 0) {
            out << rat_str(mag);
        } else {
            if (mag != 1) out << rat_str(mag) << "*";
            out << "u";
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

LaurentU theta0(const LaurentU& f) {
    LaurentU r;
    for (const auto& [k, a] : f.terms()) {
        if (k == 0) continue;
        const Rat ka = Rat(Int(k)) * a;
        r.add_term(k + 1, ka);
        r.add_term(k, -ka);
    }
    return r;
}

LaurentU lambda_mul(const LaurentU& f) {
    LaurentU r;
    for (const auto& [k, a] : f.terms()) {
        r.add_term(k + 1, a);
        r.add_term(k, -a);
    }
    return r;
}

ZPoly laurent_to_zpoly(const LaurentU& f, uint64_t p) {
    ZPoly out;
    if (f.is_zero()) return out;
    if (f.max_power() > static_cast<long>(p))
        throw std::invalid_argument("laurent_to_zpoly: power exceeds clearing exponent");
    for (const auto& [k, a] : f.terms()) {
        const unsigned long e = static_cast<unsigned long>(static_cast<long>(p) - k);
        // a * (1-z)^e
        std::vector<Rat> c(e + 1, Rat(0));
        for (unsigned long j = 0; j <= e; ++j) {
            Rat t = a * Rat(binomial(e, j));
            if (j % 2 == 1) t = -t;
            c[j] = t;
        }
        out += ZPoly(std::move(c));
    }
    return out;
}

Rat series_coeff(const LaurentU& f, unsigned long n) {
    Rat total = 0;
    for (const auto& [k, a] : f.terms()) {
        if (k > 0) {
            // (1-z)^{-k} = Sum binom(n+k-1, k-1) z^n
            total += a * Rat(binomial(n + static_cast<unsigned long>(k) - 1,
                                      static_cast<unsigned long>(k) - 1));
        } else if (k == 0) {
            if (n == 0) total += a;
        } else {
            // (1-z)^{-k} with k < 0 is the finite binomial expansion
            const unsigned long e = static_cast<unsigned long>(-k);
            if (n <= e) {
                Rat t = a * Rat(binomial(e, n));
                if (n % 2 == 1) t = -t;
                total += t;
            }
        }
    }
    return total;
}

}  // namespace polyharm
