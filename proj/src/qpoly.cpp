#include "polyharm/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyharm {

QPoly::QPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::variable() { return monomial(1); }

QPoly QPoly::monomial(size_t k, const Rat& a) {
    if (a == 0) return {};
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return QPoly(std::move(c));
}

QPoly QPoly::binom_basis(unsigned k) {
    QPoly r(Rat(1));
    for (unsigned m = 1; m <= k; ++m) {
        // multiply by (x - m + 1)/m
        r = r * (QPoly::variable() - QPoly(Rat(static_cast<long>(m) - 1)));
        r = make_rat(1, m) * r;
    }
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

QPoly operator*(const Rat& a, const QPoly& p) {
    if (a == 0) return {};
    QPoly r = p;
    for (auto& x : r.c_) x *= a;
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

QPoly QPoly::shifted(const Rat& a) const {
    // Horner in (x + a)
    QPoly r;
    QPoly xa = QPoly::variable() + QPoly(a);
    for (size_t i = c_.size(); i-- > 0;) r = r * xa + QPoly(c_[i]);
    return r;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r(Rat(1));
    QPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("QPoly::divmod: division by zero polynomial");
    QPoly rem = *this;
    QPoly quot;
    const long dd = divisor.degree();
    const Rat dl = divisor.lead();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const size_t k = static_cast<size_t>(rem.degree() - dd);
        const Rat f = rem.lead() / dl;
        QPoly t = QPoly::monomial(k, f);
        quot += t;
        rem -= t * divisor;
    }
    return {quot, rem};
}

QPoly QPoly::exact_div(const QPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("QPoly::exact_div: nonzero remainder");
    return q;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << rat_str(mag);
        } else {
            if (mag != 1) out << rat_str(mag) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace polyharm
