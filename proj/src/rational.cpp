#include "polyharm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace polyharm {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& text) {
    size_t i = 0;
    const size_t n = text.size();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw std::invalid_argument("rat_parse: missing numerator in '" + text + "'");
    Int num(text.substr(num_begin, i - num_begin));
    Int den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) throw std::invalid_argument("rat_parse: missing denominator in '" + text + "'");
        den = Int(text.substr(den_begin, i - den_begin));
        if (den == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
    }
    if (i != n) throw std::invalid_argument("rat_parse: trailing characters in '" + text + "'");
    if (neg) num = -num;
    return make_rat(num, den);
}

}  // namespace polyharm
