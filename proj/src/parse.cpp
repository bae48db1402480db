#include <cctype>
#include <string>
#include <vector>

#include "polyharm/ncpoly.hpp"
#include "polyharm/word.hpp"

namespace polyharm {

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i, msg); }

    bool at_digit() const { return !eof() && std::isdigit(static_cast<unsigned char>(s[i])); }

    uint64_t parse_uint() {
        if (!at_digit()) fail("expected a digit");
        size_t b = i;
        while (at_digit()) ++i;
        return std::stoull(s.substr(b, i - b));
    }

    Int parse_int_digits() {
        if (!at_digit()) fail("expected a digit");
        size_t b = i;
        while (at_digit()) ++i;
        return Int(s.substr(b, i - b));
    }

    // e | y2.y1.y5 | 2,1,5 | 5
    Word parse_word_atom() {
        if (peek() == 'e') {
            ++i;
            return Word();
        }
        std::vector<uint32_t> idx;
        if (peek() == 'y') {
            ++i;
            idx.push_back(static_cast<uint32_t>(parse_uint()));
            while (peek() == '.') {
                ++i;
                if (peek() != 'y') fail("expected 'y' after '.'");
                ++i;
                idx.push_back(static_cast<uint32_t>(parse_uint()));
            }
            return Word(std::move(idx));
        }
        if (at_digit()) {
            idx.push_back(static_cast<uint32_t>(parse_uint()));
            while (peek() == ',') {
                ++i;
                idx.push_back(static_cast<uint32_t>(parse_uint()));
            }
            return Word(std::move(idx));
        }
        fail("expected a word ('e', 'y…', or a comma list of indices)");
    }

    Rat parse_rational() {
        Int num = parse_int_digits();
        Int den = 1;
        if (peek() == '/') {
            ++i;
            den = parse_int_digits();
            if (den == 0) fail("zero denominator");
        }
        return make_rat(num, den);
    }
};

}  // namespace

Word parse_word(const std::string& text) {
    Scanner sc{text};
    sc.skip_ws();
    Word w = sc.parse_word_atom();
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing characters after word");
    return w;
}

NCPoly parse_ncpoly(const std::string& text) {
    Scanner sc{text};
    NCPoly out;
    sc.skip_ws();
    if (sc.eof()) sc.fail("empty input");
    Rat sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
        if (sc.peek() == '-') sign = -1;
        ++sc.i;
        sc.skip_ws();
    }
    for (;;) {
        // one term
        if (sc.peek() == 'y' || sc.peek() == 'e') {
            out.add_term(sc.parse_word_atom(), sign);
        } else if (sc.at_digit()) {
            const size_t mark = sc.i;
            Rat coeff = sc.parse_rational();
            if (sc.peek() == ',' && is_integer(coeff)) {
                // it was the head of a comma-list word, not a coefficient
                sc.i = mark;
                out.add_term(sc.parse_word_atom(), sign);
            } else {
                sc.skip_ws();
                if (sc.peek() == '*') {
                    ++sc.i;
                    sc.skip_ws();
                    out.add_term(sc.parse_word_atom(), sign * coeff);
                } else {
                    out.add_term(Word(), sign * coeff);  // bare scalar
                }
            }
        } else {
            sc.fail("expected a term");
        }
        sc.skip_ws();
        if (sc.eof()) break;
        if (sc.peek() == '+') {
            sign = 1;
        } else if (sc.peek() == '-') {
            sign = -1;
        } else {
            sc.fail("expected '+' or '-' between terms");
        }
        ++sc.i;
        sc.skip_ws();
    }
    return out;
}

}  // namespace polyharm
