#include "polyharm/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polyharm {

Rat NCPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const Rat& c, const NCPoly& p) {
    NCPoly r;
    if (c == 0) return r;
    for (const auto& [w, a] : p.terms()) r.add_term(w, c * a);
    return r;
}

uint64_t NCPoly::max_grade() const {
    if (t_.empty()) throw std::invalid_argument("NCPoly::max_grade: zero polynomial");
    return t_.rbegin()->first.grade();
}

NCPoly NCPoly::graded_part(uint64_t grade) const {
    NCPoly r;
    for (const auto& [w, c] : t_)
        if (w.grade() == grade) r.add_term(w, c);
    return r;
}

std::string NCPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& c = it->second;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            out << rat_str(mag) << "*" << it->first.str();
        } else {
            out << it->first.str();
        }
    }
    return out.str();
}

namespace {

using PairKey = std::pair<Word, Word>;

struct PairLess {
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.first != b.first) return graded_less(a.first, b.first);
        return graded_less(a.second, b.second);
    }
};

using PairMemo = std::map<PairKey, NCPoly, PairLess>;

NCPoly shuffle_rec(const Word& u, const Word& v, PairMemo& memo) {
    if (u.empty()) return NCPoly(v);
    if (v.empty()) return NCPoly(u);
    PairKey key(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NCPoly r;
    const NCPoly left = shuffle_rec(u.suffix_from(1), v, memo);
    for (const auto& [w, c] : left.terms()) r.add_term(prepend(u.first(), w), c);
    const NCPoly right = shuffle_rec(u, v.suffix_from(1), memo);
    for (const auto& [w, c] : right.terms()) r.add_term(prepend(v.first(), w), c);
    memo.emplace(std::move(key), r);
    return r;
}

NCPoly stuffle_rec(const Word& u, const Word& v, PairMemo& memo) {
    if (u.empty()) return NCPoly(v);
    if (v.empty()) return NCPoly(u);
    PairKey key(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NCPoly r;
    const NCPoly left = stuffle_rec(u.suffix_from(1), v, memo);
    for (const auto& [w, c] : left.terms()) r.add_term(prepend(u.first(), w), c);
    const NCPoly right = stuffle_rec(u, v.suffix_from(1), memo);
    for (const auto& [w, c] : right.terms()) r.add_term(prepend(v.first(), w), c);
    const NCPoly merged = stuffle_rec(u.suffix_from(1), v.suffix_from(1), memo);
    for (const auto& [w, c] : merged.terms()) r.add_term(prepend(u.first() + v.first(), w), c);
    memo.emplace(std::move(key), r);
    return r;
}

}  // namespace

NCPoly shuffle(const Word& u, const Word& v) {
    PairMemo memo;
    return shuffle_rec(u, v, memo);
}

NCPoly stuffle(const Word& u, const Word& v) {
    PairMemo memo;
    return stuffle_rec(u, v, memo);
}

NCPoly ncp_combine(const Rat& a, const NCPoly& p, const Rat& b, const NCPoly& q) {
    NCPoly r = a * p;
    r += b * q;
    return r;
}

}  // namespace polyharm
