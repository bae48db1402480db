#include "polyharm/word.hpp"

#include <algorithm>
#include <sstream>

namespace polyharm {

uint64_t Word::weight() const {
    uint64_t w = 0;
    for (uint32_t s : s_) w += s;
    return w;
}

Word Word::prefix(size_t n) const {
    return Word(std::vector<uint32_t>(s_.begin(), s_.begin() + static_cast<long>(n)));
}

Word Word::suffix_from(size_t i) const {
    return Word(std::vector<uint32_t>(s_.begin() + static_cast<long>(i), s_.end()));
}

std::string Word::str() const {
    if (s_.empty()) return "e";
    std::ostringstream out;
    for (size_t i = 0; i < s_.size(); ++i) {
        if (i) out << ".";
        out << "y" << s_[i];
    }
    return out.str();
}

Word concat(const Word& a, const Word& b) {
    std::vector<uint32_t> s = a.indices();
    s.insert(s.end(), b.indices().begin(), b.indices().end());
    return Word(std::move(s));
}

Word prepend(uint32_t letter, const Word& w) {
    std::vector<uint32_t> s;
    s.reserve(w.length() + 1);
    s.push_back(letter);
    s.insert(s.end(), w.indices().begin(), w.indices().end());
    return Word(std::move(s));
}

bool graded_less(const Word& a, const Word& b) {
    const uint64_t ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    if (a.length() != b.length()) return a.length() < b.length();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void compositions_into(uint64_t weight, size_t parts, std::vector<uint32_t>& acc,
                       std::vector<Word>& out) {
    if (parts == 1) {
        acc.push_back(static_cast<uint32_t>(weight));
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (uint64_t first = 0; first <= weight; ++first) {
        acc.push_back(static_cast<uint32_t>(first));
        compositions_into(weight - first, parts - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Word> words_of_grade(uint64_t grade) {
    std::vector<Word> out;
    if (grade == 0) {
        out.emplace_back();
        return out;
    }
    for (size_t len = 1; len <= grade; ++len) {
        std::vector<uint32_t> acc;
        compositions_into(grade - len, len, acc, out);
    }
    return out;
}

std::vector<Word> words_up_to_grade(uint64_t max_grade) {
    std::vector<Word> out;
    for (uint64_t g = 0; g <= max_grade; ++g) {
        auto layer = words_of_grade(g);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

ParseError::ParseError(size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      pos(position) {}

}  // namespace polyharm
