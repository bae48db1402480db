#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyharm {

// A word over the alphabet Y0 = {y0, y1, y2, ...}: a finite sequence of
// non-negative letter indices. The empty word is the monoid unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<uint32_t> indices) : s_(std::move(indices)) {}
    Word(std::initializer_list<uint32_t> indices) : s_(indices) {}

    static Word letter(uint32_t s) { return Word({s}); }

    bool empty() const { return s_.empty(); }
    size_t length() const { return s_.size(); }
    uint64_t weight() const;
    // the grade (w)+|w|; the degree of everything attached to the word
    uint64_t grade() const { return weight() + length(); }

    uint32_t operator[](size_t i) const { return s_[i]; }
    const std::vector<uint32_t>& indices() const { return s_; }
    auto begin() const { return s_.begin(); }
    auto end() const { return s_.end(); }

    uint32_t first() const { return s_.front(); }
    Word prefix(size_t n) const;       // first n letters
    Word suffix_from(size_t i) const;  // letters i..end

    bool operator==(const Word& o) const { return s_ == o.s_; }
    bool operator!=(const Word& o) const { return s_ != o.s_; }

    // "y2.y1.y5" for (2,1,5); "e" for the empty word
    std::string str() const;

private:
    std::vector<uint32_t> s_;
};

Word concat(const Word& a, const Word& b);
Word prepend(uint32_t letter, const Word& w);

// Canonical term order: graded lexicographic by (grade, length, indices).
bool graded_less(const Word& a, const Word& b);

struct WordGradedLess {
    bool operator()(const Word& a, const Word& b) const { return graded_less(a, b); }
};

// All words of the given grade / up to the given grade, in canonical order
// (ascending grade, then ascending length, then lexicographic indices).
std::vector<Word> words_of_grade(uint64_t grade);
std::vector<Word> words_up_to_grade(uint64_t max_grade);

// Text input; position-annotated failures.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t position, const std::string& message);
};

// Accepts "y2.y1.y5", bare comma list "2,1,5", lone index "5", and "e".
Word parse_word(const std::string& text);

}  // namespace polyharm
