#ifndef DUPCODEC_WORD_HPP
#define DUPCODEC_WORD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dupcodec {

using Sym = std::uint8_t;

constexpr int kMinAlphabet = 3;
constexpr int kMaxAlphabet = 16;

/// A finite string over the alphabet {0, ..., q-1}. Words are immutable
/// value types; all channel/codec operations produce fresh words.
class Word {
  public:
    Word() = default;
    Word(std::vector<Sym> symbols, int alphabet);

    /// Parse from hex digits ('0'..'9', 'a'..'f', case-insensitive).
    static Word parse(std::string_view text, int alphabet);
    /// Parse from DNA letters (A=0, C=1, G=2, T=3); requires alphabet 4.
    static Word parseDna(std::string_view text);

    int alphabet() const { return alphabet_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Sym operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Sym>& symbols() const { return symbols_; }

    Word subword(std::size_t pos, std::size_t len) const;

    /// Number of (possibly overlapping) occurrences of `pattern`.
    std::size_t countOccurrences(const Word& pattern) const;
    /// Start positions of all occurrences of `pattern`, ascending.
    std::vector<std::size_t> findOccurrences(const Word& pattern) const;

    std::string str() const;     // hex digits
    std::string strDna() const;  // ACGT, alphabet must be 4

    bool operator==(const Word& other) const = default;
    bool operator<(const Word& other) const {
        return symbols_ < other.symbols_;
    }

  private:
    std::vector<Sym> symbols_;
    int alphabet_ = 0;
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

char symbolChar(Sym s);
Sym symbolFromChar(char c);  // returns 0xff on invalid input

}  // namespace dupcodec

#endif
