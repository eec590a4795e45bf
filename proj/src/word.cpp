#include "dupcodec/word.hpp"

#include <stdexcept>

namespace dupcodec {

namespace {

void checkAlphabet(int q) {
    if (q < kMinAlphabet || q > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in [3, 16], got " +
                                    std::to_string(q));
}

}  // namespace

Word::Word(std::vector<Sym> symbols, int alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    checkAlphabet(alphabet_);
    for (Sym s : symbols_) {
        if (s >= alphabet_)
            throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                        " out of range for alphabet " +
                                        std::to_string(alphabet_));
    }
}

char symbolChar(Sym s) {
    return s < 10 ? char('0' + s) : char('a' + (s - 10));
}

Sym symbolFromChar(char c) {
    if (c >= '0' && c <= '9') return Sym(c - '0');
    if (c >= 'a' && c <= 'f') return Sym(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return Sym(c - 'A' + 10);
    return Sym(0xff);
}

Word Word::parse(std::string_view text, int alphabet) {
    checkAlphabet(alphabet);
    std::vector<Sym> syms;
    syms.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        Sym s = symbolFromChar(text[i]);
        if (s == 0xff || s >= alphabet)
            throw std::invalid_argument("invalid symbol '" +
                                        std::string(1, text[i]) +
                                        "' at column " + std::to_string(i + 1));
        syms.push_back(s);
    }
    return Word(std::move(syms), alphabet);
}

Word Word::parseDna(std::string_view text) {
    std::vector<Sym> syms;
    syms.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        Sym s;
        switch (text[i]) {
            case 'A': case 'a': s = 0; break;
            case 'C': case 'c': s = 1; break;
            case 'G': case 'g': s = 2; break;
            case 'T': case 't': s = 3; break;
            default:
                throw std::invalid_argument("invalid DNA symbol '" +
                                            std::string(1, text[i]) +
                                            "' at column " +
                                            std::to_string(i + 1));
        }
        syms.push_back(s);
    }
    return Word(std::move(syms), 4);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > symbols_.size())
        throw std::invalid_argument("subword out of range");
    return Word(std::vector<Sym>(symbols_.begin() + pos,
                                 symbols_.begin() + pos + len),
                alphabet_);
}

std::vector<std::size_t> Word::findOccurrences(const Word& pattern) const {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > size()) return out;
    for (std::size_t i = 0; i + pattern.size() <= size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < pattern.size(); ++j) {
            if (symbols_[i + j] != pattern[j]) { hit = false; break; }
        }
        if (hit) out.push_back(i);
    }
    return out;
}

std::size_t Word::countOccurrences(const Word& pattern) const {
    return findOccurrences(pattern).size();
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Sym s : symbols_) out.push_back(symbolChar(s));
    return out;
}

std::string Word::strDna() const {
    if (alphabet_ != 4)
        throw std::invalid_argument("DNA rendering requires alphabet 4");
    static constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
    std::string out;
    out.reserve(symbols_.size());
    for (Sym s : symbols_) out.push_back(kBases[s]);
    return out;
}

Word concat(const Word& a, const Word& b) {
    std::vector<Sym> syms = a.symbols();
    syms.insert(syms.end(), b.symbols().begin(), b.symbols().end());
    return Word(std::move(syms), std::max(a.alphabet(), b.alphabet()));
}

Word concat(const Word& a, const Word& b, const Word& c) {
    return concat(concat(a, b), c);
}

std::size_t WordHash::operator()(const Word& w) const {
    // FNV-1a over the symbol bytes
    std::size_t h = 1469598103934665603ull;
    for (Sym s : w.symbols()) {
        h ^= s;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace dupcodec
