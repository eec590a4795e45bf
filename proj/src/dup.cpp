#include "dupcodec/dup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace dupcodec {

Word applyDuplication(const Word& w, std::size_t pos, std::size_t len) {
    if (len < 1 || len > kMaxDupLen)
        throw std::invalid_argument("duplication length must be in [1, 3]");
    if (pos + len > w.size())
        throw std::invalid_argument("duplication window [pos, pos+len) out of range");
    std::vector<Sym> v = w.symbols();
    v.insert(v.begin() + pos + len, v.begin() + pos, v.begin() + pos + len);
    return Word(std::move(v), w.alphabet());
}

Word applySubstitution(const Word& w, std::size_t pos, Sym sym) {
    if (pos >= w.size())
        throw std::invalid_argument("substitution position out of range");
    if (sym >= w.alphabet())
        throw std::invalid_argument("substitution symbol out of alphabet");
    if (sym == w[pos])
        throw std::invalid_argument("substitution must change the symbol");
    std::vector<Sym> v = w.symbols();
    v[pos] = sym;
    return Word(std::move(v), w.alphabet());
}

namespace detail {

// Is there a repeat of length a starting at i, i.e. v[i..i+a) == v[i+a..i+2a)?
inline bool repeatAt(const std::vector<Sym>& v, std::size_t i, std::size_t a) {
    if (i + 2 * a > v.size()) return false;
    for (std::size_t j = 0; j < a; ++j)
        if (v[i + j] != v[i + a + j]) return false;
    return true;
}

bool hasShortRepeat(const std::vector<Sym>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t a = 1; a <= kMaxDupLen; ++a)
            if (repeatAt(v, i, a)) return true;
    return false;
}

void rootInPlace(std::vector<Sym>& v) {
    // Leftmost, shortest-repeat-first deduplication. After erasing the
    // copy at [i+a, i+2a) every position left of i-5 still has no repeat
    // (its 6-symbol window is untouched), so the rescan can resume there
    // instead of at 0; the removal order is identical to a full restart.
    std::size_t i = 0;
    while (i < v.size()) {
        bool removed = false;
        for (std::size_t a = 1; a <= kMaxDupLen; ++a) {
            if (repeatAt(v, i, a)) {
                v.erase(v.begin() + i + a, v.begin() + i + 2 * a);
                i = i > 5 ? i - 5 : 0;
                removed = true;
                break;
            }
        }
        if (!removed) ++i;
    }
}

}  // namespace detail

bool isIrreducible(const Word& w) {
    return !detail::hasShortRepeat(w.symbols());
}

Word root(const Word& w) {
    std::vector<Sym> v = w.symbols();
    detail::rootInPlace(v);
    return Word(std::move(v), w.alphabet());
}

RootDiff rootDiff(const Word& r1, const Word& r2) {
    const std::size_t n1 = r1.size(), n2 = r2.size();
    const std::size_t minLen = std::min(n1, n2);
    std::size_t lcp = 0;
    while (lcp < minLen && r1[lcp] == r2[lcp]) ++lcp;
    std::size_t lcs = 0;
    while (lcs < minLen && r1[n1 - 1 - lcs] == r2[n2 - 1 - lcs]) ++lcs;
    const std::size_t suffix = std::min(lcs, minLen - lcp);
    RootDiff d;
    d.prefix = r1.subword(0, lcp);
    d.removed = r1.subword(lcp, n1 - lcp - suffix);
    d.inserted = r2.subword(lcp, n2 - lcp - suffix);
    d.suffix = r1.subword(n1 - suffix, suffix);
    return d;
}

std::vector<Word> boundedDescendants(const Word& w, std::size_t maxLen) {
    if (maxLen < w.size())
        throw std::invalid_argument("maxLen must be at least the word length");
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word> frontier;
    seen.insert(w);
    frontier.push_back(w);
    while (!frontier.empty()) {
        Word cur = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t len = 1; len <= kMaxDupLen; ++len) {
            if (cur.size() + len > maxLen || len > cur.size()) continue;
            for (std::size_t pos = 0; pos + len <= cur.size(); ++pos) {
                Word next = applyDuplication(cur, pos, len);
                if (seen.insert(next).second) frontier.push_back(next);
            }
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SubSearchResult maxRootAfterOneSub(const Word& w, std::size_t maxLen) {
    const int q = w.alphabet();
    SubSearchResult best;
    std::vector<Sym> scratch;
    for (const Word& d : boundedDescendants(w, maxLen)) {
        for (std::size_t pos = 0; pos < d.size(); ++pos) {
            for (Sym s = 0; s < q; ++s) {
                if (s == d[pos]) continue;
                scratch = d.symbols();
                scratch[pos] = s;
                std::vector<Sym> sub = scratch;
                detail::rootInPlace(scratch);
                if (scratch.size() > best.maxRootLength ||
                    (scratch.size() == best.maxRootLength &&
                     (sub.size() < best.witness.size() ||
                      (sub.size() == best.witness.size() &&
                       sub < best.witness.symbols())))) {
                    best.maxRootLength = scratch.size();
                    best.witness = Word(std::move(sub), q);
                }
            }
        }
    }
    return best;
}

Word randomIrreducible(int alphabet, std::size_t length, std::mt19937_64& rng) {
    std::vector<Sym> v;
    v.reserve(length);
    std::vector<Sym> valid;
    while (v.size() < length) {
        valid.clear();
        for (Sym s = 0; s < alphabet; ++s) {
            v.push_back(s);
            bool ok = true;
            for (std::size_t a = 1; a <= kMaxDupLen && ok; ++a) {
                if (v.size() >= 2 * a &&
                    detail::repeatAt(v, v.size() - 2 * a, a))
                    ok = false;
            }
            v.pop_back();
            if (ok) valid.push_back(s);
        }
        // At least q-2 >= 1 extensions always remain repeat-free.
        v.push_back(valid[rng() % valid.size()]);
    }
    return Word(std::move(v), alphabet);
}

}  // namespace dupcodec
