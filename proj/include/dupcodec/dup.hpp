#ifndef DUPCODEC_DUP_HPP
#define DUPCODEC_DUP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dupcodec/word.hpp"

namespace dupcodec {

/// Maximum tandem-duplication length handled by this library. Roots are
/// unique for duplication lengths up to 3 and non-unique beyond, so the
/// whole stack is specialized to this value.
constexpr std::size_t kMaxDupLen = 3;

/// Bound on how far a single substitution (combined with any number of
/// duplications) can move the duplication root: the root changes by
/// deleting and inserting substrings of length at most kWindowBound at
/// one position.
constexpr std::size_t kWindowBound = 17;

/// Copy w[pos, pos+len) and insert the copy right after the original.
Word applyDuplication(const Word& w, std::size_t pos, std::size_t len);

/// Replace w[pos] by sym; sym must differ from the current symbol.
Word applySubstitution(const Word& w, std::size_t pos, Sym sym);

/// True iff w has no repeat uu with |u| <= 3.
bool isIrreducible(const Word& w);

/// The unique duplication root of w: deduplicate (leftmost, shortest
/// repeat first) until no repeat of length <= 3 remains.
Word root(const Word& w);

/// Decomposition of two roots r1 = prefix|removed|suffix and
/// r2 = prefix|inserted|suffix with maximal prefix and clipped suffix.
struct RootDiff {
    Word prefix;    // longest common prefix
    Word removed;   // middle of r1
    Word inserted;  // middle of r2
    Word suffix;    // common suffix, clipped so prefix/suffix don't overlap
};

/// Minimal-middle diff between two words (intended: two duplication
/// roots). The middle parts are never longer than in any other
/// common-prefix/common-suffix decomposition of the pair.
RootDiff rootDiff(const Word& r1, const Word& r2);

/// All descendants of w under <=3 tandem duplications whose length does
/// not exceed maxLen, in (length, lex) order. maxLen must be >= |w|.
std::vector<Word> boundedDescendants(const Word& w, std::size_t maxLen);

struct SubSearchResult {
    std::size_t maxRootLength = 0;
    Word witness;  // a substituted descendant attaining maxRootLength
};

/// Over every descendant of w of length <= maxLen and every single
/// substitution of it, find the maximum root length and a witness.
/// Ties are broken toward the shortest, then lexicographically least
/// witness.
SubSearchResult maxRootAfterOneSub(const Word& w, std::size_t maxLen);

/// Uniformly-chosen irreducible word of the given length (each symbol
/// drawn uniformly from the extensions that keep the prefix repeat-free).
Word randomIrreducible(int alphabet, std::size_t length, std::mt19937_64& rng);

namespace detail {
/// Repeat scan on a raw symbol buffer; returns true iff a repeat uu with
/// |u| <= 3 exists.
bool hasShortRepeat(const std::vector<Sym>& v);
/// In-place deduplication to the root, leftmost shortest repeat first.
void rootInPlace(std::vector<Sym>& v);
}  // namespace detail

}  // namespace dupcodec

#endif
