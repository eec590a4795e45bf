#ifndef DUPCODEC_TEXTIO_HPP
#define DUPCODEC_TEXTIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dupcodec/gf.hpp"
#include "dupcodec/word.hpp"

namespace dupcodec {

/// Sequence files: one word per line, hex digits '0'..'f' (or A/C/G/T in
/// DNA mode, alphabet 4 only). '#' lines and blank lines are skipped.
/// Parse errors carry line/column diagnostics.
std::vector<Word> readSequences(std::istream& in, int alphabet, bool dna);
void writeSequences(std::ostream& out, const std::vector<Word>& words,
                    bool dna);

/// Message files: one message per line, each field symbol rendered as
/// fixed-width lowercase hex (width = ceil(degree/4)), concatenated.
std::vector<std::vector<GaloisField::Elem>> readMessages(
    std::istream& in, int fieldDegree, std::size_t messageLen);
void writeMessages(std::ostream& out,
                   const std::vector<std::vector<GaloisField::Elem>>& messages,
                   int fieldDegree);

}  // namespace dupcodec

#endif
