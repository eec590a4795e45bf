#ifndef DUPCODEC_RS_HPP
#define DUPCODEC_RS_HPP

#include <optional>
#include <vector>

#include "dupcodec/gf.hpp"

namespace dupcodec {

/// Systematic Reed-Solomon [N, N-4, 5] code over GF(2^degree) with
/// N = 2^degree - 1 and generator roots alpha^1..alpha^4. Corrects any
/// pattern with 2*errors + erasures <= 4; decode failures are explicit.
class ReedSolomon {
  public:
    using Elem = GaloisField::Elem;

    explicit ReedSolomon(int degree);

    const GaloisField& field() const { return field_; }
    unsigned blockLength() const { return n_; }   // N
    unsigned messageLength() const { return k_; } // N - 4
    static constexpr unsigned kParity = 4;

    /// Message (length N-4) -> codeword (length N); the message appears
    /// verbatim in the first N-4 positions.
    std::vector<Elem> encode(const std::vector<Elem>& message) const;

    /// True iff all four syndromes vanish.
    bool isCodeword(const std::vector<Elem>& word) const;

    /// Correct `received` (length N) given erasure positions (values at
    /// those positions are arbitrary). Returns the decoded message, or
    /// nullopt if the pattern is outside the correctable region.
    std::optional<std::vector<Elem>> decode(
        const std::vector<Elem>& received,
        const std::vector<unsigned>& erasures = {}) const;

  private:
    GaloisField field_;
    unsigned n_;
    unsigned k_;
    std::vector<Elem> generator_;  // degree-4 generator polynomial

    unsigned positionExponent(unsigned pos) const;
};

}  // namespace dupcodec

#endif
