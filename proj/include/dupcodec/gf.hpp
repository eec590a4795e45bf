#ifndef DUPCODEC_GF_HPP
#define DUPCODEC_GF_HPP

#include <cstdint>
#include <vector>

namespace dupcodec {

/// GF(2^degree) arithmetic with exp/log tables, degree in [3, 16].
/// Elements are the integers [0, 2^degree); addition is XOR. Each degree
/// uses one fixed primitive polynomial so codewords are reproducible
/// bit-for-bit across builds.
class GaloisField {
  public:
    using Elem = std::uint16_t;

    explicit GaloisField(int degree);

    int degree() const { return degree_; }
    unsigned size() const { return size_; }       // 2^degree
    unsigned order() const { return size_ - 1; }  // multiplicative order
    unsigned primitivePoly() const { return poly_; }

    static Elem add(Elem a, Elem b) { return a ^ b; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws on a == 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    /// alpha^e for the primitive element alpha = x (value 2).
    Elem alphaPow(long long e) const;
    /// discrete log base alpha; a must be nonzero
    unsigned logAlpha(Elem a) const;

  private:
    int degree_;
    unsigned size_;
    unsigned poly_;
    std::vector<Elem> exp_;      // alpha^i, i in [0, 2*order)
    std::vector<unsigned> log_;  // log table, log_[0] unused
};

}  // namespace dupcodec

#endif
