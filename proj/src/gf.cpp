#include "dupcodec/gf.hpp"

#include <stdexcept>
#include <string>

namespace dupcodec {

namespace {

// Primitive polynomials, indexed by degree (bit i = coefficient of x^i).
constexpr unsigned kPrimitivePoly[17] = {
    0,      0,      0,
    0x000b,  // x^3 + x + 1
    0x0013,  // x^4 + x + 1
    0x0025,  // x^5 + x^2 + 1
    0x0043,  // x^6 + x + 1
    0x0089,  // x^7 + x^3 + 1
    0x011d,  // x^8 + x^4 + x^3 + x^2 + 1
    0x0211,  // x^9 + x^4 + 1
    0x0409,  // x^10 + x^3 + 1
    0x0805,  // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201b,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100b, // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

GaloisField::GaloisField(int degree) : degree_(degree) {
    if (degree < 3 || degree > 16)
        throw std::invalid_argument("field degree must be in [3, 16]");
    size_ = 1u << degree;
    poly_ = kPrimitivePoly[degree];

    exp_.resize(2 * order());
    log_.assign(size_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < order(); ++i) {
        if (i > 0 && x == 1)  // alpha cycled early: poly not primitive
            throw std::logic_error("polynomial for degree " +
                                   std::to_string(degree) +
                                   " is not primitive");
        exp_[i] = Elem(x);
        log_[x] = i;
        x <<= 1;
        if (x & size_) x ^= poly_;
    }
    if (x != 1)
        throw std::logic_error("polynomial for degree " +
                               std::to_string(degree) + " is not primitive");
    for (unsigned i = order(); i < 2 * order(); ++i)
        exp_[i] = exp_[i - order()];
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[order() - log_[a]];
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? Elem(1) : Elem(0);
    }
    long long le = (long long)log_[a] * e % (long long)order();
    if (le < 0) le += order();
    return exp_[le];
}

GaloisField::Elem GaloisField::alphaPow(long long e) const {
    long long le = e % (long long)order();
    if (le < 0) le += order();
    return exp_[le];
}

unsigned GaloisField::logAlpha(Elem a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
}

}  // namespace dupcodec
