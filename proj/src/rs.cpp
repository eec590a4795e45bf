#include "dupcodec/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupcodec {

namespace {

using Elem = GaloisField::Elem;
using Poly = std::vector<Elem>;  // coefficient of x^i at index i

Poly polyMul(const GaloisField& f, const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] ^= f.mul(a[i], b[j]);
    }
    return out;
}

Elem polyEval(const GaloisField& f, const Poly& p, Elem x) {
    Elem acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = Elem(f.mul(acc, x) ^ p[i]);
    return acc;
}

std::size_t polyDegree(const Poly& p) {
    std::size_t d = p.size();
    while (d > 1 && p[d - 1] == 0) --d;
    return d - 1;
}

}  // namespace

ReedSolomon::ReedSolomon(int degree) : field_(degree) {
    n_ = field_.order();
    k_ = n_ - kParity;
    // generator polynomial (x + alpha)(x + alpha^2)(x + alpha^3)(x + alpha^4)
    generator_ = {1};
    for (unsigned j = 1; j <= kParity; ++j)
        generator_ = polyMul(field_, generator_, {field_.alphaPow(j), 1});
}

unsigned ReedSolomon::positionExponent(unsigned pos) const {
    // message symbol i is the coefficient of x^(4+i), parity j of x^j
    return pos < k_ ? kParity + pos : pos - k_;
}

std::vector<Elem> ReedSolomon::encode(const std::vector<Elem>& message) const {
    if (message.size() != k_)
        throw std::invalid_argument("message must have N-4 symbols");
    for (Elem m : message)
        if (m >= field_.size())
            throw std::invalid_argument("message symbol out of field");

    // remainder of m(x) x^4 modulo the generator
    Elem rem[kParity] = {0, 0, 0, 0};
    for (std::size_t i = message.size(); i-- > 0;) {
        Elem fb = Elem(message[i] ^ rem[3]);
        rem[3] = Elem(rem[2] ^ field_.mul(generator_[3], fb));
        rem[2] = Elem(rem[1] ^ field_.mul(generator_[2], fb));
        rem[1] = Elem(rem[0] ^ field_.mul(generator_[1], fb));
        rem[0] = field_.mul(generator_[0], fb);
    }
    std::vector<Elem> codeword(message);
    codeword.insert(codeword.end(), rem, rem + kParity);
    return codeword;
}

bool ReedSolomon::isCodeword(const std::vector<Elem>& word) const {
    if (word.size() != n_) return false;
    for (unsigned j = 1; j <= kParity; ++j) {
        Elem s = 0;
        for (unsigned p = 0; p < n_; ++p)
            s ^= field_.mul(word[p],
                            field_.alphaPow((long long)j * positionExponent(p)));
        if (s != 0) return false;
    }
    return true;
}

std::optional<std::vector<Elem>> ReedSolomon::decode(
    const std::vector<Elem>& received,
    const std::vector<unsigned>& erasures) const {
    if (received.size() != n_)
        throw std::invalid_argument("received word must have N symbols");
    if (erasures.size() > kParity)
        throw std::invalid_argument("more than 4 erasures");
    for (unsigned p : erasures)
        if (p >= n_) throw std::invalid_argument("erasure position out of range");
    for (std::size_t i = 0; i < erasures.size(); ++i)
        for (std::size_t j = i + 1; j < erasures.size(); ++j)
            if (erasures[i] == erasures[j])
                throw std::invalid_argument("duplicate erasure position");

    Poly S(kParity, 0);
    bool clean = true;
    for (unsigned j = 1; j <= kParity; ++j) {
        Elem s = 0;
        for (unsigned p = 0; p < n_; ++p)
            s ^= field_.mul(received[p],
                            field_.alphaPow((long long)j * positionExponent(p)));
        S[j - 1] = s;
        if (s != 0) clean = false;
    }
    if (clean)  // already a codeword (erased values, if any, were right)
        return std::vector<Elem>(received.begin(), received.begin() + k_);

    const std::size_t f = erasures.size();

    // erasure locator
    Poly gamma{1};
    for (unsigned p : erasures)
        gamma = polyMul(field_, gamma,
                        {1, field_.alphaPow(positionExponent(p))});

    // Forney syndromes: coefficients f..3 of S * gamma
    Poly sg = polyMul(field_, S, gamma);
    sg.resize(kParity);
    const std::size_t tLen = kParity - f;

    // Berlekamp-Massey on the Forney syndromes
    Poly lambda{1}, prev{1};
    std::size_t L = 0, shift = 1;
    Elem prevDelta = 1;
    for (std::size_t i = 0; i < tLen; ++i) {
        Elem delta = 0;
        for (std::size_t j = 0; j <= L && j < lambda.size(); ++j)
            delta ^= field_.mul(lambda[j], sg[f + i - j]);
        if (delta == 0) {
            ++shift;
        } else if (2 * L <= i) {
            Poly old = lambda;
            Elem coef = field_.div(delta, prevDelta);
            lambda.resize(std::max(lambda.size(), prev.size() + shift), 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                lambda[j + shift] ^= field_.mul(coef, prev[j]);
            L = i + 1 - L;
            prev = std::move(old);
            prevDelta = delta;
            shift = 1;
        } else {
            Elem coef = field_.div(delta, prevDelta);
            lambda.resize(std::max(lambda.size(), prev.size() + shift), 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                lambda[j + shift] ^= field_.mul(coef, prev[j]);
            ++shift;
        }
    }
    if (2 * L > tLen) return std::nullopt;  // more errors than correctable

    Poly psi = polyMul(field_, lambda, gamma);
    const std::size_t psiDeg = polyDegree(psi);

    // locate: psi(X_p^{-1}) == 0
    std::vector<unsigned> positions;
    for (unsigned p = 0; p < n_; ++p) {
        Elem xinv = field_.alphaPow(-(long long)positionExponent(p));
        if (polyEval(field_, psi, xinv) == 0) positions.push_back(p);
    }
    if (positions.size() != psiDeg) return std::nullopt;

    // error evaluator and Forney's formula
    Poly omega = polyMul(field_, S, psi);
    omega.resize(kParity);
    std::vector<Elem> corrected = received;
    for (unsigned p : positions) {
        Elem xinv = field_.alphaPow(-(long long)positionExponent(p));
        Elem num = polyEval(field_, omega, xinv);
        Elem den = 0;  // psi'(xinv): odd-degree terms only
        for (std::size_t d = 1; d < psi.size(); d += 2)
            den ^= field_.mul(psi[d], field_.pow(xinv, (long long)d - 1));
        if (den == 0) return std::nullopt;
        corrected[p] ^= field_.div(num, den);
    }
    if (!isCodeword(corrected)) return std::nullopt;
    return std::vector<Elem>(corrected.begin(), corrected.begin() + k_);
}

}  // namespace dupcodec
