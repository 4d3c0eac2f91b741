#pragma once

#include <cstdint>
#include <optional>

#include "nmc/bitword.hpp"
#include "nmc/field.hpp"
#include "nmc/rational.hpp"

namespace nmc {

// Polynomial-tag AMD scheme over GF(2^m): a message is u field elements,
// the codeword is (u+2) elements laid out (s_1..s_u, x, tag) with
// tag = x^{u+2} + sum_{i=1..u} s_i x^i for encoding randomness x.
// u+2 must be odd so that shifting x by a nonzero offset leaves a
// nonvanishing top coefficient in the tag difference.
struct AmdParams {
    uint32_t m = 3;
    uint32_t u = 1;

    uint32_t message_bits() const { return u * m; }
    uint32_t codeword_bits() const { return (u + 2) * m; }
    Rational rho() const { return Rational(static_cast<int64_t>(u) + 1, int64_t{1} << m); }

    void validate() const;
};

// Deterministic given (s, x); s has u*m bits, blocks are most significant
// coefficient first.
BitWord amd_encode(const AmdParams& p, const BitWord& s, FieldElem x);

// Message iff the tag recomputes, otherwise nullopt.
std::optional<BitWord> amd_verify(const AmdParams& p, const BitWord& w);

// Acceptance probability of one fixed offset over uniform encoding
// randomness, for message s.
Rational amd_offset_acceptance(const AmdParams& p, const BitWord& s, const BitWord& delta);

// Exhaustive security check: max over all messages s and all nonzero
// offsets delta of Pr_x[verify(encode(s;x) + delta) != bot]. Rejects
// instances with more than 2^20 (s, delta) pairs.
Rational amd_security_oracle(const AmdParams& p);

}  // namespace nmc
