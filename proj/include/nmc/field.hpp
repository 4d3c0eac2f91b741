#pragma once

#include <cstdint>

#include "nmc/bitword.hpp"

namespace nmc {

// Element of GF(2^m) for m in [1,8]. The modulus is fixed per degree
// (m=3: x^3+x+1, m=4: x^4+x+1, and so on; lexicographically smallest
// irreducibles), so two elements are compatible iff their degrees match.
// Addition is XOR; value holds the polynomial residue's coefficients.
struct FieldElem {
    uint32_t m = 0;
    uint16_t value = 0;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// Modulus polynomial for degree m, as a bit mask with the x^m term set.
uint32_t field_modulus(uint32_t m);

FieldElem field_elem(uint32_t m, uint16_t value);
FieldElem field_add(FieldElem a, FieldElem b);
FieldElem field_mul(FieldElem a, FieldElem b);
FieldElem field_pow(FieldElem a, uint64_t e);

// m-bit text/word form of an element, most significant coefficient
// first (value 2 in GF(8) renders as "010").
BitWord field_to_word(FieldElem a);
FieldElem field_from_word(uint32_t m, const BitWord& w);

}  // namespace nmc
