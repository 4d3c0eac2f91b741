#include "nmc/field.hpp"

#include <stdexcept>

namespace nmc {

namespace {

const uint32_t kModuli[9] = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1000011,    // x^6 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011011,  // x^8 + x^4 + x^3 + x + 1
};

void check_degree(uint32_t m) {
    if (m < 1 || m > 8) throw std::invalid_argument("field: degree must be in [1,8]");
}

void check_same(FieldElem a, FieldElem b) {
    if (a.m != b.m) throw std::invalid_argument("field: modulus mismatch");
}

}  // namespace

uint32_t field_modulus(uint32_t m) {
    check_degree(m);
    return kModuli[m];
}

FieldElem field_elem(uint32_t m, uint16_t value) {
    check_degree(m);
    if (value >> m) throw std::invalid_argument("field: value exceeds degree");
    return FieldElem{m, value};
}

FieldElem field_add(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem{a.m, static_cast<uint16_t>(a.value ^ b.value)};
}

FieldElem field_mul(FieldElem a, FieldElem b) {
    check_same(a, b);
    check_degree(a.m);
    const uint32_t mod = kModuli[a.m];
    uint32_t acc = 0;
    uint32_t x = a.value;
    uint32_t y = b.value;
    while (y) {
        if (y & 1) acc ^= x;
        x <<= 1;
        if (x >> a.m) x ^= mod;
        y >>= 1;
    }
    return FieldElem{a.m, static_cast<uint16_t>(acc)};
}

FieldElem field_pow(FieldElem a, uint64_t e) {
    check_degree(a.m);
    FieldElem acc{a.m, 1};
    FieldElem base = a;
    while (e) {
        if (e & 1) acc = field_mul(acc, base);
        base = field_mul(base, base);
        e >>= 1;
    }
    return acc;
}

BitWord field_to_word(FieldElem a) {
    check_degree(a.m);
    BitWord w(a.m);
    for (uint32_t j = 0; j < a.m; ++j)
        w.set(j, (a.value >> (a.m - 1 - j)) & 1);
    return w;
}

FieldElem field_from_word(uint32_t m, const BitWord& w) {
    check_degree(m);
    if (w.length() != m) throw std::invalid_argument("field: word length mismatch");
    uint16_t v = 0;
    for (uint32_t j = 0; j < m; ++j)
        if (w.get(j)) v = static_cast<uint16_t>(v | (1u << (m - 1 - j)));
    return FieldElem{m, v};
}

}  // namespace nmc
