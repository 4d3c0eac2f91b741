#include "nmc/amd.hpp"

#include <stdexcept>
#include <vector>

#include "nmc/parallel.hpp"

namespace nmc {

namespace {

BitWord slice(const BitWord& w, uint32_t begin, uint32_t len) {
    BitWord out(len);
    for (uint32_t j = 0; j < len; ++j) out.set(j, w.get(begin + j));
    return out;
}

void paste(BitWord& w, uint32_t begin, const BitWord& part) {
    for (uint32_t j = 0; j < part.length(); ++j) w.set(begin + j, part.get(j));
}

FieldElem block_elem(const AmdParams& p, const BitWord& w, uint32_t index) {
    return field_from_word(p.m, slice(w, index * p.m, p.m));
}

FieldElem tag_of(const AmdParams& p, const std::vector<FieldElem>& s, FieldElem x) {
    FieldElem tag = field_pow(x, p.u + 2);
    for (uint32_t i = 1; i <= p.u; ++i)
        tag = field_add(tag, field_mul(s[i - 1], field_pow(x, i)));
    return tag;
}

}  // namespace

void AmdParams::validate() const {
    if (m < 1 || m > 8) throw std::invalid_argument("AmdParams: m must be in [1,8]");
    if (u == 0) throw std::invalid_argument("AmdParams: u must be positive");
    if ((u + 2) % 2 == 0)
        throw std::invalid_argument("AmdParams: u+2 must be odd");
}

BitWord amd_encode(const AmdParams& p, const BitWord& s, FieldElem x) {
    p.validate();
    if (s.length() != p.message_bits())
        throw std::invalid_argument("amd_encode: message length mismatch");
    if (x.m != p.m) throw std::invalid_argument("amd_encode: randomness degree mismatch");

    std::vector<FieldElem> blocks(p.u);
    for (uint32_t i = 0; i < p.u; ++i) blocks[i] = block_elem(p, s, i);

    BitWord w(p.codeword_bits());
    paste(w, 0, s);
    paste(w, p.u * p.m, field_to_word(x));
    paste(w, (p.u + 1) * p.m, field_to_word(tag_of(p, blocks, x)));
    return w;
}

std::optional<BitWord> amd_verify(const AmdParams& p, const BitWord& w) {
    p.validate();
    if (w.length() != p.codeword_bits())
        throw std::invalid_argument("amd_verify: codeword length mismatch");

    std::vector<FieldElem> blocks(p.u);
    for (uint32_t i = 0; i < p.u; ++i) blocks[i] = block_elem(p, w, i);
    const FieldElem x = block_elem(p, w, p.u);
    const FieldElem tag = block_elem(p, w, p.u + 1);

    if (tag_of(p, blocks, x) != tag) return std::nullopt;
    return slice(w, 0, p.message_bits());
}

Rational amd_offset_acceptance(const AmdParams& p, const BitWord& s, const BitWord& delta) {
    if (delta.length() != p.codeword_bits())
        throw std::invalid_argument("amd_offset_acceptance: offset length mismatch");
    const uint64_t xs = 1ULL << p.m;
    uint64_t accept = 0;
    for (uint64_t xv = 0; xv < xs; ++xv) {
        const BitWord c = amd_encode(p, s, field_elem(p.m, static_cast<uint16_t>(xv)));
        if (amd_verify(p, c ^ delta)) ++accept;
    }
    return Rational::from_counts(accept, xs);
}

Rational amd_security_oracle(const AmdParams& p) {
    p.validate();
    const uint32_t k = p.message_bits();
    const uint32_t nbits = p.codeword_bits();
    if (k + nbits > 20)
        throw std::invalid_argument("amd_security_oracle: instance too large (2^20 cap)");

    const uint64_t msgs = 1ULL << k;
    const uint64_t words = 1ULL << nbits;
    const uint64_t xs = 1ULL << p.m;

    // Accepted codewords are exactly { (s,x,tag) : tag recomputes }, so a
    // shifted word verifies iff it lands in that set. Precompute the set
    // as a bitmap for the inner loop.
    std::vector<bool> valid(words, false);
    for (uint64_t sv = 0; sv < msgs; ++sv) {
        for (uint64_t xv = 0; xv < xs; ++xv) {
            const BitWord c = amd_encode(p, BitWord(k, sv), field_elem(p.m, static_cast<uint16_t>(xv)));
            valid[c.mask()] = true;
        }
    }

    auto chunk = [&](uint64_t begin, uint64_t end) {
        uint64_t worst = 0;
        std::vector<uint64_t> enc(xs);
        for (uint64_t sv = begin; sv < end; ++sv) {
            for (uint64_t xv = 0; xv < xs; ++xv)
                enc[xv] = amd_encode(p, BitWord(k, sv), field_elem(p.m, static_cast<uint16_t>(xv))).mask();
            for (uint64_t dv = 1; dv < words; ++dv) {
                uint64_t accept = 0;
                for (uint64_t xv = 0; xv < xs; ++xv)
                    if (valid[enc[xv] ^ dv]) ++accept;
                if (accept > worst) worst = accept;
            }
        }
        return worst;
    };
    const uint64_t worst = run_chunked<uint64_t>(
        msgs, chunk, [](uint64_t& acc, uint64_t v) { if (v > acc) acc = v; });

    return Rational::from_counts(worst, xs);
}

}  // namespace nmc
