#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nmc/gf2_matrix.hpp"

namespace nmc {

// Coset-style linear secret sharing over a binary code: a message picks a
// coset representative via g_msg, the randomness adds a word of the
// subcode generated by g_rnd. Decoding returns the message coordinates
// of codewords and bot for everything else, which gives the additive
// decode law and weight-< d rejection directly. Secrecy level t is
// certified by dual_distance(g_rnd) > t.
struct LecssParams {
    uint32_t n = 0;      // code length
    uint32_t k_msg = 0;  // message bits
    uint32_t z = 0;      // randomness bits
    uint32_t d = 0;      // certified distance
    uint32_t t = 0;      // certified secrecy
    Gf2Matrix g_msg;     // k_msg x n
    Gf2Matrix g_rnd;     // z x n
    bool certified = false;

    Gf2Matrix stacked() const { return g_msg.stacked_with(g_rnd); }

    // Premise d > 3n/8 wanted by the affine-tampering bound. Informational;
    // sub-threshold instances are still valid schemes.
    bool distance_premise() const { return 8ull * d > 3ull * n; }

    // Structural checks: shapes, full row rank, min distance >= d,
    // dual_distance(g_rnd) > t. Throws on violation.
    void validate() const;
};

class Lecss {
public:
    explicit Lecss(LecssParams params);

    const LecssParams& params() const { return params_; }

    BitWord encode(const BitWord& msg, const BitWord& rnd) const;
    uint64_t encode_mask(uint64_t msg_mask, uint64_t rnd_mask) const;

    std::optional<BitWord> decode(const BitWord& c) const;
    // Message coordinates as a mask, or nullopt when c is not a codeword.
    std::optional<uint64_t> decode_mask(uint64_t c_mask) const;

private:
    LecssParams params_;
    Gf2Matrix stacked_;
    std::vector<uint64_t> echelon_rows_;
    std::vector<uint64_t> transform_;
    std::vector<uint32_t> pivots_;
};

struct LinearityViolation {
    BitWord c;
    BitWord delta;
};
struct DistanceViolation {
    BitWord word;
};
struct SecrecyViolation {
    BitWord msg;
    std::vector<uint32_t> positions;
};

struct LinearityCheckOptions {
    bool exhaustive = true;
    uint64_t samples = 1'000'000;  // used when not exhaustive
    uint64_t seed = 0;
};

// Decode-additivity over (codeword, offset) pairs: exhaustive over all
// 2^(k_msg+z) x 2^n pairs, or seeded-sampled for larger lengths.
std::optional<LinearityViolation> certify_linearity(const Lecss& code,
                                                    const LinearityCheckOptions& opt);

// Every nonzero word of weight < d must decode to bot. Exhaustive over
// all words of weight 1..d-1.
std::optional<DistanceViolation> certify_distance(const Lecss& code);

// Joint distribution of the codeword bits at every position subset of
// size <= t is exactly uniform, for every message, over all 2^z
// randomness draws.
std::optional<SecrecyViolation> certify_secrecy(const Lecss& code);

struct LecssSearchSpec {
    uint32_t n = 0;
    uint32_t k_msg = 0;
    uint32_t d_target = 0;
    uint32_t t_target = 0;
    uint64_t trials = 100;
    uint64_t seed = 0;
};

// Seeded randomized search. Each trial draws message rows, then greedily
// grows the randomness block while the full code keeps min distance >=
// d_target; the trial succeeds if dual_distance(g_rnd) > t_target. The
// result depends only on (seed, trials): trials run in index order and
// the first success wins. Returns nullopt after `trials` failures (not a
// disproof of feasibility). Returned params carry the exact min distance
// as d and the requested t_target as t.
std::optional<LecssParams> search_lecss(const LecssSearchSpec& spec);

}  // namespace nmc
