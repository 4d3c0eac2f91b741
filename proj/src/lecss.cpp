#include "nmc/lecss.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "nmc/rng.hpp"

namespace nmc {

void LecssParams::validate() const {
    if (n == 0 || n > 64) throw std::invalid_argument("LecssParams: n must be in [1,64]");
    if (k_msg == 0) throw std::invalid_argument("LecssParams: k_msg must be positive");
    if (g_msg.rows() != k_msg || g_msg.cols() != n)
        throw std::invalid_argument("LecssParams: g_msg shape mismatch");
    if (g_rnd.rows() != z || (z > 0 && g_rnd.cols() != n))
        throw std::invalid_argument("LecssParams: g_rnd shape mismatch");
    if (k_msg + z > n)
        throw std::invalid_argument("LecssParams: k_msg + z exceeds n");

    const Gf2Matrix g = stacked();
    if (rank(g) != k_msg + z)
        throw std::invalid_argument("LecssParams: stacked generator not full row rank");
    if (min_distance(g) < d)
        throw std::invalid_argument("LecssParams: min distance below declared d");
    const Gf2Matrix rnd = (z > 0) ? g_rnd : Gf2Matrix(0, n);
    if (dual_distance(rnd.rows() == 0 ? Gf2Matrix(0, n) : rnd) <= t)
        throw std::invalid_argument("LecssParams: dual distance of g_rnd does not certify t");
}

Lecss::Lecss(LecssParams params) : params_(std::move(params)) {
    params_.validate();
    stacked_ = params_.stacked();
    Rref e = reduced_row_echelon(stacked_);
    echelon_rows_ = e.r.row_masks();
    transform_ = e.transform;
    pivots_ = e.pivots;
}

BitWord Lecss::encode(const BitWord& msg, const BitWord& rnd) const {
    if (msg.length() != params_.k_msg)
        throw std::invalid_argument("Lecss::encode: message length mismatch");
    if (rnd.length() != params_.z)
        throw std::invalid_argument("Lecss::encode: randomness length mismatch");
    return BitWord(params_.n, encode_mask(msg.mask(), rnd.mask()));
}

uint64_t Lecss::encode_mask(uint64_t msg_mask, uint64_t rnd_mask) const {
    return params_.g_msg.mul_left_mask(msg_mask) ^
           (params_.z ? params_.g_rnd.mul_left_mask(rnd_mask) : 0);
}

std::optional<uint64_t> Lecss::decode_mask(uint64_t c_mask) const {
    // Coordinates w.r.t. the echelon basis come straight off the pivot
    // columns; membership is checked by re-expanding.
    uint64_t b = 0;
    for (size_t i = 0; i < pivots_.size(); ++i)
        if ((c_mask >> pivots_[i]) & 1) b |= 1ULL << i;

    uint64_t expanded = 0;
    uint64_t coeff = 0;
    uint64_t sel = b;
    while (sel) {
        const int i = std::countr_zero(sel);
        expanded ^= echelon_rows_[static_cast<size_t>(i)];
        coeff ^= transform_[static_cast<size_t>(i)];
        sel &= sel - 1;
    }
    if (expanded != c_mask) return std::nullopt;
    return coeff & BitWord::mask_for(params_.k_msg);
}

std::optional<BitWord> Lecss::decode(const BitWord& c) const {
    if (c.length() != params_.n)
        throw std::invalid_argument("Lecss::decode: length mismatch");
    auto m = decode_mask(c.mask());
    if (!m) return std::nullopt;
    return BitWord(params_.k_msg, *m);
}

namespace {

// decode(c + delta) must be bot when decode(delta) is, and
// decode(c) ^ decode(delta) otherwise.
bool linearity_holds(const Lecss& code, uint64_t c_mask, uint64_t delta_mask) {
    const auto lhs = code.decode_mask(c_mask ^ delta_mask);
    const auto dd = code.decode_mask(delta_mask);
    if (!dd) return !lhs;
    const auto dc = code.decode_mask(c_mask);
    return lhs && dc && *lhs == (*dc ^ *dd);
}

}  // namespace

std::optional<LinearityViolation> certify_linearity(const Lecss& code,
                                                    const LinearityCheckOptions& opt) {
    const LecssParams& p = code.params();
    const uint32_t kk = p.k_msg + p.z;

    auto violation = [&](uint64_t c_mask, uint64_t delta_mask) {
        return LinearityViolation{BitWord(p.n, c_mask), BitWord(p.n, delta_mask)};
    };

    if (opt.exhaustive) {
        if (kk + p.n > 26)
            throw std::invalid_argument("certify_linearity: exhaustive pair space too large");
        for (uint64_t a = 0; a < (1ULL << kk); ++a) {
            const uint64_t c = code.encode_mask(a & BitWord::mask_for(p.k_msg), a >> p.k_msg);
            for (uint64_t delta = 0; delta < (1ULL << p.n); ++delta)
                if (!linearity_holds(code, c, delta)) return violation(c, delta);
        }
        return std::nullopt;
    }

    for (uint64_t i = 0; i < opt.samples; ++i) {
        SampleRng rng(opt.seed, i);
        const uint64_t a = rng.next_bits(kk);
        const uint64_t delta = rng.next_bits(p.n);
        const uint64_t c = code.encode_mask(a & BitWord::mask_for(p.k_msg), a >> p.k_msg);
        if (!linearity_holds(code, c, delta)) return violation(c, delta);
    }
    return std::nullopt;
}

std::optional<DistanceViolation> certify_distance(const Lecss& code) {
    const LecssParams& p = code.params();
    if (p.d <= 1) return std::nullopt;

    // Walk words in increasing weight via subset enumeration per weight.
    std::vector<uint32_t> idx;
    for (uint32_t w = 1; w < p.d; ++w) {
        idx.assign(w, 0);
        for (uint32_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            uint64_t word = 0;
            for (uint32_t i : idx) word |= 1ULL << i;
            if (code.decode_mask(word)) return DistanceViolation{BitWord(p.n, word)};

            // next combination
            int i = static_cast<int>(w) - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == p.n - w + static_cast<uint32_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (uint32_t j = static_cast<uint32_t>(i) + 1; j < w; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

bool subset_uniform(const Lecss& code, uint64_t msg_mask, const std::vector<uint32_t>& positions) {
    const LecssParams& p = code.params();
    const uint32_t sz = static_cast<uint32_t>(positions.size());
    std::vector<uint64_t> counts(1ULL << sz, 0);
    for (uint64_t r = 0; r < (1ULL << p.z); ++r) {
        const uint64_t c = code.encode_mask(msg_mask, r);
        uint64_t pat = 0;
        for (uint32_t i = 0; i < sz; ++i)
            if ((c >> positions[i]) & 1) pat |= 1ULL << i;
        ++counts[pat];
    }
    for (uint64_t v : counts)
        if (v != (1ULL << p.z) >> sz) return false;
    return true;
}

// All position subsets of size 1..t, in lexicographic order.
template <typename Fn>
bool for_each_subset(uint32_t n, uint32_t t, Fn fn) {
    std::vector<uint32_t> idx;
    for (uint32_t sz = 1; sz <= t; ++sz) {
        if (sz > n) break;
        idx.assign(sz, 0);
        for (uint32_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            if (!fn(idx)) return false;
            int i = static_cast<int>(sz) - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - sz + static_cast<uint32_t>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (uint32_t j = static_cast<uint32_t>(i) + 1; j < sz; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

}  // namespace

std::optional<SecrecyViolation> certify_secrecy(const Lecss& code) {
    const LecssParams& p = code.params();
    if (p.t == 0) return std::nullopt;

    std::optional<SecrecyViolation> found;
    for (uint64_t msg = 0; msg < (1ULL << p.k_msg) && !found; ++msg) {
        for_each_subset(p.n, p.t, [&](const std::vector<uint32_t>& positions) {
            if (!subset_uniform(code, msg, positions)) {
                found = SecrecyViolation{BitWord(p.k_msg, msg), positions};
                return false;
            }
            return true;
        });
    }
    return found;
}

namespace {

// Incrementally maintained span of the rows drawn so far, used to price
// candidate rows during search: adding row v keeps distance >= d iff
// every word of v ^ span has weight >= d.
struct SpanState {
    std::vector<uint64_t> words{0};
    uint32_t dim = 0;
    uint32_t min_weight = UINT32_MAX;  // over nonzero words

    bool contains(uint64_t v) const {
        for (uint64_t w : words)
            if (w == v) return true;
        return false;
    }

    uint32_t weight_if_added(uint64_t v) const {
        uint32_t best = min_weight;
        for (uint64_t w : words) {
            const uint32_t wt = static_cast<uint32_t>(std::popcount(w ^ v));
            if (wt < best) best = wt;
        }
        return best;
    }

    void add(uint64_t v) {
        const size_t old = words.size();
        words.reserve(old * 2);
        for (size_t i = 0; i < old; ++i) {
            const uint64_t w = words[i] ^ v;
            words.push_back(w);
            const uint32_t wt = static_cast<uint32_t>(std::popcount(w));
            if (wt < min_weight) min_weight = wt;
        }
        ++dim;
    }
};

}  // namespace

std::optional<LecssParams> search_lecss(const LecssSearchSpec& spec) {
    if (spec.n == 0 || spec.n > 24)
        throw std::invalid_argument("search_lecss: n must be in [1,24] for exact certification");
    if (spec.k_msg == 0 || spec.k_msg > spec.n)
        throw std::invalid_argument("search_lecss: bad k_msg");

    const uint64_t row_mask = BitWord::mask_for(spec.n);
    constexpr uint32_t kRowAttempts = 64;

    for (uint64_t trial = 0; trial < spec.trials; ++trial) {
        std::mt19937_64 rng(mix_seed(spec.seed, trial));
        auto draw_row = [&] { return rng() & row_mask; };

        SpanState span;
        std::vector<uint64_t> rows;
        bool dead = false;

        auto try_grow = [&](uint32_t attempts) {
            for (uint32_t a = 0; a < attempts; ++a) {
                const uint64_t v = draw_row();
                if (v == 0 || span.contains(v)) continue;
                if (span.weight_if_added(v) < spec.d_target) continue;
                span.add(v);
                rows.push_back(v);
                return true;
            }
            return false;
        };

        for (uint32_t i = 0; i < spec.k_msg; ++i) {
            if (!try_grow(kRowAttempts)) {
                dead = true;
                break;
            }
        }
        if (dead) continue;

        // Greedy randomness block: keep extending while the distance
        // constraint survives.
        while (rows.size() < spec.n && try_grow(kRowAttempts)) {
        }

        const uint32_t z = static_cast<uint32_t>(rows.size()) - spec.k_msg;
        LecssParams params;
        params.n = spec.n;
        params.k_msg = spec.k_msg;
        params.z = z;
        params.t = spec.t_target;
        params.g_msg = Gf2Matrix::from_row_masks(
            spec.n, std::vector<uint64_t>(rows.begin(), rows.begin() + spec.k_msg));
        params.g_rnd = Gf2Matrix::from_row_masks(
            spec.n, std::vector<uint64_t>(rows.begin() + spec.k_msg, rows.end()));

        if (dual_distance(params.g_rnd) <= spec.t_target) continue;

        params.d = min_distance(params.stacked());
        if (params.d < spec.d_target) continue;  // unreachable; kept as a guard
        params.certified = true;
        params.validate();
        return params;
    }
    return std::nullopt;
}

}  // namespace nmc
