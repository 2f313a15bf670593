#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <sonseq/complement.hpp>
#include <sonseq/rng.hpp>

namespace sonseq {

/*
 * Randomized extension search: grow a semiorthonormal sequence by appending
 * candidates from a fixed pool, one maximal completion per trial, and report
 * every maximal sequence reached together with its shape.
 */

struct PoolConfig {
    bool include_line_bundles = true;
    long long line_bundle_box = 1;    // |D_i| <= box for ch(O(D))
    bool include_curve_sheaves = true;
    bool include_generic_box = false; // all parity-valid chi(v,v)=1 classes in a box
    long long generic_box = 1;

    bool operator==(const PoolConfig&) const = default;
};

namespace detail {

template <typename Fn>
inline void for_each_box_tuple(long long box, std::size_t len, std::vector<long long>& cur, Fn&& fn) {
    if (cur.size() == len) {
        fn(cur);
        return;
    }
    for (long long v = -box; v <= box; ++v) {
        cur.push_back(v);
        for_each_box_tuple(box, len, cur, fn);
        cur.pop_back();
    }
}

} // namespace detail

// Candidate classes: sign-normalized, chi(v,v) = 1, deduplicated, sorted.
inline std::vector<K0Class> build_pool(const PoolConfig& cfg) {
    std::vector<K0Class> pool;
    std::vector<long long> cur;

    if (cfg.include_line_bundles && cfg.line_bundle_box >= 0) {
        detail::for_each_box_tuple(cfg.line_bundle_box, 9, cur, [&pool](const std::vector<long long>& t) {
            PicClass d;
            for (std::size_t i = 0; i < 9; ++i) d.c[i] = t[i];
            pool.push_back(ch_line_bundle(d));
        });
    }
    if (cfg.include_curve_sheaves) {
        for (const auto& c : enumerate_exceptional_vectors()) {
            pool.push_back(ch_curve_sheaf(c));
            pool.push_back(-ch_curve_sheaf(c));
        }
    }
    if (cfg.include_generic_box && cfg.generic_box >= 0) {
        detail::for_each_box_tuple(cfg.generic_box, 11, cur, [&pool](const std::vector<long long>& t) {
            K0Class v;
            v.x = t[0];
            for (std::size_t i = 0; i < 9; ++i) v.y.c[i] = t[1 + i];
            v.z = t[10];
            if (in_lattice(v)) pool.push_back(v);
        });
    }

    std::vector<K0Class> out;
    out.reserve(pool.size());
    for (const auto& v : pool) {
        if (!in_lattice(v)) continue;
        if (euler_pairing(v, v) != 1) continue;
        out.push_back(sign_normalized(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct ShapeInfo {
    std::vector<std::string> labels;  // per element: LB | CURVE | OTHER
    std::string shape;                // run-length compressed, e.g. "LB*2+CURVE*7"
    bool tail_orthogonal = true;      // the maximal CURVE suffix, pairwise both ways
};

// Label each class (up to sign): line bundle (x=1, z=y.y), structure sheaf
// of a (-1)-curve (x=0, y exceptional, z=1), or other; and check whether the
// trailing curve block is completely orthogonal.
inline ShapeInfo classify_shape(const SonSequence& seq) {
    ShapeInfo info;
    for (const auto& raw : seq) {
        const K0Class v = sign_normalized(raw);
        if (v.x == 1 && v.z == intersect(v.y, v.y)) {
            info.labels.push_back("LB");
        } else if (v.x == 0 && v.z == 1 && is_exceptional_vector(v.y)) {
            info.labels.push_back("CURVE");
        } else {
            info.labels.push_back("OTHER");
        }
    }

    std::string shape;
    for (std::size_t i = 0; i < info.labels.size();) {
        std::size_t j = i;
        while (j < info.labels.size() && info.labels[j] == info.labels[i]) ++j;
        if (!shape.empty()) shape += '+';
        shape += info.labels[i];
        if (j - i > 1) shape += '*' + std::to_string(j - i);
        i = j;
    }
    info.shape = shape;

    std::size_t tail = 0;
    while (tail < info.labels.size() && info.labels[info.labels.size() - 1 - tail] == "CURVE") ++tail;
    const std::size_t start = seq.size() - tail;
    for (std::size_t i = start; i < seq.size() && info.tail_orthogonal; ++i)
        for (std::size_t j = i + 1; j < seq.size() && info.tail_orthogonal; ++j)
            info.tail_orthogonal = completely_orthogonal(seq[i], seq[j]);
    return info;
}

struct SearchConfig {
    std::uint64_t rng_seed = 0;
    std::size_t trials = 10000;
    PoolConfig pool{};
    std::size_t threads = 1;
    std::vector<long long> moduli = default_moduli();
    long long witness_bound = 100;
};

struct MaximalEntry {
    SonSequence sequence;
    std::size_t length = 0;
    std::string shape;
    bool tail_orthogonal = true;
    std::size_t hits = 0;  // trials ending in this sequence
    std::optional<UnextendabilityReport> certificate;  // corank-2 maxima only
};

struct SearchReport {
    SonSequence seed_sequence;
    std::size_t pool_size = 0;
    std::size_t trials = 0;
    bool empty_pool_warning = false;
    std::size_t max_length = 0;
    std::map<std::string, std::size_t> shapes;  // histogram over trials
    std::vector<MaximalEntry> maximal;          // every distinct maximal sequence
};

// One trial = one randomized maximal completion of the seed: candidates that
// stay right-orthogonal to everything chosen so far are filtered
// incrementally, and the next element is drawn uniformly from them. Results
// are merged into sorted deterministic order, so reports depend only on the
// seed, the pool and rng_seed - not on thread count.
inline SearchReport random_extension_search(const SonSequence& seed, const SearchConfig& cfg) {
    if (!validate(seed).ok)
        throw std::invalid_argument("random_extension_search: seed sequence is not semiorthonormal");

    const std::vector<K0Class> pool = build_pool(cfg.pool);

    SearchReport rep;
    rep.seed_sequence = seed;
    rep.pool_size = pool.size();
    rep.trials = cfg.trials;
    rep.empty_pool_warning = pool.empty();

    // candidates compatible with the fixed seed, shared by all trials
    std::vector<std::uint32_t> base;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        bool ok = true;
        for (const auto& v : seed) {
            if (euler_pairing(pool[i], v) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) base.push_back(static_cast<std::uint32_t>(i));
    }

    using SuffixCounts = std::map<std::vector<std::uint32_t>, std::size_t>;
    const std::size_t workers = std::max<std::size_t>(1, cfg.threads);
    std::vector<SuffixCounts> partial(workers);

    auto run_range = [&](std::size_t w, std::size_t lo, std::size_t hi) {
        SuffixCounts& local = partial[w];
        for (std::size_t t = lo; t < hi; ++t) {
            Rng rng(derive_stream(cfg.rng_seed, t));
            std::vector<std::uint32_t> cand = base;
            std::vector<std::uint32_t> suffix;
            while (!cand.empty()) {
                const std::uint32_t pick = cand[rng.below(cand.size())];
                suffix.push_back(pick);
                std::vector<std::uint32_t> next;
                next.reserve(cand.size());
                for (const std::uint32_t c : cand)
                    if (euler_pairing(pool[c], pool[pick]) == 0) next.push_back(c);
                cand = std::move(next);
            }
            ++local[suffix];
        }
    };

    if (workers == 1) {
        run_range(0, 0, cfg.trials);
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (cfg.trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = std::min(cfg.trials, w * chunk);
            const std::size_t hi = std::min(cfg.trials, lo + chunk);
            threads.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : threads) th.join();
    }

    SuffixCounts merged;
    for (auto& local : partial)
        for (auto& [suffix, hits] : local) merged[suffix] += hits;

    rep.max_length = seed.size();
    for (const auto& [suffix, hits] : merged)
        rep.max_length = std::max(rep.max_length, seed.size() + suffix.size());

    for (const auto& [suffix, hits] : merged) {
        MaximalEntry entry;
        entry.sequence = seed;
        for (const std::uint32_t c : suffix) entry.sequence.push_back(pool[c]);
        entry.length = entry.sequence.size();
        const ShapeInfo shape = classify_shape(entry.sequence);
        entry.shape = shape.shape;
        entry.tail_orthogonal = shape.tail_orthogonal;
        entry.hits = hits;
        if (entry.length == rep.max_length && 11 - entry.length == 2)
            entry.certificate = unextendability_certificate(entry.sequence, cfg.moduli, cfg.witness_bound);
        rep.shapes[entry.shape] += hits;
        rep.maximal.push_back(std::move(entry));
    }

    std::sort(rep.maximal.begin(), rep.maximal.end(), [](const MaximalEntry& a, const MaximalEntry& b) {
        if (a.length != b.length) return a.length > b.length;
        return a.sequence < b.sequence;
    });
    return rep;
}

} // namespace sonseq
