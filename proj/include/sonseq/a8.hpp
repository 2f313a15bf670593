#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include <sonseq/rng.hpp>
#include <sonseq/sequence.hpp>

namespace sonseq {

/*
 * A8 chains of roots inside the E8 part of the lattice, their partial-sum
 * orthogonal octads, the nine-term line-bundle sequence they transfer to,
 * and reflection words realizing chain-to-chain isometries.
 */

struct A8System {
    std::array<PicClass, 8> roots;

    bool operator==(const A8System&) const = default;
    friend bool operator<(const A8System& a, const A8System& b) { return a.roots < b.roots; }
};

// Each entry a root; adjacent products 1, distant products 0.
inline bool is_valid_a8(const A8System& sys) {
    for (const auto& r : sys.roots)
        if (!is_root(r)) return false;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            const Int expected = (j == i + 1) ? 1 : 0;
            if (intersect(sys.roots[i], sys.roots[j]) != expected) return false;
        }
    }
    return true;
}

inline void require_valid_a8(const A8System& sys, const char* who) {
    if (!is_valid_a8(sys)) throw std::invalid_argument(std::string(who) + ": invalid A8 system");
}

// (K + e_1, e_2 - e_1, e_3 - e_2, ..., e_8 - e_7)
inline A8System canonical_a8() {
    A8System sys;
    sys.roots[0] = canonical_class() + PicClass::e(1);
    for (std::size_t i = 1; i < 8; ++i) sys.roots[i] = PicClass::e(i + 1) - PicClass::e(i);
    return sys;
}

// s_i = A_1 + ... + A_i; each s_i is a root and all differences s_j - s_i
// are roots, which is exactly the orthogonality of the line bundles O(s_i).
inline std::array<PicClass, 8> partial_sums(const A8System& sys) {
    require_valid_a8(sys, "partial_sums");
    std::array<PicClass, 8> s;
    PicClass acc;
    for (std::size_t i = 0; i < 8; ++i) {
        acc += sys.roots[i];
        s[i] = acc;
    }
    return s;
}

// (O(K), O(K + e_2), ..., O(K + e_8), O(K - 2e_1))
inline SonSequence m_sequence() {
    const PicClass k = canonical_class();
    SonSequence seq;
    seq.push_back(ch_line_bundle(k));
    for (std::size_t i = 2; i <= 8; ++i) seq.push_back(ch_line_bundle(k + PicClass::e(i)));
    seq.push_back(ch_line_bundle(k - 2 * PicClass::e(1)));
    return seq;
}

// (O(K), O(s_2), ..., O(s_8), O(3K - 2A_1)); for the canonical system the
// sums telescope to K + e_i and the last term to K - 2e_1, i.e. m_sequence().
inline SonSequence transfer_m_sequence(const A8System& sys) {
    const auto s = partial_sums(sys);
    const PicClass k = canonical_class();
    SonSequence seq;
    seq.push_back(ch_line_bundle(k));
    for (std::size_t i = 1; i < 8; ++i) seq.push_back(ch_line_bundle(s[i]));
    seq.push_back(ch_line_bundle(3 * k - 2 * sys.roots[0]));
    return seq;
}

// Reflection in a (-2)-class: v -> v + (v.R) R. Preserves the form, fixes K.
inline PicClass weyl_reflect(const PicClass& root, const PicClass& v) {
    if (!is_root(root)) throw std::invalid_argument("weyl_reflect: reflection vector is not a root");
    return v + intersect(v, root) * root;
}

inline A8System weyl_reflect(const PicClass& root, const A8System& sys) {
    A8System out;
    for (std::size_t i = 0; i < 8; ++i) out.roots[i] = weyl_reflect(root, sys.roots[i]);
    return out;
}

inline PicClass apply_word(const std::vector<PicClass>& word, PicClass v) {
    for (const auto& r : word) v = weyl_reflect(r, v);
    return v;
}

inline A8System apply_word(const std::vector<PicClass>& word, A8System sys) {
    for (const auto& r : word) sys = weyl_reflect(r, sys);
    return sys;
}

inline const std::vector<PicClass>& all_roots() {
    static const std::vector<PicClass> roots = enumerate_roots();
    return roots;
}

struct WeylWordResult {
    bool found = false;
    std::vector<PicClass> word;  // reflections applied left to right
};

// Match the chains element by element: at stage k, search the orbit of the
// current image of source_k under reflections orthogonal to the already
// matched targets (those reflections fix them). If source and target are
// conjugate chains the stage orbit always contains the target, so the greedy
// match cannot dead-end; not-found within depth_bound is reported, never
// guessed around.
inline WeylWordResult find_weyl_word(const A8System& source, const A8System& target,
                                     std::size_t depth_bound = 64) {
    require_valid_a8(source, "find_weyl_word");
    require_valid_a8(target, "find_weyl_word");

    std::array<PicClass, 8> cur = source.roots;
    std::vector<PicClass> word;

    for (std::size_t k = 0; k < 8; ++k) {
        if (cur[k] == target.roots[k]) continue;

        std::vector<PicClass> allowed;
        for (const auto& g : all_roots()) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) ok = intersect(g, target.roots[j]) == 0;
            if (ok) allowed.push_back(g);
        }

        // breadth-first orbit walk from cur[k] to target_k
        std::map<PicClass, std::pair<PicClass, bool>> parent;  // node -> (via-root, has-parent)
        std::deque<PicClass> queue{cur[k]};
        parent[cur[k]] = {PicClass{}, false};
        bool reached = false;
        while (!queue.empty() && !reached) {
            const PicClass node = queue.front();
            queue.pop_front();
            for (const auto& g : allowed) {
                const PicClass next = weyl_reflect(g, node);
                if (parent.contains(next)) continue;
                parent[next] = {g, true};
                if (next == target.roots[k]) {
                    reached = true;
                    break;
                }
                queue.push_back(next);
            }
        }
        if (!reached) return {};

        std::vector<PicClass> segment;
        for (PicClass node = target.roots[k]; parent.at(node).second;) {
            const PicClass g = parent.at(node).first;
            segment.push_back(g);
            node = weyl_reflect(g, node);  // involutive: step back along the edge
        }
        std::reverse(segment.begin(), segment.end());

        if (word.size() + segment.size() > depth_bound) return {};
        for (const auto& g : segment) {
            for (auto& c : cur) c = weyl_reflect(g, c);
            word.push_back(g);
        }
    }

    for (std::size_t i = 0; i < 8; ++i)
        if (cur[i] != target.roots[i]) return {};
    return {true, word};
}

// Image of the canonical chain under a random reflection word.
inline A8System random_a8_system(std::uint64_t seed, std::size_t word_length = 12) {
    Rng rng(derive_stream(seed, 0xa8));
    const auto& roots = all_roots();
    A8System sys = canonical_a8();
    for (std::size_t i = 0; i < word_length; ++i) sys = weyl_reflect(roots[rng.below(roots.size())], sys);
    return sys;
}

} // namespace sonseq
