#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <sonseq/k0.hpp>

namespace sonseq {

// An ordered list of K-theory classes; semiorthonormality is a checked
// property, not a constructor invariant, so intermediate states of the
// calculus below stay representable.
using SonSequence = std::vector<K0Class>;

struct ValidationResult {
    bool ok = true;
    // 0-based positions of the first violation in (later, earlier) scan
    // order; later == earlier flags a diagonal failure chi(v,v) != 1.
    std::size_t later = 0;
    std::size_t earlier = 0;
    Int value;
};

// chi(v_i, v_i) = 1 and chi(v_j, v_i) = 0 for j > i. Reports the smallest
// violating pair in lexicographic (j, i) order.
inline ValidationResult validate(const SonSequence& seq) {
    for (std::size_t j = 0; j < seq.size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const Int v = euler_pairing(seq[j], seq[i]);
            if (i == j ? v != 1 : v != 0) return {false, j, i, v};
        }
    }
    return {};
}

// (a, b) -> (b - chi(a,b) a, a) at positions (i, i+1).
inline SonSequence left_mutate(SonSequence seq, std::size_t i) {
    if (i + 1 >= seq.size()) throw std::out_of_range("left_mutate: index out of range");
    const K0Class a = seq[i];
    const K0Class b = seq[i + 1];
    seq[i] = b - euler_pairing(a, b) * a;
    seq[i + 1] = a;
    return seq;
}

// (a, b) -> (b, a - chi(a,b) b); inverse of left_mutate on valid pairs.
inline SonSequence right_mutate(SonSequence seq, std::size_t i) {
    if (i + 1 >= seq.size()) throw std::out_of_range("right_mutate: index out of range");
    const K0Class a = seq[i];
    const K0Class b = seq[i + 1];
    seq[i] = b;
    seq[i + 1] = a - euler_pairing(a, b) * b;
    return seq;
}

// Reverse the order and dualize each entry; chi(b~, a~) = chi(a, b) makes
// this validity-preserving.
inline SonSequence dualize_reverse(const SonSequence& seq) {
    SonSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(dual(*it));
    return out;
}

inline SonSequence sign_normalize(const SonSequence& seq) {
    SonSequence out;
    out.reserve(seq.size());
    for (const auto& v : seq) out.push_back(sign_normalized(v));
    return out;
}

inline SonSequence twist_all(const SonSequence& seq, const PicClass& d) {
    SonSequence out;
    out.reserve(seq.size());
    for (const auto& v : seq) out.push_back(twist(v, d));
    return out;
}

inline bool completely_orthogonal(const K0Class& a, const K0Class& b) {
    return euler_pairing(a, b) == 0 && euler_pairing(b, a) == 0;
}

// Reverse every maximal run of adjacent, pairwise completely orthogonal
// entries (length >= 2). Reordering such a run preserves validity.
inline SonSequence reorder_orthogonal_runs(SonSequence seq) {
    std::size_t start = 0;
    while (start < seq.size()) {
        std::size_t end = start + 1;
        while (end < seq.size()) {
            bool compatible = true;
            for (std::size_t i = start; i < end && compatible; ++i)
                compatible = completely_orthogonal(seq[i], seq[end]);
            if (!compatible) break;
            ++end;
        }
        if (end - start >= 2) std::reverse(seq.begin() + start, seq.begin() + end);
        start = end;
    }
    return seq;
}

struct RemarkStep {
    std::string op;
    std::string detail;
    std::optional<std::size_t> index;  // pair position for mutation steps, 1-based
    SonSequence sequence;
    bool valid = false;
};

struct RemarkTranscript {
    std::vector<RemarkStep> steps;
    SonSequence final;
    bool all_valid = false;
    std::optional<std::size_t> first_invalid_step;
};

// The classes of (O, O(-2e_1), O_{e_2}, ..., O_{e_8}).
inline SonSequence remark_start_sequence() {
    SonSequence seq;
    seq.push_back(ch_line_bundle(PicClass{}));
    seq.push_back(ch_line_bundle(-2 * PicClass::e(1)));
    for (std::size_t i = 2; i <= 8; ++i) seq.push_back(ch_curve_sheaf(PicClass::e(i)));
    return seq;
}

// Dualize-and-reverse, push the seven point-like duals to the right across
// the line bundle, forget shifts (sign-normalize), twist by K - 2e_1 and
// reorder the completely orthogonal block. Every intermediate is recorded
// and validated; the pipeline stops at the first invalid step.
inline RemarkTranscript reproduce_remark(const SonSequence& start = remark_start_sequence()) {
    RemarkTranscript t;
    SonSequence cur = start;

    auto record = [&t](const std::string& op, const std::string& detail, const SonSequence& seq,
                       std::optional<std::size_t> index = std::nullopt) {
        const bool ok = validate(seq).ok;
        t.steps.push_back({op, detail, index, seq, ok});
        if (!ok && !t.first_invalid_step) t.first_invalid_step = t.steps.size() - 1;
        return ok;
    };

    bool ok = record("start", "", cur);
    if (ok) {
        cur = dualize_reverse(cur);
        ok = record("dualize_reverse", "", cur);
    }
    if (ok && cur.size() >= 3) {
        // the line bundle sits at position n-2 after dualizing; walk it left
        // across the n-2 point-like duals
        const std::size_t moves = cur.size() - 2;
        for (std::size_t k = 0; ok && k < moves; ++k) {
            const std::size_t pos = moves - 1 - k;
            cur = right_mutate(cur, pos);
            ok = record("right_mutate", "position " + std::to_string(pos + 1), cur, pos + 1);
        }
    }
    if (ok) {
        cur = sign_normalize(cur);
        ok = record("sign_normalize", "", cur);
    }
    if (ok) {
        const PicClass d = canonical_class() - 2 * PicClass::e(1);
        cur = twist_all(cur, d);
        ok = record("twist", "K - 2e_1", cur);
    }
    if (ok) {
        cur = reorder_orthogonal_runs(cur);
        ok = record("reorder_orthogonal_runs", "", cur);
    }

    t.final = cur;
    t.all_valid = !t.first_invalid_step.has_value();
    return t;
}

} // namespace sonseq
