#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <sonseq/integers.hpp>

namespace sonseq {

/*
 * The rank-9 Picard lattice of a degree-1 del Pezzo surface in the basis
 * (h, e_1, ..., e_8), with intersection form diag(1, -1, ..., -1).
 */
struct PicClass {
    std::array<Int, 9> c{};  // (h, e_1, ..., e_8)

    static PicClass h() {
        PicClass v;
        v.c[0] = 1;
        return v;
    }
    // i in 1..8
    static PicClass e(std::size_t i) {
        if (i < 1 || i > 8) throw std::out_of_range("PicClass::e: index must be in 1..8");
        PicClass v;
        v.c[i] = 1;
        return v;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    friend PicClass operator+(const PicClass& a, const PicClass& b) {
        PicClass r;
        for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend PicClass operator-(const PicClass& a, const PicClass& b) {
        PicClass r;
        for (std::size_t i = 0; i < 9; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend PicClass operator-(const PicClass& a) {
        PicClass r;
        for (std::size_t i = 0; i < 9; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend PicClass operator*(const Int& s, const PicClass& a) {
        PicClass r;
        for (std::size_t i = 0; i < 9; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    PicClass& operator+=(const PicClass& b) {
        for (std::size_t i = 0; i < 9; ++i) c[i] += b.c[i];
        return *this;
    }

    bool operator==(const PicClass&) const = default;
    // lexicographic on (h, e_1, ..., e_8); the canonical enumeration order
    friend bool operator<(const PicClass& a, const PicClass& b) { return a.c < b.c; }
};

inline Int intersect(const PicClass& a, const PicClass& b) {
    Int r = a.c[0] * b.c[0];
    for (std::size_t i = 1; i < 9; ++i) r -= a.c[i] * b.c[i];
    return r;
}

// K_S = -3h + e_1 + ... + e_8
inline PicClass canonical_class() {
    PicClass k;
    k.c[0] = -3;
    for (std::size_t i = 1; i < 9; ++i) k.c[i] = 1;
    return k;
}

inline bool is_root(const PicClass& v) {
    return intersect(v, v) == -2 && intersect(v, canonical_class()) == 0;
}

inline bool is_exceptional_vector(const PicClass& v) {
    return intersect(v, v) == -1 && intersect(v, canonical_class()) == -1;
}

namespace detail {

// All v = a*h + sum b_i e_i inside the coordinate box |a|,|b_i| <= box with
// v.v = norm and v.K = kprod. The two defining equations give
//   sum b_i^2 = a^2 - norm   and   sum b_i = -3a - kprod,
// so partial tuples are pruned by the remaining square budget and by
// Cauchy-Schwarz on the remaining coordinates. Both prunes follow from the
// equations alone; they cannot exclude a solution inside the box.
inline void enumerate_box_rec(long long box, std::size_t pos, long long sum_left,
                              long long sq_left, std::array<long long, 9>& cur,
                              std::vector<PicClass>& out) {
    if (pos == 9) {
        if (sum_left == 0 && sq_left == 0) {
            PicClass v;
            for (std::size_t i = 0; i < 9; ++i) v.c[i] = cur[i];
            out.push_back(v);
        }
        return;
    }
    const long long remaining = static_cast<long long>(9 - pos);
    if (sq_left < 0) return;
    if (sum_left * sum_left > remaining * sq_left) return;
    if (sum_left > remaining * box || sum_left < -remaining * box) return;
    for (long long b = -box; b <= box; ++b) {
        cur[pos] = b;
        enumerate_box_rec(box, pos + 1, sum_left - b, sq_left - b * b, cur, out);
    }
    cur[pos] = 0;
}

inline std::vector<PicClass> enumerate_classes(long long norm, long long kprod, long long box) {
    std::vector<PicClass> out;
    std::array<long long, 9> cur{};
    for (long long a = -box; a <= box; ++a) {
        const long long sq = a * a - norm;
        const long long sum = -3 * a - kprod;
        if (sq < 0) continue;
        cur[0] = a;
        enumerate_box_rec(box, 1, sum, sq, cur, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

// The 240 roots R with R.R = -2, R.K = 0. Cauchy-Schwarz on the defining
// equations bounds the h-coefficient by |a| <= 4, so the default box is
// exhaustive; widening it cannot add classes.
inline std::vector<PicClass> enumerate_roots(long long box = 4) {
    return detail::enumerate_classes(-2, 0, box);
}

// The 240 exceptional vectors V with V.V = -1, V.K = -1 (|a| <= 7 suffices).
inline std::vector<PicClass> enumerate_exceptional_vectors(long long box = 7) {
    return detail::enumerate_classes(-1, -1, box);
}

} // namespace sonseq
