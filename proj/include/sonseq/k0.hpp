#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <sonseq/matrix.hpp>
#include <sonseq/pic.hpp>

namespace sonseq {

/*
 * Numerical K-theory of the degree-1 del Pezzo surface: the rank-11 lattice
 * of Chern characters x + y + (z/2) p with x, z integers and y in Pic. The
 * degree-2 component is stored doubled (z), so every operation is integer
 * arithmetic; genuinely half-integral Euler values signal non-lattice input.
 */
struct K0Class {
    Int x;       // rank
    PicClass y;  // first Chern class
    Int z;       // twice the degree-2 Chern character component

    K0Class() : x(0), z(0) {}
    K0Class(Int x_, PicClass y_, Int z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool is_zero() const { return x == 0 && z == 0 && y.is_zero(); }

    friend K0Class operator+(const K0Class& a, const K0Class& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend K0Class operator-(const K0Class& a, const K0Class& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend K0Class operator-(const K0Class& a) { return {-a.x, -a.y, -a.z}; }
    friend K0Class operator*(const Int& s, const K0Class& a) {
        return {s * a.x, s * a.y, s * a.z};
    }

    bool operator==(const K0Class&) const = default;
    friend bool operator<(const K0Class& a, const K0Class& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y.c != b.y.c) return a.y.c < b.y.c;
        return a.z < b.z;
    }
};

struct NonLatticeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Coordinates in the order (x, y_h, y_1, ..., y_8, z).
inline std::array<Int, 11> coords(const K0Class& v) {
    std::array<Int, 11> out;
    out[0] = v.x;
    for (std::size_t i = 0; i < 9; ++i) out[1 + i] = v.y.c[i];
    out[10] = v.z;
    return out;
}

// Lattice membership: z must match the coordinate sum of y mod 2.
inline bool in_lattice(const K0Class& v) {
    Int s = v.z;
    for (const auto& yi : v.y.c) s += yi;
    return is_even(s);
}

// ch(O(D)) = (1, D, D.D)
inline K0Class ch_line_bundle(const PicClass& d) { return {1, d, intersect(d, d)}; }

// Class of the structure sheaf of a divisor C, from 0 -> O(-C) -> O -> O_C -> 0.
inline K0Class ch_curve_sheaf(const PicClass& c) {
    return ch_line_bundle(PicClass{}) - ch_line_bundle(-c);
}

// chi(S, v) = x - (y.K)/2 + z/2 by Riemann-Roch.
inline Int euler_chi(const K0Class& v) {
    const Int twice = 2 * v.x - intersect(v.y, canonical_class()) + v.z;
    if (!is_even(twice)) throw NonLatticeError("euler_chi: non-integral value (input not in the lattice)");
    return twice / 2;
}

// The non-symmetric Euler pairing
//   chi(v1, v2) = x1 x2 - (x1 y2 - x2 y1).K / 2 + (x1 z2 + x2 z1 - 2 y1.y2) / 2.
inline Int euler_pairing(const K0Class& v1, const K0Class& v2) {
    const PicClass k = canonical_class();
    Int twice = 2 * v1.x * v2.x;
    twice -= v1.x * intersect(v2.y, k) - v2.x * intersect(v1.y, k);
    twice += v1.x * v2.z + v2.x * v1.z - 2 * intersect(v1.y, v2.y);
    if (!is_even(twice)) throw NonLatticeError("euler_pairing: non-integral value (input not in the lattice)");
    return twice / 2;
}

// Chow-ring product of Chern characters.
inline K0Class mult(const K0Class& v1, const K0Class& v2) {
    return {v1.x * v2.x, v1.x * v2.y + v2.x * v1.y,
            v1.x * v2.z + v2.x * v1.z + 2 * intersect(v1.y, v2.y)};
}

inline K0Class dual(const K0Class& v) { return {v.x, -v.y, v.z}; }

inline K0Class twist(const K0Class& v, const PicClass& d) { return mult(v, ch_line_bundle(d)); }

inline Matrix<Int> gram(std::span<const K0Class> seq) {
    const std::size_t n = seq.size();
    Matrix<Int> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = euler_pairing(seq[i], seq[j]);
    return g;
}

inline Matrix<Int> gram(const std::vector<K0Class>& seq) {
    return gram(std::span<const K0Class>(seq.data(), seq.size()));
}

inline Int det2(const Matrix<Int>& g) {
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("det2: matrix is not 2x2");
    return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
}

// Canonical representative under the global sign flip: first nonzero
// coordinate of (x, y_h, y_1, ..., y_8, z) made positive.
inline K0Class sign_normalized(const K0Class& v) {
    const auto a = coords(v);
    for (const auto& t : a) {
        if (t > 0) return v;
        if (t < 0) return -v;
    }
    return v;
}

// The pair spanning the right-orthogonal complement of the nine-term
// line-bundle sequence: -h + (3/2)p and 2 + 2K + h - 3e_1 - p.
inline K0Class m10() { return {0, -PicClass::h(), 3}; }

inline K0Class m11() {
    PicClass y = 2 * canonical_class() + PicClass::h() - 3 * PicClass::e(1);
    return {2, y, -2};
}

} // namespace sonseq
