#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <sonseq/integers.hpp>

namespace sonseq {

/*
 * Dense row-major matrix over an exact scalar type, plus the exact integer
 * linear algebra used throughout: fraction-free (Bareiss) rank, rank over a
 * prime field, integer kernel bases, and membership tests for Z-spans.
 */
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

// Fraction-free Gaussian elimination. Intermediate entries stay integral
// (each is a minor of the input), so the divisions below are exact.
template <typename T>
std::size_t rank_bareiss(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    std::size_t pr = 0;
    T prev = 1;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && m(piv, pc) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(pr, piv);
        const T p = m(pr, pc);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = pc + 1; j < cols; ++j) {
                m(i, j) = (m(i, j) * p - m(i, pc) * m(pr, j)) / prev;
            }
            m(i, pc) = 0;
        }
        prev = p;
        ++pr;
        ++rank;
    }
    return rank;
}

inline std::uint64_t mod_reduce(const Int& v, std::uint64_t p) {
    Int r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return r.convert_to<std::uint64_t>();
}

// Rank over F_p; p must be an odd prime < 2^31 so products fit in 64 bits.
inline std::size_t rank_mod_p(const Matrix<Int>& m, std::uint64_t p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_reduce(m(i, j), p);

    auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };

    std::size_t rank = 0, pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        const std::uint64_t inv = pow_mod(a[pr][pc], p - 2);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (a[i][pc] == 0) continue;
            const std::uint64_t f = a[i][pc] * inv % p;
            for (std::size_t j = pc; j < cols; ++j) {
                a[i][j] = (a[i][j] + (p - f) * a[pr][j]) % p;
            }
        }
        ++pr;
        ++rank;
    }
    return rank;
}

// Z-basis of { x in Z^n : A x = 0 }, computed by unimodular column reduction
// tracked on an identity matrix. The kernel of a map between free Z-modules
// is saturated, and the zero columns of the reduced matrix span exactly that
// kernel, so the returned basis is a saturated Z-basis.
inline std::vector<std::vector<Int>> integer_kernel(const Matrix<Int>& a) {
    const std::size_t m = a.rows(), n = a.cols();
    Matrix<Int> w = a;
    Matrix<Int> u = Matrix<Int>::identity(n);

    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        // column dst -= q * column src, in both w and u
        for (std::size_t i = 0; i < m; ++i) w(i, dst) -= q * w(i, src);
        for (std::size_t i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
    };
    auto col_negate = [&](std::size_t c) {
        for (std::size_t i = 0; i < m; ++i) w(i, c) = -w(i, c);
        for (std::size_t i = 0; i < n; ++i) u(i, c) = -u(i, c);
    };

    std::vector<bool> pivot(n, false);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<std::size_t> act;
        for (std::size_t c = 0; c < n; ++c)
            if (!pivot[c] && w(r, c) != 0) act.push_back(c);
        while (act.size() > 1) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < act.size(); ++i)
                if (abs(w(r, act[i])) < abs(w(r, act[best]))) best = i;
            const std::size_t lead = act[best];
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i < act.size(); ++i) {
                if (i == best) continue;
                const Int q = w(r, act[i]) / w(r, lead);
                if (q != 0) col_axpy(act[i], lead, q);
                if (w(r, act[i]) != 0) next.push_back(act[i]);
            }
            next.push_back(lead);
            act = std::move(next);
        }
        if (act.size() == 1) {
            if (w(r, act[0]) < 0) col_negate(act[0]);
            pivot[act[0]] = true;
        }
    }

    std::vector<std::vector<Int>> kernel;
    for (std::size_t c = 0; c < n; ++c)
        if (!pivot[c]) kernel.push_back(u.column(c));
    return kernel;
}

// Integer coefficients c with sum_i c_i * basis_i = v, if v lies in the
// Z-span of the basis vectors. Reduced to a kernel computation on [B | v].
inline std::optional<std::vector<Int>> solve_in_span(const std::vector<std::vector<Int>>& basis,
                                                     const std::vector<Int>& v) {
    const std::size_t k = basis.size();
    const std::size_t dim = v.size();
    for (const auto& b : basis)
        if (b.size() != dim) throw std::invalid_argument("solve_in_span: dimension mismatch");

    Matrix<Int> m(dim, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = basis[j][i];
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = v[i];

    // Combine kernel vectors so the last coordinate carries the gcd of all
    // attainable last coordinates; v is in the span iff that gcd is 1.
    std::optional<std::vector<Int>> acc;
    for (const auto& kv : integer_kernel(m)) {
        if (kv[k] == 0) continue;
        if (!acc) {
            acc = kv;
            continue;
        }
        const ExtGcd e = ext_gcd((*acc)[k], kv[k]);
        std::vector<Int> mix(k + 1);
        for (std::size_t i = 0; i <= k; ++i) mix[i] = e.s * (*acc)[i] + e.t * kv[i];
        acc = std::move(mix);
    }
    if (!acc || abs((*acc)[k]) != 1) return std::nullopt;
    const Int sign = (*acc)[k];  // +1 or -1
    std::vector<Int> coeffs(k);
    for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*acc)[j] * sign;
    return coeffs;
}

inline bool in_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    return solve_in_span(basis, v).has_value();
}

} // namespace sonseq
