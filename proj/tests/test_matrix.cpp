#include <catch2/catch_amalgamated.hpp>

#include <sonseq/matrix.hpp>
#include <sonseq/rng.hpp>

using namespace sonseq;

namespace {

Matrix<Int> from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows[0].size();
    Matrix<Int> a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    return a;
}

// Independent oracle: every integer vector in the box [-radius, radius]^n
// with A v = 0.
std::vector<std::vector<Int>> kernel_by_box_search(const Matrix<Int>& a, long long radius) {
    std::vector<std::vector<Int>> found;
    std::vector<long long> v(a.cols(), -radius);
    while (true) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows() && zero; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
            zero = s == 0;
        }
        if (zero) found.emplace_back(v.begin(), v.end());
        std::size_t k = 0;
        while (k < v.size() && v[k] == radius) v[k++] = -radius;
        if (k == v.size()) break;
        ++v[k];
    }
    return found;
}

} // namespace

TEST_CASE("bareiss rank on known matrices") {
    CHECK(rank_bareiss(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_bareiss(from_rows({{1, 2}, {3, 4}})) == 2);
    CHECK(rank_bareiss(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_bareiss(from_rows({{0, 1, 0}, {0, 0, 2}, {0, 3, 4}})) == 2);
    CHECK(rank_bareiss(Matrix<Int>(0, 5)) == 0);
    // 3x4 with a dependent row
    CHECK(rank_bareiss(from_rows({{2, 4, 6, 8}, {1, 2, 3, 4}, {0, 1, 1, 0}})) == 2);
}

TEST_CASE("bareiss rank agrees with modular rank on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng.below(6), n = 1 + rng.below(6);
        Matrix<Int> a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.in_box(9);
        // plant a dependent row now and then
        if (m >= 2 && trial % 3 == 0)
            for (std::size_t j = 0; j < n; ++j) a(m - 1, j) = a(0, j) * 3;
        const std::size_t exact = rank_bareiss(a);
        CHECK(exact == rank_mod_p(a, 2147483647ULL));
    }
}

TEST_CASE("integer kernel equals brute-force box search on a rank-reduced toy") {
    // four free coordinates, pairing rows acting on them
    const auto a = from_rows({{1, 2, 0, -1}, {0, 3, 1, 1}});
    const auto basis = kernel_by_box_search(a, 6);

    const auto kernel = integer_kernel(a);
    REQUIRE(kernel.size() == 2);

    // every box solution is an integer combination of the kernel basis,
    // and every kernel vector solves the system
    for (const auto& v : basis) CHECK(in_span(kernel, v));
    for (const auto& k : kernel) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * k[j];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("integer kernel is saturated") {
    // x + 2y + 4z = 0 has kernel rank 2; the primitive vector (2, -1, 0)
    // must be reachable even though (4, -2, 0) also solves the system
    const auto a = from_rows({{1, 2, 4}});
    const auto kernel = integer_kernel(a);
    REQUIRE(kernel.size() == 2);
    CHECK(in_span(kernel, {2, -1, 0}));
    CHECK(in_span(kernel, {4, 0, -1}));
    CHECK(in_span(kernel, {0, 2, -1}));
    CHECK_FALSE(in_span(kernel, {1, 0, 0}));
}

TEST_CASE("kernel of an empty row set is the full lattice") {
    const auto kernel = integer_kernel(Matrix<Int>(0, 4));
    REQUIRE(kernel.size() == 4);
    CHECK(in_span(kernel, {7, -3, 2, 11}));
}

TEST_CASE("solve_in_span recovers coefficients") {
    const std::vector<std::vector<Int>> basis = {{1, 0, 2}, {0, 3, 1}};
    const auto coeffs = solve_in_span(basis, {2, 9, 7});
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == 2);
    CHECK((*coeffs)[1] == 3);
    CHECK_FALSE(solve_in_span(basis, {0, 1, 0}).has_value());
    CHECK(solve_in_span(basis, {0, 0, 0}).has_value());
}

TEST_CASE("ext_gcd identity") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Int a = rng.in_box(1000), b = rng.in_box(1000);
        const auto e = ext_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g >= 0);
        if (a != 0 || b != 0) {
            CHECK(e.g > 0);
            CHECK(a % e.g == 0);
            CHECK(b % e.g == 0);
        }
    }
}
