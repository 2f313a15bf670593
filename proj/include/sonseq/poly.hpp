#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sonseq/matrix.hpp>

namespace sonseq {

/*
 * Exact graded linear algebra for homogeneous ideals in Q[x_1..x_4]:
 * dimensions of degree pieces, Z/5-character pieces, and the section-count
 * checks built on them. Ranks come from fraction-free elimination over the
 * integers, cross-checked against elimination mod a large prime.
 */

using Exponents = std::array<int, 4>;

struct HomogPoly {
    int degree = 0;
    std::map<Exponents, Int> terms;  // no zero coefficients stored

    bool operator==(const HomogPoly&) const = default;
};

struct GradedIdeal {
    std::vector<HomogPoly> generators;
};

// Z/5 weight per variable; the action scales x_i by xi^{w_i}.
struct CharacterWeights {
    std::array<int, 4> w{1, 2, 3, 4};

    static CharacterWeights from(std::array<int, 4> raw) {
        CharacterWeights cw;
        for (std::size_t i = 0; i < 4; ++i) cw.w[i] = ((raw[i] % 5) + 5) % 5;
        return cw;
    }
};

inline int monomial_weight(const Exponents& e, const CharacterWeights& cw) {
    long long s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += static_cast<long long>(cw.w[i]) * e[i];
    return static_cast<int>(((s % 5) + 5) % 5);
}

// Builds a polynomial from (coefficient, exponents) pairs; all terms must
// share one total degree and the result must be nonzero.
inline HomogPoly make_poly(const std::vector<std::pair<Int, Exponents>>& raw) {
    HomogPoly p;
    bool first = true;
    for (const auto& [coeff, e] : raw) {
        int deg = 0;
        for (const int a : e) {
            if (a < 0) throw std::invalid_argument("make_poly: negative exponent");
            deg += a;
        }
        if (first) {
            p.degree = deg;
            first = false;
        } else if (deg != p.degree) {
            throw std::invalid_argument("make_poly: polynomial is not homogeneous (degrees " +
                                        std::to_string(p.degree) + " and " + std::to_string(deg) + ")");
        }
        p.terms[e] += coeff;
    }
    for (auto it = p.terms.begin(); it != p.terms.end();) {
        if (it->second == 0)
            it = p.terms.erase(it);
        else
            ++it;
    }
    if (p.terms.empty()) throw std::invalid_argument("make_poly: zero polynomial");
    return p;
}

inline HomogPoly fermat_quintic() {
    std::vector<std::pair<Int, Exponents>> t;
    t.push_back({1, {5, 0, 0, 0}});
    t.push_back({1, {0, 5, 0, 0}});
    t.push_back({1, {0, 0, 5, 0}});
    t.push_back({1, {0, 0, 0, 5}});
    return make_poly(t);
}

// Degree-d monomials in graded-lex order with x_1 > x_2 > x_3 > x_4.
inline std::vector<Exponents> monomials_of_degree(int d) {
    std::vector<Exponents> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    return out;
}

inline long long monomial_count(int d) {
    return static_cast<long long>(d + 3) * (d + 2) * (d + 1) / 6;
}

namespace detail {

// Rows: monomial multiples m*g of each generator landing in degree d.
// Columns: degree-d monomials in the canonical order.
inline Matrix<Int> degree_piece_matrix(const GradedIdeal& ideal, int d) {
    const auto cols = monomials_of_degree(d);
    std::map<Exponents, std::size_t> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = j;

    std::vector<std::vector<Int>> rows;
    for (const auto& g : ideal.generators) {
        if (g.degree > d) continue;
        for (const auto& m : monomials_of_degree(d - g.degree)) {
            std::vector<Int> row(cols.size());
            for (const auto& [e, coeff] : g.terms) {
                Exponents prod;
                for (std::size_t i = 0; i < 4; ++i) prod[i] = e[i] + m[i];
                row[col_index.at(prod)] += coeff;
            }
            rows.push_back(std::move(row));
        }
    }

    Matrix<Int> mat(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) mat(i, j) = rows[i][j];
    return mat;
}

inline constexpr std::array<std::uint64_t, 4> cross_check_primes = {2147483647ULL, 2147483629ULL,
                                                                    2147483587ULL, 2147483563ULL};

// Exact rank with a modular cross-check. A prime can undercount the rank
// only by dividing a pivot minor, so a match certifies the exact value;
// persistent disagreement across the whole ladder is a logic error, never
// silently accepted.
inline long long checked_rank(const Matrix<Int>& mat) {
    if (mat.rows() == 0 || mat.cols() == 0) return 0;
    const std::size_t exact = rank_bareiss(mat);
    for (const std::uint64_t p : cross_check_primes) {
        if (rank_mod_p(mat, p) == exact) return static_cast<long long>(exact);
    }
    throw std::logic_error("checked_rank: modular cross-check disagrees with exact rank");
}

} // namespace detail

// Dimension over Q of the degree-d piece of the ideal.
inline long long degree_piece_dim(const GradedIdeal& ideal, int d) {
    if (d < 0) throw std::invalid_argument("degree_piece_dim: negative degree");
    return detail::checked_rank(detail::degree_piece_matrix(ideal, d));
}

// Dimension of the weight-c part: rows are projected onto the weight-c
// monomial columns before taking the rank. For weight-homogeneous
// generators every row is weight-pure and the pieces sum to the full one.
inline long long character_piece_dim(const GradedIdeal& ideal, int d, int c,
                                     const CharacterWeights& cw = {}) {
    if (d < 0) throw std::invalid_argument("character_piece_dim: negative degree");
    if (c < 0 || c > 4) throw std::invalid_argument("character_piece_dim: character must be in 0..4");

    const auto cols = monomials_of_degree(d);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (monomial_weight(cols[j], cw) == c) keep.push_back(j);

    const Matrix<Int> full = detail::degree_piece_matrix(ideal, d);
    Matrix<Int> proj(full.rows(), keep.size());
    for (std::size_t i = 0; i < full.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) proj(i, j) = full(i, keep[j]);
    return detail::checked_rank(proj);
}

struct FermatCheckResult {
    bool only_fermat_multiples = false;
    long long subscheme_dim = 0;
    long long fermat_dim = 0;
};

struct FermatMembershipError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// True iff the degree-d piece of the subscheme ideal is no bigger than the
// multiples of the Fermat quintic. Requires the quintic itself to lie in the
// degree-5 piece of the subscheme ideal, checked by a rank computation.
inline FermatCheckResult check_only_fermat_multiples(const GradedIdeal& subscheme, int d) {
    const HomogPoly fermat = fermat_quintic();

    const Matrix<Int> deg5 = detail::degree_piece_matrix(subscheme, 5);
    Matrix<Int> with_fermat(deg5.rows() + 1, deg5.cols());
    for (std::size_t i = 0; i < deg5.rows(); ++i)
        for (std::size_t j = 0; j < deg5.cols(); ++j) with_fermat(i, j) = deg5(i, j);
    const auto cols5 = monomials_of_degree(5);
    std::map<Exponents, std::size_t> idx5;
    for (std::size_t j = 0; j < cols5.size(); ++j) idx5[cols5[j]] = j;
    for (const auto& [e, coeff] : fermat.terms) with_fermat(deg5.rows(), idx5.at(e)) = coeff;
    if (detail::checked_rank(with_fermat) != detail::checked_rank(deg5))
        throw FermatMembershipError(
            "check_only_fermat_multiples: the Fermat quintic is not in the degree-5 piece of the ideal");

    GradedIdeal fermat_only;
    fermat_only.generators.push_back(fermat);

    FermatCheckResult res;
    res.subscheme_dim = degree_piece_dim(subscheme, d);
    res.fermat_dim = degree_piece_dim(fermat_only, d);
    res.only_fermat_multiples = res.subscheme_dim == res.fermat_dim;
    return res;
}

// True iff the weight-c piece of the ideal in degree d has dimension < bound.
inline bool count_sections_less_than(const GradedIdeal& ideal, int d, long long bound, int c,
                                     const CharacterWeights& cw = {}) {
    return character_piece_dim(ideal, d, c, cw) < bound;
}

// ---------------------------------------------------------------------------
// Ideal files: one polynomial per line, terms like "3 x1^2 x3^4" joined by
// + and -, '#' comments. Parse errors carry 1-based line numbers.

struct IdealParseError : std::runtime_error {
    std::size_t line;
    explicit IdealParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {

inline HomogPoly parse_poly_line(const std::string& text, std::size_t line_no) {
    std::vector<std::pair<Int, Exponents>> terms;

    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw IdealParseError(line_no, std::string("expected '+' or '-' before '") + text[i] + "'");
        }
        first = false;

        bool have_coeff = false;
        Int coeff = 1;
        Exponents exps{0, 0, 0, 0};
        bool have_factor = false;

        while (i < text.size()) {
            skip_ws();
            if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
            if (text[i] == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (have_coeff)
                    throw IdealParseError(line_no, "unexpected second integer in term");
                std::string digits;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    digits += text[i++];
                coeff = Int(digits);
                have_coeff = true;
                have_factor = true;
            } else if (text[i] == 'x' || text[i] == 'X') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw IdealParseError(line_no, "variable must be x1..x4");
                const int var = text[i++] - '0';
                if (var < 1 || var > 4)
                    throw IdealParseError(line_no, "variable index " + std::to_string(var) +
                                                       " out of range 1..4");
                int exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw IdealParseError(line_no, "missing exponent after '^'");
                    std::string digits;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        digits += text[i++];
                    exp = std::stoi(digits);
                }
                exps[static_cast<std::size_t>(var - 1)] += exp;
                have_factor = true;
            } else {
                throw IdealParseError(line_no, std::string("unexpected character '") + text[i] + "'");
            }
        }
        if (!have_factor) throw IdealParseError(line_no, "empty term");
        terms.push_back({sign * coeff, exps});
        skip_ws();
    }

    if (terms.empty()) throw IdealParseError(line_no, "empty polynomial");
    try {
        return make_poly(terms);
    } catch (const std::invalid_argument& e) {
        throw IdealParseError(line_no, e.what());
    }
}

} // namespace detail

inline GradedIdeal parse_ideal_text(std::istream& in) {
    GradedIdeal ideal;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (const char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        ideal.generators.push_back(detail::parse_poly_line(line, line_no));
    }
    return ideal;
}

inline GradedIdeal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    return parse_ideal_text(in);
}

// Canonical text form: explicit coefficient and all four exponents per term.
inline std::string to_text(const HomogPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, coeff] : p.terms) {
        Int c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        out << c << " x1^" << e[0] << " x2^" << e[1] << " x3^" << e[2] << " x4^" << e[3];
    }
    return out.str();
}

} // namespace sonseq
