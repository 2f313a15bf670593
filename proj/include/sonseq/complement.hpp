#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <sonseq/matrix.hpp>
#include <sonseq/sequence.hpp>

namespace sonseq {

/*
 * Right-orthogonal complements over Z, the binary quadratic form induced on
 * a rank-2 complement, and congruence certificates that the form never
 * represents 1 (so no numerically exceptional class extends the sequence).
 */

struct ComplementBasis {
    std::vector<K0Class> generators;
    std::size_t rank() const { return generators.size(); }
};

struct BinaryForm {
    Int a, b, c;  // q(s,t) = a s^2 + b s t + c t^2

    Int eval(const Int& s, const Int& t) const { return a * s * s + b * s * t + c * t * t; }
    bool operator==(const BinaryForm&) const = default;
};

enum class CertificateKind { non_representable, witness, inconclusive };

struct Certificate {
    CertificateKind kind = CertificateKind::inconclusive;
    // kind == non_representable: the modulus and the sorted set of residues
    // q attains mod it (1 is absent; re-checkable by direct enumeration).
    Int modulus = 0;
    std::vector<Int> residues;
    // kind == witness: q(s, t) = 1
    std::pair<Int, Int> witness{0, 0};
};

inline std::vector<long long> default_moduli() { return {4, 8, 16, 3, 9, 5, 25, 7}; }

// Integer covector of w -> 2 chi(w, v) in the coordinates (x, y_h, y_1..y_8, z):
//   2 chi(w, v) = 2 chi(v) x_w + (x_v K - 2 y_v) . y_w + x_v z_w.
inline std::array<Int, 11> pairing_covector(const K0Class& v) {
    std::array<Int, 11> cov;
    cov[0] = 2 * euler_chi(v);
    const PicClass k = canonical_class();
    const PicClass row = v.x * k - 2 * v.y;
    cov[1] = row.c[0];  // +h coefficient pairs with signature +1
    for (std::size_t i = 1; i < 9; ++i) cov[1 + i] = -row.c[i];
    cov[10] = v.x;
    return cov;
}

// Saturated Z-basis of { w : chi(w, v_i) = 0 for all i }. Rejects linearly
// dependent input (the pairing is unimodular, so dependence of classes and
// dependence of covectors coincide).
inline ComplementBasis right_orthogonal_complement(const SonSequence& seq) {
    const std::size_t n = seq.size();
    Matrix<Int> a(n, 11);
    for (std::size_t i = 0; i < n; ++i) {
        const auto cov = pairing_covector(seq[i]);
        for (std::size_t j = 0; j < 11; ++j) a(i, j) = cov[j];
    }
    if (rank_bareiss(a) != n)
        throw std::invalid_argument("right_orthogonal_complement: sequence classes are linearly dependent");

    ComplementBasis basis;
    for (const auto& col : integer_kernel(a)) {
        K0Class w;
        w.x = col[0];
        for (std::size_t i = 0; i < 9; ++i) w.y.c[i] = col[1 + i];
        w.z = col[10];
        basis.generators.push_back(w);
    }
    return basis;
}

// q(s w_1 + t w_2) with a = chi(w1,w1), b = chi(w1,w2) + chi(w2,w1), c = chi(w2,w2).
inline BinaryForm induced_form(const ComplementBasis& basis) {
    if (basis.rank() != 2) throw std::invalid_argument("induced_form: complement rank is not 2");
    const K0Class& w1 = basis.generators[0];
    const K0Class& w2 = basis.generators[1];
    return {euler_pairing(w1, w1), euler_pairing(w1, w2) + euler_pairing(w2, w1),
            euler_pairing(w2, w2)};
}

// Decide representability of 1: first look for a modulus where q never hits
// 1 (a proof of non-representability), then for a bounded witness. Indefinite
// forms with neither outcome stay inconclusive by design.
inline Certificate represents_one(const BinaryForm& form, const std::vector<long long>& moduli,
                                  long long search_bound) {
    for (const long long m : moduli) {
        if (m <= 1) throw std::invalid_argument("represents_one: moduli must be > 1");
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (long long s = 0; s < m; ++s) {
            for (long long t = 0; t < m; ++t) {
                Int r = form.eval(s, t) % m;
                if (r < 0) r += m;
                seen[r.convert_to<std::size_t>()] = true;
            }
        }
        if (!seen[1 % m]) {
            Certificate cert;
            cert.kind = CertificateKind::non_representable;
            cert.modulus = m;
            for (long long r = 0; r < m; ++r)
                if (seen[static_cast<std::size_t>(r)]) cert.residues.push_back(r);
            return cert;
        }
    }
    // zigzag scan 0, 1, -1, 2, -2, ... so the smallest witness is reported
    const auto zigzag = [](long long i) { return i % 2 == 0 ? -i / 2 : (i + 1) / 2; };
    for (long long i = 0; i <= 2 * search_bound; ++i) {
        for (long long j = 0; j <= 2 * search_bound; ++j) {
            const long long s = zigzag(i), t = zigzag(j);
            if (form.eval(s, t) == 1) {
                Certificate cert;
                cert.kind = CertificateKind::witness;
                cert.witness = {s, t};
                return cert;
            }
        }
    }
    return {};
}

struct UnextendabilityReport {
    ComplementBasis complement;
    BinaryForm form;
    Certificate certificate;
};

// Complement -> induced form -> congruence certificate. Defined only for
// corank-2 sequences; a non_representable outcome proves that no class of
// the lattice is numerically exceptional and right-orthogonal to seq.
inline UnextendabilityReport unextendability_certificate(
    const SonSequence& seq, const std::vector<long long>& moduli = default_moduli(),
    long long search_bound = 100) {
    UnextendabilityReport rep;
    rep.complement = right_orthogonal_complement(seq);
    if (rep.complement.rank() != 2)
        throw std::invalid_argument("unextendability_certificate: complement rank is " +
                                    std::to_string(rep.complement.rank()) + ", expected 2");
    rep.form = induced_form(rep.complement);
    rep.certificate = represents_one(rep.form, moduli, search_bound);
    return rep;
}

} // namespace sonseq
