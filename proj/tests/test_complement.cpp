#include <catch2/catch_amalgamated.hpp>

#include <sonseq/a8.hpp>
#include <sonseq/complement.hpp>
#include <sonseq/rng.hpp>

using namespace sonseq;

namespace {

std::vector<std::vector<Int>> coordinate_vectors(const std::vector<K0Class>& classes) {
    std::vector<std::vector<Int>> out;
    for (const auto& v : classes) {
        const auto a = coords(v);
        out.emplace_back(a.begin(), a.end());
    }
    return out;
}

} // namespace

TEST_CASE("complement of the nine-term sequence is spanned by m10 and m11") {
    const SonSequence seq = m_sequence();
    const ComplementBasis comp = right_orthogonal_complement(seq);
    REQUIRE(comp.rank() == 2);

    for (const auto& w : comp.generators) {
        CHECK(in_lattice(w));
        for (const auto& v : seq) CHECK(euler_pairing(w, v) == 0);
    }

    const auto kernel_vecs = coordinate_vectors(comp.generators);
    const auto canon_vecs = coordinate_vectors({m10(), m11()});
    for (const auto& v : canon_vecs) CHECK(in_span(kernel_vecs, v));
    for (const auto& v : kernel_vecs) CHECK(in_span(canon_vecs, v));
}

TEST_CASE("complement of the empty sequence is the whole rank-11 lattice") {
    const ComplementBasis comp = right_orthogonal_complement({});
    CHECK(comp.rank() == 11);
}

TEST_CASE("complement rejects linearly dependent sequences") {
    const K0Class o = ch_line_bundle(PicClass{});
    CHECK_THROWS_AS(right_orthogonal_complement({o, o}), std::invalid_argument);
}

TEST_CASE("complement generators are saturated in a coordinate box") {
    // no lattice vector in the box pairs to zero against the sequence unless
    // it is an integer combination of the returned basis
    const SonSequence seq = m_sequence();
    const ComplementBasis comp = right_orthogonal_complement(seq);
    const auto basis_vecs = coordinate_vectors(comp.generators);

    // a small box of s*m10 + t*m11 combinations and nearby perturbations
    Rng rng(57);
    for (int trial = 0; trial < 300; ++trial) {
        K0Class w = rng.in_box(3) * m10() + rng.in_box(3) * m11();
        bool orthogonal = true;
        for (const auto& v : seq) orthogonal = orthogonal && euler_pairing(w, v) == 0;
        CHECK(orthogonal);
        const auto a = coords(w);
        CHECK(in_span(basis_vecs, std::vector<Int>(a.begin(), a.end())));

        // perturb one coordinate by 2 (keeps parity): must leave the complement
        K0Class p = w;
        p.y.c[rng.below(9)] += 2;
        bool still = true;
        for (const auto& v : seq) still = still && euler_pairing(p, v) == 0;
        if (!still) {
            const auto b = coords(p);
            CHECK_FALSE(in_span(basis_vecs, std::vector<Int>(b.begin(), b.end())));
        }
    }
}

TEST_CASE("induced form on (m10, m11) and its GL2(Z) transforms") {
    const ComplementBasis canon{{m10(), m11()}};
    const BinaryForm form = induced_form(canon);
    CHECK(form == BinaryForm{-1, -4, 4});
    CHECK(form.a == euler_pairing(m10(), m10()));

    // basis change s -> s + t: q'(s,t) = q(s+t, t) pointwise on a grid
    const ComplementBasis moved{{m10(), m10() + m11()}};
    const BinaryForm form2 = induced_form(moved);
    for (long long s = -2; s <= 2; ++s)
        for (long long t = -2; t <= 2; ++t) CHECK(form2.eval(s, t) == form.eval(s + t, t));
}

TEST_CASE("induced form requires rank 2") {
    CHECK_THROWS_AS(induced_form(ComplementBasis{{m10()}}), std::invalid_argument);
}

TEST_CASE("represents_one outcomes") {
    const auto cert = represents_one({-1, -4, 4}, {4}, 50);
    REQUIRE(cert.kind == CertificateKind::non_representable);
    CHECK(cert.modulus == 4);
    // residue table re-check: 1 is never attained
    for (const auto& r : cert.residues) CHECK(r != 1);

    const auto wit1 = represents_one({1, 0, 0}, {4}, 50);
    REQUIRE(wit1.kind == CertificateKind::witness);
    CHECK(wit1.witness == std::pair<Int, Int>{1, 0});
    CHECK(BinaryForm{1, 0, 0}.eval(wit1.witness.first, wit1.witness.second) == 1);

    const auto wit2 = represents_one({0, 1, 0}, {4}, 50);
    REQUIRE(wit2.kind == CertificateKind::witness);
    CHECK(BinaryForm{0, 1, 0}.eval(wit2.witness.first, wit2.witness.second) == 1);

    // x^2 - 3y^2 represents 1 but passes the modulus 4 screen
    const auto inc = represents_one({1, 0, -3}, {}, 0);
    CHECK(inc.kind == CertificateKind::inconclusive);
}

TEST_CASE("a non-representable certificate implies no bounded witness") {
    const BinaryForm form{-1, -4, 4};
    const auto cert = represents_one(form, default_moduli(), 50);
    REQUIRE(cert.kind == CertificateKind::non_representable);
    for (long long s = -50; s <= 50; ++s)
        for (long long t = -50; t <= 50; ++t) REQUIRE(form.eval(s, t) != 1);
}

TEST_CASE("unextendability certificate for the nine-term sequence") {
    const auto rep = unextendability_certificate(m_sequence());
    CHECK(rep.complement.rank() == 2);
    CHECK(rep.certificate.kind == CertificateKind::non_representable);
    CHECK(rep.certificate.modulus == 4);
}

TEST_CASE("the certificate is invariant under a common twist") {
    Rng rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        PicClass d;
        for (auto& c : d.c) c = rng.in_box(2);
        const auto rep = unextendability_certificate(twist_all(m_sequence(), d));
        CHECK(rep.certificate.kind == CertificateKind::non_representable);
        CHECK(rep.certificate.modulus == 4);
    }
}

TEST_CASE("corank other than 2 is rejected") {
    SonSequence eight(m_sequence());
    eight.pop_back();
    CHECK_THROWS_AS(unextendability_certificate(eight), std::invalid_argument);
    CHECK(right_orthogonal_complement(eight).rank() == 3);
}
