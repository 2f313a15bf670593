#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <sonseq/a8.hpp>
#include <sonseq/complement.hpp>
#include <sonseq/rng.hpp>

using namespace sonseq;

TEST_CASE("the canonical A8 chain") {
    const A8System sys = canonical_a8();
    CHECK(is_valid_a8(sys));

    const PicClass first = canonical_class() + PicClass::e(1);
    CHECK(sys.roots[0] == first);
    CHECK(intersect(first, first) == -2);
    CHECK(intersect(first, canonical_class()) == 0);
    CHECK(intersect(first, PicClass::e(2) - PicClass::e(1)) == 1);
    CHECK(intersect(first, PicClass::e(3) - PicClass::e(2)) == 0);
    CHECK(intersect(PicClass::e(2) - PicClass::e(1), PicClass::e(4) - PicClass::e(3)) == 0);
}

TEST_CASE("partial sums telescope and give an orthogonal octad of roots") {
    const auto s = partial_sums(canonical_a8());
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(s[i] == canonical_class() + PicClass::e(i + 1));

    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(is_root(s[i]));
        for (std::size_t j = i + 1; j < 8; ++j) {
            CHECK(is_root(s[j] - s[i]));
            CHECK(euler_pairing(ch_line_bundle(s[i]), ch_line_bundle(s[j])) == 0);
            CHECK(euler_pairing(ch_line_bundle(s[j]), ch_line_bundle(s[i])) == 0);
        }
    }
}

TEST_CASE("partial sums of random A8 systems stay orthogonal root octads") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto s = partial_sums(random_a8_system(seed));
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(is_root(s[i]));
            for (std::size_t j = i + 1; j < 8; ++j) CHECK(is_root(s[j] - s[i]));
        }
    }
}

TEST_CASE("the nine-term sequence") {
    const SonSequence m = m_sequence();
    REQUIRE(m.size() == 9);
    CHECK(validate(m).ok);
    // O(2e_1) is the difference dual(m_9) * m_1
    CHECK(mult(dual(m.back()), m.front()) == ch_line_bundle(2 * PicClass::e(1)));
}

TEST_CASE("transfer through the canonical chain telescopes to the nine-term sequence") {
    CHECK(transfer_m_sequence(canonical_a8()) == m_sequence());
}

TEST_CASE("transferred sequences validate and certify for random chains") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const A8System sys = random_a8_system(seed);
        REQUIRE(is_valid_a8(sys));
        const SonSequence seq = transfer_m_sequence(sys);
        CHECK(validate(seq).ok);
        const auto rep = unextendability_certificate(seq);
        CHECK(rep.certificate.kind == CertificateKind::non_representable);
    }
}

TEST_CASE("weyl reflections") {
    const PicClass r = PicClass::e(1) - PicClass::e(2);
    CHECK(weyl_reflect(r, r) == -r);
    CHECK(weyl_reflect(r, PicClass::e(1)) == PicClass::e(2));
    CHECK(weyl_reflect(r, canonical_class()) == canonical_class());
    CHECK_THROWS_AS(weyl_reflect(PicClass::h(), PicClass::e(1)), std::invalid_argument);
}

TEST_CASE("weyl reflections preserve the form and the root/exceptional sets") {
    const auto roots = enumerate_roots();
    const auto excs = enumerate_exceptional_vectors();
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const PicClass r = roots[rng.below(roots.size())];

        PicClass a, b;
        for (auto& c : a.c) c = rng.in_box(4);
        for (auto& c : b.c) c = rng.in_box(4);
        CHECK(intersect(weyl_reflect(r, a), weyl_reflect(r, b)) == intersect(a, b));
        CHECK(weyl_reflect(r, weyl_reflect(r, a)) == a);

        const PicClass root_image = weyl_reflect(r, roots[rng.below(roots.size())]);
        CHECK(std::binary_search(roots.begin(), roots.end(), root_image));
        const PicClass exc_image = weyl_reflect(r, excs[rng.below(excs.size())]);
        CHECK(std::binary_search(excs.begin(), excs.end(), exc_image));
    }
}

TEST_CASE("find_weyl_word: identical chains need no reflections") {
    const auto res = find_weyl_word(canonical_a8(), canonical_a8());
    REQUIRE(res.found);
    CHECK(res.word.empty());
}

TEST_CASE("find_weyl_word recovers a single reflection") {
    const A8System src = canonical_a8();
    // a root moving A_1 (not orthogonal to it)
    const PicClass r = PicClass::e(1) - PicClass::e(2);
    REQUIRE(intersect(r, src.roots[0]) != 0);
    const A8System tgt = weyl_reflect(r, src);
    const auto res = find_weyl_word(src, tgt);
    REQUIRE(res.found);
    CHECK(res.word.size() == 1);
    CHECK(apply_word(res.word, src) == tgt);
}

TEST_CASE("find_weyl_word round-trips random reflection words") {
    Rng rng(73);
    const auto& roots = all_roots();
    for (int trial = 0; trial < 10; ++trial) {
        const A8System src = canonical_a8();
        A8System tgt = src;
        for (int k = 0; k < 5; ++k) tgt = weyl_reflect(roots[rng.below(roots.size())], tgt);
        const auto res = find_weyl_word(src, tgt);
        REQUIRE(res.found);
        CHECK(apply_word(res.word, src) == tgt);
    }
}

TEST_CASE("find_weyl_word connects random seeded chains") {
    const A8System src = random_a8_system(2024);
    const A8System tgt = random_a8_system(4048);
    const auto res = find_weyl_word(src, tgt);
    REQUIRE(res.found);
    CHECK(apply_word(res.word, src) == tgt);
}

TEST_CASE("random A8 systems are valid, deterministic and varied") {
    std::set<A8System> distinct;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const A8System sys = random_a8_system(seed);
        CHECK(is_valid_a8(sys));
        CHECK(sys == random_a8_system(seed));
        distinct.insert(sys);
    }
    CHECK(distinct.size() >= 2);
}
