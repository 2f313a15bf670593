#include <catch2/catch_amalgamated.hpp>

#include <sonseq/a8.hpp>
#include <sonseq/io.hpp>
#include <sonseq/search.hpp>

using namespace sonseq;

namespace {

SonSequence pair_seed() {
    return {ch_line_bundle(PicClass{}), ch_line_bundle(-2 * PicClass::e(1))};
}

} // namespace

TEST_CASE("pool construction: normalized, exceptional, deduplicated") {
    PoolConfig cfg;
    const auto pool = build_pool(cfg);
    // 3^9 line bundles plus the 240 curve-sheaf classes (negatives normalize
    // back onto them)
    CHECK(pool.size() == 19683 + 240);
    CHECK(std::is_sorted(pool.begin(), pool.end()));
    for (const auto& v : pool) {
        CHECK(euler_pairing(v, v) == 1);
        CHECK(sign_normalized(v) == v);
        CHECK(in_lattice(v));
    }
}

TEST_CASE("the generic-box pool guards against pool bias") {
    PoolConfig cfg;
    cfg.include_generic_box = true;
    cfg.generic_box = 1;
    const auto pool = build_pool(cfg);
    const auto base = build_pool(PoolConfig{});
    CHECK(pool.size() > base.size());
    for (const auto& v : base) CHECK(std::binary_search(pool.begin(), pool.end(), v));
    for (const auto& v : pool) {
        CHECK(in_lattice(v));
        CHECK(euler_pairing(v, v) == 1);
        CHECK(sign_normalized(v) == v);
    }

    SearchConfig scfg;
    scfg.rng_seed = 2;
    scfg.trials = 300;
    scfg.pool = cfg;
    const auto rep = random_extension_search(pair_seed(), scfg);
    CHECK(rep.max_length == 9);
    for (const auto& e : rep.maximal)
        if (e.length == 9) CHECK(e.shape == "LB*2+CURVE*7");
}

TEST_CASE("pool can be emptied, which only warns") {
    PoolConfig cfg;
    cfg.include_line_bundles = false;
    cfg.include_curve_sheaves = false;
    CHECK(build_pool(cfg).empty());

    SearchConfig scfg;
    scfg.rng_seed = 5;
    scfg.trials = 3;
    scfg.pool = cfg;
    const auto rep = random_extension_search(pair_seed(), scfg);
    CHECK(rep.empty_pool_warning);
    CHECK(rep.max_length == 2);
}

TEST_CASE("shape classification") {
    const auto shape1 = classify_shape(pair_seed());
    CHECK(shape1.shape == "LB*2");
    CHECK(shape1.tail_orthogonal);

    SonSequence curves = pair_seed();
    for (std::size_t i = 2; i <= 8; ++i) curves.push_back(ch_curve_sheaf(PicClass::e(i)));
    const auto shape2 = classify_shape(curves);
    CHECK(shape2.shape == "LB*2+CURVE*7");
    CHECK(shape2.tail_orthogonal);

    const auto shape3 = classify_shape(m_sequence());
    CHECK(shape3.shape == "LB*9");

    const auto shape4 = classify_shape({ch_line_bundle(PicClass{})});
    CHECK(shape4.shape == "LB");

    // a curve pair that is not completely orthogonal
    SonSequence crossing{ch_curve_sheaf(PicClass::e(1)),
                         ch_curve_sheaf(PicClass::h() - PicClass::e(1) - PicClass::e(2))};
    const auto shape5 = classify_shape(crossing);
    CHECK(shape5.shape == "CURVE*2");
    CHECK_FALSE(shape5.tail_orthogonal);
}

TEST_CASE("exactly 56 pool classes extend the seed pair") {
    const auto pool = build_pool(PoolConfig{});
    const auto seed = pair_seed();
    std::size_t count = 0;
    for (const auto& v : pool) {
        bool ok = true;
        for (const auto& s : seed) ok = ok && euler_pairing(v, s) == 0;
        if (!ok) continue;
        ++count;
        // every survivor is a curve sheaf orthogonal to e_1
        CHECK(v.x == 0);
        CHECK(intersect(v.y, PicClass::e(1)) == 0);
    }
    CHECK(count == 56);
}

TEST_CASE("search from the pair reaches maximal length nine") {
    SearchConfig cfg;
    cfg.rng_seed = 1;
    cfg.trials = 500;
    const auto rep = random_extension_search(pair_seed(), cfg);

    CHECK(rep.pool_size == 19923);
    CHECK(rep.max_length == 9);
    for (const auto& e : rep.maximal) {
        CHECK(validate(e.sequence).ok);
        CHECK(e.length <= 9);
        if (e.length == 9) {
            CHECK(e.shape == "LB*2+CURVE*7");
            CHECK(e.tail_orthogonal);
            REQUIRE(e.certificate.has_value());
            CHECK(e.certificate->certificate.kind == CertificateKind::non_representable);
        }
    }
    CHECK(rep.shapes.contains("LB*2+CURVE*7"));
}

TEST_CASE("search from the nine-term sequence never extends it") {
    SearchConfig cfg;
    cfg.rng_seed = 9;
    cfg.trials = 200;
    const auto rep = random_extension_search(m_sequence(), cfg);
    CHECK(rep.max_length == 9);
    REQUIRE(rep.maximal.size() == 1);
    CHECK(rep.maximal[0].sequence == m_sequence());
    CHECK(rep.maximal[0].hits == 200);
}

TEST_CASE("search from the empty sequence builds chains of length at least three") {
    SearchConfig cfg;
    cfg.rng_seed = 3;
    cfg.trials = 40;
    const auto rep = random_extension_search({}, cfg);
    CHECK(rep.max_length >= 3);
    for (const auto& e : rep.maximal) CHECK(validate(e.sequence).ok);

    // a Beilinson-style chain witnesses length three directly
    const SonSequence chain{ch_line_bundle(PicClass{}), ch_line_bundle(PicClass::h()),
                            ch_line_bundle(2 * PicClass::h())};
    CHECK(validate(chain).ok);
}

TEST_CASE("identical seeds give identical reports, across thread counts") {
    SearchConfig cfg;
    cfg.rng_seed = 77;
    cfg.trials = 120;

    const auto a = random_extension_search(pair_seed(), cfg);
    const auto b = random_extension_search(pair_seed(), cfg);
    CHECK(to_json(a) == to_json(b));

    cfg.threads = 3;
    const auto c = random_extension_search(pair_seed(), cfg);
    CHECK(to_json(a) == to_json(c));

    cfg.threads = 1;
    cfg.rng_seed = 78;
    const auto d = random_extension_search(pair_seed(), cfg);
    CHECK(to_json(a) != to_json(d));
}

TEST_CASE("invalid seed sequences are rejected") {
    SearchConfig cfg;
    cfg.rng_seed = 1;
    cfg.trials = 1;
    const SonSequence bad{ch_line_bundle(PicClass{}), ch_line_bundle(2 * PicClass::e(1))};
    CHECK_THROWS_AS(random_extension_search(bad, cfg), std::invalid_argument);
}
