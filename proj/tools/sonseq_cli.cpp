// Command-line surface: reproducible lattice verification runs with
// machine-readable reports.
//
//   enumerate   roots / exceptional vectors of the Picard lattice
//   verify-m    unextendability certificate of the nine-term sequence
//   search      randomized extension search from (O, O(-2e_1))
//   remark      the dualize/mutate/twist/reorder pipeline
//   weyl        reflection word between two A8 systems
//   ideal       degree and character dimensions of a graded ideal
//
// Exit codes: 0 verified/success, 1 verification failure, 2 inconclusive,
// 3 input or configuration error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <sonseq/sonseq.hpp>

namespace {

using sonseq::Int;
using sonseq::Json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_input_error = 3;

struct GlobalOptions {
    std::string format = "text";
    std::string output;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::string config_path;
    Json config_file;  // parsed --config contents, if any
};

void load_config_file(GlobalOptions& g) {
    if (g.config_path.empty()) return;
    std::ifstream in(g.config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + g.config_path);
    in >> g.config_file;
    if (!g.config_file.is_object()) throw std::runtime_error("config file must hold a JSON object");
}

// Precedence: explicit flag > config file > built-in default.
template <typename T>
void apply_config(const GlobalOptions& g, const CLI::Option* opt, const char* key, T& value) {
    if (opt != nullptr && opt->count() > 0) return;
    if (!g.config_file.contains(key)) return;
    value = g.config_file.at(key).get<T>();
}

void write_out(const GlobalOptions& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw std::runtime_error("cannot open output file: " + g.output);
    out << text;
}

Json report_shell(const std::string& command, Json config) {
    Json rep;
    rep["artifact"] = Json{{"name", sonseq::artifact_name}, {"version", sonseq::artifact_version}};
    rep["command"] = command;
    rep["config"] = std::move(config);
    return rep;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// ---- enumerate -----------------------------------------------------------

int cmd_enumerate(const GlobalOptions& g, const std::string& kind, long long bound) {
    const bool roots = kind == "roots";
    const auto classes = roots ? sonseq::enumerate_roots(bound) : sonseq::enumerate_exceptional_vectors(bound);

    if (g.format == "csv") {
        std::ostringstream out;
        for (const auto& v : classes) out << sonseq::to_csv_row(v) << "\n";
        write_out(g, out.str());
    } else if (g.format == "json") {
        Json rep = report_shell("enumerate", Json{{"kind", kind}, {"bound", bound}});
        rep["count"] = classes.size();
        rep["classes"] = sonseq::to_json(classes);
        write_out(g, render_json(rep));
    } else {
        std::ostringstream out;
        for (const auto& v : classes) out << sonseq::to_csv_row(v) << "\n";
        out << "count: " << classes.size() << "\n";
        write_out(g, out.str());
    }
    return classes.size() == 240 ? exit_ok : exit_failed;
}

// ---- verify-m -------------------------------------------------------------

int cmd_verify_m(const GlobalOptions& g, const std::vector<long long>& moduli, long long witness_bound,
                 bool corrupt_m9) {
    using namespace sonseq;

    Json checks = Json::array();
    std::string first_failure;
    bool only_inconclusive = true;  // of the failing checks
    auto check = [&](const std::string& name, bool ok, const std::string& note = "",
                     bool inconclusive = false) {
        Json c;
        c["name"] = name;
        c["ok"] = ok;
        if (!note.empty()) c["note"] = note;
        checks.push_back(c);
        if (!ok && first_failure.empty()) first_failure = name;
        if (!ok && !inconclusive) only_inconclusive = false;
        return ok;
    };

    SonSequence seq = m_sequence();
    if (corrupt_m9) seq.back().z += 2;  // breaks chi(m_9, m_9) = 1

    Json rep = report_shell("verify-m", Json{{"moduli", moduli},
                                             {"witness_bound", witness_bound},
                                             {"corrupt_m9", corrupt_m9}});
    rep["sequence"] = to_json(seq);

    const auto vres = validate(seq);
    check("sequence-valid", vres.ok,
          vres.ok ? "45 pairing conditions hold"
                  : "violation at (" + std::to_string(vres.later + 1) + "," +
                        std::to_string(vres.earlier + 1) + ")");

    if (vres.ok) {
        const auto comp = right_orthogonal_complement(seq);
        Json gens = Json::array();
        for (const auto& w : comp.generators) gens.push_back(to_json(w));
        rep["complement"] = Json{{"rank", comp.rank()}, {"generators", gens}};
        if (check("complement-rank-2", comp.rank() == 2)) {
            // Z-span of the kernel basis must equal Z m10 + Z m11
            std::vector<std::vector<Int>> kernel_vecs, canon_vecs;
            for (const auto& w : comp.generators) {
                const auto a = coords(w);
                kernel_vecs.emplace_back(a.begin(), a.end());
            }
            for (const auto& w : {m10(), m11()}) {
                const auto a = coords(w);
                canon_vecs.emplace_back(a.begin(), a.end());
            }
            bool span_eq = true;
            for (const auto& v : canon_vecs) span_eq = span_eq && in_span(kernel_vecs, v);
            for (const auto& v : kernel_vecs) span_eq = span_eq && in_span(canon_vecs, v);
            check("complement-span-equals-m10-m11", span_eq);

            const auto gmat = gram(std::vector<K0Class>{m10(), m11()});
            rep["gram_m10_m11"] = to_json(gmat);
            check("gram-matrix",
                  gmat(0, 0) == -1 && gmat(0, 1) == 1 && gmat(1, 0) == -5 && gmat(1, 1) == 4 &&
                      det2(gmat) == 1);

            ComplementBasis canon{{m10(), m11()}};
            const BinaryForm form = induced_form(canon);
            rep["form"] = to_json(form);
            check("induced-form", form == BinaryForm{-1, -4, 4});

            const Certificate cert = represents_one(form, moduli, witness_bound);
            rep["certificate"] = to_json(cert);
            check("certificate-non-representable", cert.kind == CertificateKind::non_representable,
                  cert.kind == CertificateKind::non_representable
                      ? "modulus " + cert.modulus.str()
                      : "no congruence obstruction found",
                  cert.kind == CertificateKind::inconclusive);

            // same conclusion must hold in the kernel basis (GL2(Z) invariance)
            const BinaryForm kform = induced_form(comp);
            const Certificate kcert = represents_one(kform, moduli, witness_bound);
            rep["kernel_form"] = to_json(kform);
            rep["kernel_certificate"] = to_json(kcert);
            check("kernel-basis-certificate", kcert.kind == CertificateKind::non_representable, "",
                  kcert.kind == CertificateKind::inconclusive);
        }
    }

    rep["checks"] = checks;
    const bool all_ok = first_failure.empty();
    rep["verified"] = all_ok;
    if (!all_ok) rep["first_failure"] = first_failure;

    if (g.format == "json") {
        write_out(g, render_json(rep));
    } else {
        std::ostringstream out;
        for (const auto& c : checks) {
            out << (c.at("ok").get<bool>() ? "[ ok ] " : "[FAIL] ") << c.at("name").get<std::string>();
            if (c.contains("note")) out << "  (" << c.at("note").get<std::string>() << ")";
            out << "\n";
        }
        out << (all_ok ? "verified\n" : "verification failed at: " + first_failure + "\n");
        write_out(g, out.str());
    }
    if (all_ok) return exit_ok;
    return only_inconclusive ? exit_inconclusive : exit_failed;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const GlobalOptions& g, const sonseq::SearchConfig& cfg) {
    using namespace sonseq;

    SonSequence seed;
    seed.push_back(ch_line_bundle(PicClass{}));
    seed.push_back(ch_line_bundle(-2 * PicClass::e(1)));

    const SearchReport report = random_extension_search(seed, cfg);

    Json cfg_json{{"rng_seed", cfg.rng_seed},
                  {"trials", cfg.trials},
                  {"pool", Json{{"include_line_bundles", cfg.pool.include_line_bundles},
                                {"line_bundle_box", cfg.pool.line_bundle_box},
                                {"include_curve_sheaves", cfg.pool.include_curve_sheaves},
                                {"include_generic_box", cfg.pool.include_generic_box},
                                {"generic_box", cfg.pool.generic_box}}},
                  {"threads", cfg.threads},
                  {"moduli", cfg.moduli},
                  {"witness_bound", cfg.witness_bound}};

    if (g.format == "json") {
        Json rep = report_shell("search", cfg_json);
        const Json body = to_json(report);
        for (const auto& [key, value] : body.items()) rep[key] = value;
        write_out(g, render_json(rep));
    } else if (g.format == "csv") {
        std::ostringstream out;
        out << "index,length,shape,tail_orthogonal,hits,certificate,modulus\n";
        for (std::size_t i = 0; i < report.maximal.size(); ++i) {
            const auto& e = report.maximal[i];
            out << i << ',' << e.length << ',' << e.shape << ',' << (e.tail_orthogonal ? 1 : 0) << ','
                << e.hits << ',';
            if (e.certificate) {
                out << to_string(e.certificate->certificate.kind) << ','
                    << e.certificate->certificate.modulus;
            } else {
                out << ",";
            }
            out << "\n";
        }
        write_out(g, out.str());
    } else {
        std::ostringstream out;
        out << "pool size:   " << report.pool_size << "\n";
        out << "trials:      " << report.trials << "\n";
        out << "max length:  " << report.max_length << "\n";
        if (report.empty_pool_warning) out << "warning: candidate pool is empty\n";
        out << "shapes:\n";
        for (const auto& [shape, n] : report.shapes) out << "  " << shape << "  x" << n << "\n";
        std::size_t at_max = 0;
        for (const auto& e : report.maximal)
            if (e.length == report.max_length) ++at_max;
        out << "distinct maximal sequences: " << report.maximal.size() << " (" << at_max
            << " of maximal length)\n";
        for (const auto& e : report.maximal) {
            if (e.length != report.max_length || !e.certificate) continue;
            out << "certificate: " << to_string(e.certificate->certificate.kind);
            if (e.certificate->certificate.kind == CertificateKind::non_representable)
                out << " at modulus " << e.certificate->certificate.modulus;
            out << "\n";
        }
        write_out(g, out.str());
    }
    return exit_ok;
}

// ---- remark ----------------------------------------------------------------

int cmd_remark(const GlobalOptions& g) {
    using namespace sonseq;

    const RemarkTranscript t = reproduce_remark();
    const bool matches = t.all_valid && t.final == m_sequence();

    Json rep = report_shell("remark", Json::object());
    rep["transcript"] = to_json(t);
    rep["final_equals_m_sequence"] = matches;

    std::string diverging;
    if (!t.all_valid)
        diverging = t.steps[*t.first_invalid_step].op;
    else if (!matches)
        diverging = "final-mismatch";
    if (!diverging.empty()) rep["diverging_step"] = diverging;

    if (g.format == "json") {
        write_out(g, render_json(rep));
    } else {
        std::ostringstream out;
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& s = t.steps[i];
            out << (s.valid ? "[ ok ] " : "[FAIL] ") << "step " << i << ": " << s.op;
            if (!s.detail.empty()) out << " " << s.detail;
            out << "\n";
        }
        out << (matches ? "final sequence equals (m_1, ..., m_9)\n"
                        : "pipeline diverged at: " + diverging + "\n");
        write_out(g, out.str());
    }
    return matches ? exit_ok : exit_failed;
}

// ---- weyl ------------------------------------------------------------------

int cmd_weyl(const GlobalOptions& g, std::uint64_t source_seed, std::uint64_t target_seed,
             std::size_t depth_bound, std::size_t word_length) {
    using namespace sonseq;

    const A8System source = random_a8_system(source_seed, word_length);
    const A8System target = random_a8_system(target_seed, word_length);
    const WeylWordResult res = find_weyl_word(source, target, depth_bound);
    const bool verified = res.found && apply_word(res.word, source) == target;

    Json rep = report_shell("weyl", Json{{"source_seed", source_seed},
                                         {"target_seed", target_seed},
                                         {"depth_bound", depth_bound},
                                         {"word_length", word_length}});
    rep["source"] = to_json(source);
    rep["target"] = to_json(target);
    rep["found"] = res.found;
    if (res.found) {
        Json word = Json::array();
        for (const auto& r : res.word) word.push_back(to_json(r));
        rep["word"] = word;
        rep["word_length"] = res.word.size();
        rep["verified"] = verified;
    }

    if (g.format == "json") {
        write_out(g, render_json(rep));
    } else {
        std::ostringstream out;
        if (!res.found) {
            out << "no reflection word found within depth bound " << depth_bound << "\n";
        } else {
            out << "word of " << res.word.size() << " reflections"
                << (verified ? " (verified by re-application)" : " (VERIFICATION FAILED)") << "\n";
            for (const auto& r : res.word) out << "  " << to_csv_row(r) << "\n";
        }
        write_out(g, out.str());
    }
    if (!res.found) return exit_inconclusive;
    return verified ? exit_ok : exit_failed;
}

// ---- ideal -----------------------------------------------------------------

int cmd_ideal(const GlobalOptions& g, const std::string& path, int degree, std::optional<int> character,
              bool fermat_check, std::optional<long long> sections_below,
              const std::vector<int>& weights) {
    using namespace sonseq;

    GradedIdeal ideal;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open ideal file: " + path);
        Json j;
        in >> j;
        ideal = ideal_from_json(j);
    } else {
        ideal = parse_ideal_file(path);
    }

    CharacterWeights cw;
    if (!weights.empty()) {
        if (weights.size() != 4) throw std::runtime_error("--weights expects exactly 4 integers");
        cw = CharacterWeights::from({weights[0], weights[1], weights[2], weights[3]});
    }

    Json rep = report_shell("ideal", Json{{"path", path},
                                          {"degree", degree},
                                          {"weights", Json::array({cw.w[0], cw.w[1], cw.w[2], cw.w[3]})}});
    rep["generators"] = ideal.generators.size();

    bool all_ok = true;
    std::ostringstream text;

    const long long dim = degree_piece_dim(ideal, degree);
    rep["degree_piece_dim"] = dim;
    text << "degree " << degree << " piece dimension: " << dim << "\n";

    if (character) {
        const long long cdim = character_piece_dim(ideal, degree, *character, cw);
        rep["character"] = *character;
        rep["character_piece_dim"] = cdim;
        text << "character " << *character << " piece dimension: " << cdim << "\n";
    }

    if (fermat_check) {
        const FermatCheckResult fc = check_only_fermat_multiples(ideal, degree);
        rep["fermat_check"] = Json{{"only_fermat_multiples", fc.only_fermat_multiples},
                                   {"subscheme_dim", fc.subscheme_dim},
                                   {"fermat_dim", fc.fermat_dim}};
        text << "only Fermat multiples in degree " << degree << ": "
             << (fc.only_fermat_multiples ? "true" : "false") << " (dims " << fc.subscheme_dim << ", "
             << fc.fermat_dim << ")\n";
        all_ok = all_ok && fc.only_fermat_multiples;
    }

    if (sections_below) {
        const int c = character.value_or(0);
        const bool less = count_sections_less_than(ideal, degree, *sections_below, c, cw);
        rep["sections_below"] = Json{{"bound", *sections_below}, {"character", c}, {"holds", less}};
        text << "character " << c << " sections in degree " << degree << " below " << *sections_below
             << ": " << (less ? "true" : "false") << "\n";
        all_ok = all_ok && less;
    }

    rep["verified"] = all_ok;
    if (g.format == "json")
        write_out(g, render_json(rep));
    else
        write_out(g, text.str());
    return all_ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice toolkit for numerically semiorthonormal sequences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sonseq::artifact_name) + " " + sonseq::artifact_version);

    GlobalOptions g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output,-o", g.output, "write the report to a file instead of stdout");
    auto* threads_opt = app.add_option("--threads", g.threads, "worker pool size")->capture_default_str();
    app.add_option("--config", g.config_path, "JSON config file (flags take precedence)");

    // enumerate
    std::string enum_kind;
    long long enum_bound = -1;
    auto* enumerate = app.add_subcommand("enumerate", "list roots or exceptional vectors");
    enumerate->add_option("kind", enum_kind, "roots | exc-vectors")
        ->required()
        ->check(CLI::IsMember({"roots", "exc-vectors"}));
    auto* bound_opt = enumerate->add_option("--bound", enum_bound, "coordinate search box override");

    // verify-m
    std::vector<long long> moduli = sonseq::default_moduli();
    long long witness_bound = 100;
    bool corrupt_m9 = false;
    auto* verify = app.add_subcommand("verify-m", "verify the nine-term sequence and its certificate");
    auto* moduli_opt = verify->add_option("--modulus", moduli, "candidate moduli, tried in order");
    auto* witness_opt = verify->add_option("--witness-bound", witness_bound, "bounded witness search radius")
                            ->capture_default_str();
    verify->add_flag("--corrupt-m9", corrupt_m9, "test hook: perturb m_9 before verifying")->group("");

    // search
    sonseq::SearchConfig scfg;
    bool no_line_bundles = false, no_curves = false;
    long long generic_box = -1;
    auto* search = app.add_subcommand("search", "randomized extension search from (O, O(-2e_1))");
    auto* seed_opt = search->add_option("--seed", scfg.rng_seed, "RNG seed (required for reproducibility)");
    auto* trials_opt = search->add_option("--trials", scfg.trials, "number of trials")->capture_default_str();
    auto* pool_opt = search->add_option("--pool-bound", scfg.pool.line_bundle_box,
                                        "line-bundle coordinate box")->capture_default_str();
    search->add_flag("--no-line-bundles", no_line_bundles, "drop line-bundle classes from the pool");
    search->add_flag("--no-curves", no_curves, "drop curve-sheaf classes from the pool");
    search->add_option("--generic-box", generic_box,
                       "also pool every lattice class with chi(v,v)=1 in this box");
    auto* smod_opt = search->add_option("--modulus", scfg.moduli, "moduli for certificates of maxima");
    auto* swit_opt = search->add_option("--witness-bound", scfg.witness_bound, "witness search radius")
                         ->capture_default_str();

    // remark
    auto* remark = app.add_subcommand(
        "remark", "reproduce the nine-term sequence from (O, O(-2e_1), O_{e_2}..O_{e_8})");

    // weyl
    std::uint64_t source_seed = 0, target_seed = 0;
    std::size_t depth_bound = 64, word_length = 12;
    auto* weyl = app.add_subcommand("weyl", "reflection word between two seeded A8 systems");
    auto* src_opt = weyl->add_option("--source-seed", source_seed, "seed of the source system");
    auto* tgt_opt = weyl->add_option("--target-seed", target_seed, "seed of the target system");
    auto* depth_opt = weyl->add_option("--depth-bound", depth_bound, "maximum word length")
                          ->capture_default_str();
    auto* wlen_opt = weyl->add_option("--word-length", word_length, "random word length per system")
                         ->capture_default_str();

    // ideal
    std::string ideal_path;
    int ideal_degree = 0;
    int ideal_character = -1;
    bool fermat_check = false;
    long long sections_bound = -1;
    std::vector<int> weight_flags;
    auto* ideal = app.add_subcommand("ideal", "graded-ideal dimension computations");
    ideal->add_option("path", ideal_path, "ideal file (.json for the JSON format)")->required();
    auto* degree_opt = ideal->add_option("--degree", ideal_degree, "graded degree d");
    auto* char_opt = ideal->add_option("--character", ideal_character, "Z/5 character in 0..4");
    ideal->add_flag("--fermat-check", fermat_check,
                    "check the degree piece contains only Fermat-quintic multiples");
    auto* sections_opt = ideal->add_option("--sections-below", sections_bound,
                                           "check the character piece has dimension below this bound");
    ideal->add_option("--weights", weight_flags, "Z/5 weights of x1..x4 (default 1,2,3,4)")
        ->delimiter(',');

    // global flags may follow the subcommand name
    for (auto* sub : {enumerate, verify, search, remark, weyl, ideal}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        load_config_file(g);
        apply_config(g, threads_opt, "threads", g.threads);

        if (app.got_subcommand(enumerate)) {
            apply_config(g, bound_opt, "bound", enum_bound);
            if (enum_bound == -1) enum_bound = enum_kind == "roots" ? 4 : 7;
            if (enum_bound < 0) throw std::runtime_error("bound must be non-negative");
            return cmd_enumerate(g, enum_kind, enum_bound);
        }
        if (app.got_subcommand(verify)) {
            apply_config(g, moduli_opt, "moduli", moduli);
            apply_config(g, witness_opt, "witness_bound", witness_bound);
            if (witness_bound <= 0) throw std::runtime_error("witness bound must be positive");
            return cmd_verify_m(g, moduli, witness_bound, corrupt_m9);
        }
        if (app.got_subcommand(search)) {
            apply_config(g, seed_opt, "seed", scfg.rng_seed);
            apply_config(g, trials_opt, "trials", scfg.trials);
            apply_config(g, pool_opt, "pool_bound", scfg.pool.line_bundle_box);
            apply_config(g, smod_opt, "moduli", scfg.moduli);
            apply_config(g, swit_opt, "witness_bound", scfg.witness_bound);
            if (seed_opt->count() == 0 && !g.config_file.contains("seed"))
                throw std::runtime_error("search requires --seed (or \"seed\" in the config file)");
            if (scfg.trials == 0) throw std::runtime_error("trials must be positive");
            scfg.pool.include_line_bundles = !no_line_bundles;
            scfg.pool.include_curve_sheaves = !no_curves;
            if (generic_box >= 0) {
                scfg.pool.include_generic_box = true;
                scfg.pool.generic_box = generic_box;
            }
            scfg.threads = g.threads;
            return cmd_search(g, scfg);
        }
        if (app.got_subcommand("remark")) {
            return cmd_remark(g);
        }
        if (app.got_subcommand(weyl)) {
            apply_config(g, src_opt, "source_seed", source_seed);
            apply_config(g, tgt_opt, "target_seed", target_seed);
            apply_config(g, depth_opt, "depth_bound", depth_bound);
            apply_config(g, wlen_opt, "word_length", word_length);
            if (src_opt->count() == 0 && !g.config_file.contains("source_seed"))
                throw std::runtime_error("weyl requires --source-seed");
            if (tgt_opt->count() == 0 && !g.config_file.contains("target_seed"))
                throw std::runtime_error("weyl requires --target-seed");
            if (depth_bound == 0) throw std::runtime_error("depth bound must be positive");
            return cmd_weyl(g, source_seed, target_seed, depth_bound, word_length);
        }
        if (app.got_subcommand(ideal)) {
            apply_config(g, degree_opt, "degree", ideal_degree);
            if (degree_opt->count() == 0 && !g.config_file.contains("degree"))
                throw std::runtime_error("ideal requires --degree");
            if (ideal_degree < 0) throw std::runtime_error("degree must be non-negative");
            std::optional<int> character;
            if (char_opt->count() > 0) character = ideal_character;
            if (character && (*character < 0 || *character > 4))
                throw std::runtime_error("character must be in 0..4");
            std::optional<long long> sections;
            if (sections_opt->count() > 0) sections = sections_bound;
            return cmd_ideal(g, ideal_path, ideal_degree, character, fermat_check, sections, weight_flags);
        }
        throw std::runtime_error("no subcommand selected");
    } catch (const sonseq::IdealParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const sonseq::FermatMembershipError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
