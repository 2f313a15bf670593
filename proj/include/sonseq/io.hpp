#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sonseq/a8.hpp>
#include <sonseq/poly.hpp>
#include <sonseq/search.hpp>

namespace sonseq {

/*
 * JSON and CSV serialization. JSON objects use insertion order and integers
 * are emitted as JSON numbers when they fit in 64 bits and as decimal
 * strings otherwise, so serialize(parse(x)) == x byte for byte.
 */

using Json = nlohmann::ordered_json;

inline Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

// ---- Picard classes: arrays of 9 integers -------------------------------

inline Json to_json(const PicClass& v) {
    Json arr = Json::array();
    for (const auto& c : v.c) arr.push_back(int_to_json(c));
    return arr;
}

inline PicClass pic_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 9) throw std::invalid_argument("PicClass: expected array of 9");
    PicClass v;
    for (std::size_t i = 0; i < 9; ++i) v.c[i] = int_from_json(j[i]);
    return v;
}

// ---- K-theory classes: {"x": int, "y": [9 ints], "z": int} --------------

inline Json to_json(const K0Class& v) {
    Json obj;
    obj["x"] = int_to_json(v.x);
    obj["y"] = to_json(v.y);
    obj["z"] = int_to_json(v.z);
    return obj;
}

inline K0Class k0_from_json(const Json& j) {
    K0Class v;
    v.x = int_from_json(j.at("x"));
    v.y = pic_from_json(j.at("y"));
    v.z = int_from_json(j.at("z"));
    return v;
}

inline Json to_json(const SonSequence& seq) {
    Json arr = Json::array();
    for (const auto& v : seq) arr.push_back(to_json(v));
    return arr;
}

inline SonSequence sequence_from_json(const Json& j) {
    SonSequence seq;
    for (const auto& e : j) seq.push_back(k0_from_json(e));
    return seq;
}

inline Json to_json(const A8System& sys) {
    Json arr = Json::array();
    for (const auto& r : sys.roots) arr.push_back(to_json(r));
    return arr;
}

inline A8System a8_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8) throw std::invalid_argument("A8System: expected array of 8");
    A8System sys;
    for (std::size_t i = 0; i < 8; ++i) sys.roots[i] = pic_from_json(j[i]);
    return sys;
}

inline Json to_json(const Matrix<Int>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const BinaryForm& f) {
    Json obj;
    obj["a"] = int_to_json(f.a);
    obj["b"] = int_to_json(f.b);
    obj["c"] = int_to_json(f.c);
    return obj;
}

inline const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::non_representable: return "non-representable";
        case CertificateKind::witness: return "witness";
        default: return "inconclusive";
    }
}

inline Json to_json(const Certificate& cert) {
    Json obj;
    obj["kind"] = to_string(cert.kind);
    if (cert.kind == CertificateKind::non_representable) {
        obj["modulus"] = int_to_json(cert.modulus);
        Json res = Json::array();
        for (const auto& r : cert.residues) res.push_back(int_to_json(r));
        obj["residues"] = res;
    } else if (cert.kind == CertificateKind::witness) {
        obj["witness"] = Json::array({int_to_json(cert.witness.first), int_to_json(cert.witness.second)});
    }
    return obj;
}

inline Json to_json(const UnextendabilityReport& rep) {
    Json obj;
    Json gens = Json::array();
    for (const auto& g : rep.complement.generators) gens.push_back(to_json(g));
    obj["complement"] = Json{{"rank", rep.complement.rank()}, {"generators", gens}};
    obj["form"] = to_json(rep.form);
    obj["certificate"] = to_json(rep.certificate);
    return obj;
}

inline Json to_json(const RemarkTranscript& t) {
    Json obj;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step;
        step["op"] = s.op;
        if (!s.detail.empty()) step["detail"] = s.detail;
        if (s.index) step["index"] = *s.index;
        step["valid"] = s.valid;
        step["sequence"] = to_json(s.sequence);
        steps.push_back(step);
    }
    obj["steps"] = steps;
    obj["final"] = to_json(t.final);
    obj["all_valid"] = t.all_valid;
    if (t.first_invalid_step)
        obj["first_invalid_step"] = *t.first_invalid_step;
    else
        obj["first_invalid_step"] = nullptr;
    return obj;
}

inline Json to_json(const SearchReport& rep) {
    Json obj;
    obj["seed_sequence"] = to_json(rep.seed_sequence);
    obj["pool_size"] = rep.pool_size;
    obj["trials"] = rep.trials;
    obj["empty_pool_warning"] = rep.empty_pool_warning;
    obj["max_length"] = rep.max_length;
    Json shapes;
    for (const auto& [shape, count] : rep.shapes) shapes[shape] = count;
    obj["shapes"] = shapes;
    Json seqs = Json::array();
    Json certs = Json::array();
    for (std::size_t i = 0; i < rep.maximal.size(); ++i) {
        const auto& entry = rep.maximal[i];
        Json e;
        e["length"] = entry.length;
        e["shape"] = entry.shape;
        e["tail_orthogonal"] = entry.tail_orthogonal;
        e["hits"] = entry.hits;
        e["elements"] = to_json(entry.sequence);
        seqs.push_back(e);
        if (entry.certificate) {
            Json c;
            c["sequence_index"] = i;
            c["report"] = to_json(*entry.certificate);
            certs.push_back(c);
        }
    }
    obj["maximal_sequences"] = seqs;
    obj["certificates"] = certs;
    return obj;
}

inline Json to_json(const std::vector<PicClass>& classes) {
    Json arr = Json::array();
    for (const auto& v : classes) arr.push_back(to_json(v));
    return arr;
}

// ---- graded ideals -------------------------------------------------------

inline Json to_json(const HomogPoly& p) {
    Json obj;
    obj["degree"] = p.degree;
    Json terms = Json::array();
    for (const auto& [e, coeff] : p.terms) {
        Json t;
        t["coeff"] = int_to_json(coeff);
        t["exponents"] = Json::array({e[0], e[1], e[2], e[3]});
        terms.push_back(t);
    }
    obj["terms"] = terms;
    return obj;
}

inline Json to_json(const GradedIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(to_json(g));
    return Json{{"generators", gens}};
}

inline GradedIdeal ideal_from_json(const Json& j) {
    GradedIdeal ideal;
    for (const auto& g : j.at("generators")) {
        std::vector<std::pair<Int, Exponents>> terms;
        for (const auto& t : g.at("terms")) {
            const auto& ex = t.at("exponents");
            if (!ex.is_array() || ex.size() != 4)
                throw std::invalid_argument("ideal: expected 4 exponents per term");
            Exponents e{ex[0].get<int>(), ex[1].get<int>(), ex[2].get<int>(), ex[3].get<int>()};
            terms.push_back({int_from_json(t.at("coeff")), e});
        }
        ideal.generators.push_back(make_poly(terms));
    }
    return ideal;
}

// ---- CSV -----------------------------------------------------------------

inline std::string to_csv_row(const PicClass& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < 9; ++i) {
        if (i) out << ',';
        out << v.c[i];
    }
    return out.str();
}

inline std::string to_csv_row(const K0Class& v) {
    std::ostringstream out;
    const auto a = coords(v);
    for (std::size_t i = 0; i < 11; ++i) {
        if (i) out << ',';
        out << a[i];
    }
    return out.str();
}

} // namespace sonseq
