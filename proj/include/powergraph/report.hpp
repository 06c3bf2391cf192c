#ifndef POWERGRAPH_REPORT_HPP
#define POWERGRAPH_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "powergraph/embedding.hpp"
#include "powergraph/factor_matrix.hpp"
#include "powergraph/lemmas.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/order.hpp"
#include "powergraph/similarity.hpp"

namespace powergraph {

// All CLI-facing reports use insertion-ordered JSON so that seeded runs are
// byte-identical.
using json = nlohmann::ordered_json;

inline json mu_to_json(const MuResult& r) {
    json j;
    j["mode"] = r.mode == MuResult::Mode::kExact ? "exact" : "sampled";
    j["value"] = r.value;
    j["witness"] = r.witness;
    if (r.mode == MuResult::Mode::kSampled) {
        j["samples"] = r.samples;
        j["seed"] = r.seed;
    }
    j["violations"] = r.violations;
    return j;
}

inline MuResult mu_from_json(const json& j) {
    MuResult r;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact") {
        r.mode = MuResult::Mode::kExact;
    } else if (mode == "sampled") {
        r.mode = MuResult::Mode::kSampled;
        r.samples = j.at("samples").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
    } else {
        throw std::invalid_argument("unknown mu mode '" + mode + "'");
    }
    r.value = j.at("value").get<std::uint64_t>();
    r.witness = j.at("witness").get<std::vector<label_t>>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
    return r;
}

inline json lemma_report_to_json(const LemmaReport& r) {
    json j;
    j["lemma"] = r.lemma;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    j["tightest"] = r.tightest;
    j["violations"] = r.violations;
    return j;
}

inline json matrix_to_json(const FactorMatrix& m) {
    json rows = json::array();
    // low rows are always retained, even when empty
    for (unsigned l = 0; l <= m.low_threshold(); ++l) {
        json cells = json::array();
        auto it = m.rows().find(l);
        if (it != m.rows().end())
            for (const auto& [id, cnt] : it->second)
                cells.push_back({{"length", id.length}, {"offset", id.offset}, {"count", cnt}});
        rows.push_back({{"l_index", l}, {"cells", cells}});
    }
    for (unsigned l : m.high_rows()) {
        json cells = json::array();
        for (const auto& [id, cnt] : m.rows().at(l))
            cells.push_back({{"length", id.length}, {"offset", id.offset}, {"count", cnt}});
        rows.push_back({{"l_index", l}, {"cells", cells}});
    }
    return json{{"c", m.bound()}, {"rows", rows}};
}

inline FactorMatrix matrix_from_json(const json& j) {
    FactorMatrix m(j.at("c").get<label_t>());
    for (const auto& row : j.at("rows")) {
        const unsigned l = row.at("l_index").get<unsigned>();
        for (const auto& cell : row.at("cells")) {
            TClassId id{cell.at("length").get<label_t>(), cell.at("offset").get<label_t>()};
            const std::uint64_t cnt = cell.at("count").get<std::uint64_t>();
            for (std::uint64_t k = 0; k < cnt; ++k) m.add(LIndex{l}, id);
        }
    }
    return m;
}

inline json embedding_to_json(const EmbeddingMap& m) {
    json pairs = json::array();
    for (const auto& [from, to] : m.pairs) pairs.push_back({from, to});
    return json{{"provenance", provenance_name(m.provenance)}, {"pairs", pairs}};
}

inline EmbeddingMap embedding_from_json(const json& j) {
    EmbeddingMap m;
    const std::string p = j.at("provenance").get<std::string>();
    if (p == "phi") {
        m.provenance = Provenance::kConstructedPhi;
    } else if (p == "long-factor") {
        m.provenance = Provenance::kConstructedLongFactor;
    } else if (p == "oracle") {
        m.provenance = Provenance::kOracle;
    } else {
        throw std::invalid_argument("unknown provenance '" + p + "'");
    }
    for (const auto& pair : j.at("pairs")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("embedding pairs must be [from, to]");
        m.add(pair[0].get<label_t>(), pair[1].get<label_t>());
    }
    m.sort_by_source();
    return m;
}

inline json similarity_to_json(const SimilarityReport& r) {
    json j;
    j["u"] = r.u;
    j["class_count"] = r.class_count();
    j["classes"] = r.classes;
    return j;
}

inline json oracle_result_to_json(const OracleResult& r) {
    json j;
    j["status"] = oracle_status_name(r.status);
    j["nodes"] = r.nodes;
    if (r.map) j["embedding"] = embedding_to_json(*r.map);
    return j;
}

} // namespace powergraph

#endif
