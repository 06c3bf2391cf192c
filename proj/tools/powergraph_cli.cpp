// Command-line front end: construction, mu bounds, lemma verification,
// <=_c comparison and the comparable-pair experiment, all reproducible from
// explicit seeds.
//
// Exit codes: 0 success / pass, 1 fail (lemma violation or verification
// failure), 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powergraph/io.hpp"
#include "powergraph/lemmas.hpp"
#include "powergraph/oracle.hpp"
#include "powergraph/order.hpp"
#include "powergraph/report.hpp"
#include "powergraph/similarity.hpp"

namespace pg = powergraph;
using pg::json;
using pg::label_t;

namespace {

std::size_t exhaustive_cap() {
    const char* env = std::getenv("WQO_CWLAB_CAP");
    if (env == nullptr || *env == '\0') return pg::kDefaultExhaustiveCap;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("WQO_CWLAB_CAP must be a positive integer");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<label_t> parse_label_list(const std::string& spec) {
    std::vector<label_t> out;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(static_cast<label_t>(std::stoull(token, &pos)));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad label '" + token + "' in subset");
        }
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GenerateArgs {
    label_t n = 0;
    std::string subset;
    std::string subset_file;
    std::string format = "labels";
};

int run_generate(const GenerateArgs& args) {
    pg::PowerGraph g = pg::build_dn(args.n);
    if (!args.subset.empty() && !args.subset_file.empty())
        throw std::invalid_argument("--subset and --subset-file are mutually exclusive");
    if (!args.subset.empty()) g = g.induced(parse_label_list(args.subset));
    if (!args.subset_file.empty()) g = g.induced(pg::parse_labels(slurp(args.subset_file)).labels());

    if (args.format == "labels") {
        std::cout << pg::write_labels(g);
    } else if (args.format == "edgelist") {
        std::cout << pg::write_edge_list(g);
    } else if (args.format == "dot") {
        std::cout << pg::write_dot(g);
    } else {
        throw std::invalid_argument("unknown format '" + args.format + "'");
    }
    return 0;
}

struct MuArgs {
    std::string file;
    std::string mode = "exact";
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format = "text";
};

int run_mu(const MuArgs& args) {
    pg::PowerGraph g = pg::parse_labels(slurp(args.file));
    pg::MuResult result;
    if (args.mode == "exact") {
        result = pg::mu_exact(g, exhaustive_cap());
    } else if (args.mode == "sampled") {
        if (args.samples == 0) throw std::invalid_argument("sampled mode needs --samples >= 1");
        if (!args.seed_set) throw std::invalid_argument("sampled mode needs an explicit --seed");
        result = pg::mu_sampled(g, args.samples, args.seed);
    } else {
        throw std::invalid_argument("unknown mode '" + args.mode + "'");
    }

    if (args.format == "json") {
        emit(pg::mu_to_json(result));
    } else {
        std::cout << "mu" << (result.mode == pg::MuResult::Mode::kExact ? "" : " (sampled estimate)")
                  << " = " << result.value << "\n";
        std::cout << "witness U = {";
        for (std::size_t i = 0; i < result.witness.size(); ++i)
            std::cout << (i ? " " : "") << result.witness[i];
        std::cout << "}\n";
        for (const auto& v : result.violations) std::cout << "violation: " << v << "\n";
    }
    return result.violations.empty() ? 0 : 1;
}

struct VerifyArgs {
    std::string lemma;
    label_t n = 16;
    unsigned c = 3;
    label_t max = 4096;
    label_t len = 64;
    std::uint64_t pairs = 10000;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    pg::LemmaReport report;
    if (args.lemma == "2") {
        report = pg::check_lemma2(args.n, exhaustive_cap());
    } else if (args.lemma == "3") {
        report = pg::check_lemma3_all(args.n, exhaustive_cap());
    } else if (args.lemma == "4") {
        report = pg::check_lemma4(args.c, args.max);
    } else if (args.lemma == "maxone") {
        report = pg::check_lemma_maxone(args.max, args.len);
    } else if (args.lemma == "diffq") {
        report = pg::check_lemma_diffq(args.max, args.len);
    } else if (args.lemma == "intiso") {
        if (!args.seed_set) throw std::invalid_argument("intiso sampling needs an explicit --seed");
        report = pg::check_intiso_random(args.pairs, args.seed);
    } else {
        throw std::invalid_argument("unknown lemma '" + args.lemma +
                                    "' (choose 2|3|4|diffq|maxone|intiso)");
    }

    if (args.format == "json") {
        emit(pg::lemma_report_to_json(report));
    } else {
        std::cout << "lemma " << report.lemma << ": " << (report.pass ? "pass" : "FAIL") << " ("
                  << report.checked << " instances)\n";
        if (!report.tightest.empty()) std::cout << "tightest: " << report.tightest << "\n";
        for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
    }
    return report.pass ? 0 : 1;
}

struct CompareArgs {
    std::string file_a;
    std::string file_b;
    label_t c = 0;
    bool fallback_oracle = false;
    std::uint64_t budget = 1000000;
    std::string format = "text";
};

int run_compare(const CompareArgs& args) {
    pg::PowerGraph a = pg::parse_labels(slurp(args.file_a));
    pg::PowerGraph b = pg::parse_labels(slurp(args.file_b));

    const bool bounded = pg::factors_bounded_by(a, args.c) && pg::factors_bounded_by(b, args.c);
    if (!bounded && !args.fallback_oracle)
        throw std::invalid_argument("a factor is longer than c=" + std::to_string(args.c) +
                                    "; rerun with --fallback-oracle");

    json report;
    report["c"] = args.c;
    std::optional<pg::EmbeddingMap> embedding;
    std::optional<pg::CPreservingMap> witness;
    if (bounded) witness = pg::leq_c(a, b, args.c);
    if (witness) {
        report["result"] = "comparable";
        json rows = json::array();
        for (const auto& [from, to] : witness->assignments) rows.push_back({from, to});
        report["row_map"] = rows;
        embedding = pg::build_embedding_phi(a, b, args.c, *witness);
        report["embedding"] = pg::embedding_to_json(*embedding);
    } else {
        report["result"] = bounded ? "incomparable-under-leq_c" : "leq-c-not-applicable";
    }
    if (args.fallback_oracle) {
        pg::OracleResult oracle = pg::induced_embeds(a, b, pg::SearchBudget{args.budget});
        report["oracle"] = pg::oracle_result_to_json(oracle);
    }

    if (args.format == "json") {
        emit(report);
    } else {
        std::cout << report["result"].get<std::string>() << "\n";
        if (witness) {
            std::cout << "row map:";
            for (const auto& [from, to] : witness->assignments)
                std::cout << " " << from << "->" << to;
            std::cout << "\n";
        }
        if (embedding) {
            std::cout << "embedding:";
            for (const auto& [from, to] : embedding->pairs)
                std::cout << " " << from << "->" << to;
            std::cout << "\n";
        }
        if (report.contains("oracle"))
            std::cout << "oracle: " << report["oracle"]["status"].get<std::string>() << "\n";
    }
    return 0;
}

struct ExperimentArgs {
    std::uint64_t count = 0;
    label_t host_n = 0;
    label_t c = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    label_t max_order = 24;
    bool fallback_oracle = false;
    std::uint64_t budget = 1000000;
    std::string format = "text";
};

int run_experiment(const ExperimentArgs& args) {
    if (args.count == 0) throw std::invalid_argument("--count must be >= 1");
    if (!args.seed_set) throw std::invalid_argument("experiments need an explicit --seed");
    pg::Rng rng(args.seed);
    std::vector<pg::PowerGraph> sequence;
    sequence.reserve(args.count);
    for (std::uint64_t k = 0; k < args.count; ++k)
        sequence.push_back(pg::random_c_bounded_subgraph(rng, args.host_n, args.c, args.max_order));

    pg::ComparisonOptions options;
    options.oracle_fallback = args.fallback_oracle;
    options.budget.node_limit = args.budget;
    auto pair = pg::find_comparable_pair(sequence, args.c, options);

    json report;
    report["count"] = args.count;
    report["host_n"] = args.host_n;
    report["c"] = args.c;
    report["seed"] = args.seed;
    report["max_order"] = args.max_order;
    report["found"] = pair.has_value();
    if (pair) {
        json p;
        p["i"] = pair->i;
        p["j"] = pair->j;
        p["route"] = pg::comparison_route_name(pair->route);
        p["graph_i"] = sequence[pair->i - 1].labels();
        p["graph_j"] = sequence[pair->j - 1].labels();
        p["embedding"] = pg::embedding_to_json(pair->map);
        report["pair"] = p;
    }

    if (args.format == "json") {
        emit(report);
    } else if (pair) {
        std::cout << "comparable pair: G_" << pair->i << " embeds into G_" << pair->j << " via "
                  << pg::comparison_route_name(pair->route) << "\n";
    } else {
        std::cout << "no comparable pair found under the attempted tests\n";
    }
    return 0;
}

struct OracleArgs {
    std::string file_a;
    std::string file_b;
    std::uint64_t budget = 1000000;
    std::string format = "text";
};

int run_oracle_check(const OracleArgs& args) {
    pg::PowerGraph a = pg::parse_labels(slurp(args.file_a));
    pg::PowerGraph b = pg::parse_labels(slurp(args.file_b));
    pg::OracleResult r = pg::induced_embeds(a, b, pg::SearchBudget{args.budget});
    if (args.format == "json") {
        emit(pg::oracle_result_to_json(r));
    } else {
        std::cout << pg::oracle_status_name(r.status) << " (" << r.nodes << " nodes)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphs D_n, the mu clique-width lower bound, and the <=_c quasi-order"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "emit D_n or an induced subgraph of it");
    generate->add_option("n", gen.n, "number of vertices of D_n")->required();
    generate->add_option("--subset", gen.subset, "comma-separated labels to keep");
    generate->add_option("--subset-file", gen.subset_file, "file with space-separated labels");
    generate->add_option("--format", gen.format, "labels|edgelist|dot (default labels)");

    MuArgs mu;
    auto* mu_cmd = app.add_subcommand("mu", "similarity lower bound mu of a graph file");
    mu_cmd->add_option("file", mu.file, "graph file (labels line)")->required();
    mu_cmd->add_option("--mode", mu.mode, "exact|sampled (default exact)");
    mu_cmd->add_option("--samples", mu.samples, "number of sampled subsets");
    mu_cmd->add_option("--seed", mu.seed, "RNG seed (required when sampling)");
    mu_cmd->add_option("--format", mu.format, "text|json (default text)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive lemma verification");
    verify_cmd->add_option("--lemma", verify.lemma, "2|3|4|diffq|maxone|intiso")->required();
    verify_cmd->add_option("--n", verify.n, "D_n size for lemmas 2 and 3 (default 16)");
    verify_cmd->add_option("--c", verify.c, "power range for lemma 4 (default 3)");
    verify_cmd->add_option("--max", verify.max, "largest label scanned (default 4096)");
    verify_cmd->add_option("--len", verify.len, "largest interval length (default 64)");
    verify_cmd->add_option("--pairs", verify.pairs, "sampled pairs for intiso (default 10000)");
    verify_cmd->add_option("--seed", verify.seed, "RNG seed (required for intiso)");
    verify_cmd->add_option("--format", verify.format, "text|json (default text)");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "decide A <=_c B and build the embedding");
    compare_cmd->add_option("a", compare.file_a, "guest graph file")->required();
    compare_cmd->add_option("b", compare.file_b, "host graph file")->required();
    compare_cmd->add_option("--c", compare.c, "factor length bound")->required();
    compare_cmd->add_flag("--fallback-oracle", compare.fallback_oracle,
                          "also run the generic embedding oracle");
    compare_cmd->add_option("--budget", compare.budget, "oracle node budget (default 10^6)");
    compare_cmd->add_option("--format", compare.format, "text|json (default text)");

    ExperimentArgs experiment;
    auto* experiment_cmd =
        app.add_subcommand("experiment", "comparable-pair search over a random sequence");
    experiment_cmd->add_option("--count", experiment.count, "number of graphs")->required();
    experiment_cmd->add_option("--host-n", experiment.host_n, "draw subgraphs of D_host-n")
        ->required();
    experiment_cmd->add_option("--c", experiment.c, "factor length bound")->required();
    experiment_cmd->add_option("--seed", experiment.seed, "RNG seed (required)");
    experiment_cmd->add_option("--max-order", experiment.max_order,
                               "largest drawn graph order (default 24)");
    experiment_cmd->add_flag("--fallback-oracle", experiment.fallback_oracle,
                             "try the generic oracle on each pair");
    experiment_cmd->add_option("--budget", experiment.budget, "oracle node budget");
    experiment_cmd->add_option("--format", experiment.format, "text|json (default text)");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "generic induced-subgraph oracle");
    oracle_cmd->add_option("a", oracle.file_a, "guest graph file")->required();
    oracle_cmd->add_option("b", oracle.file_b, "host graph file")->required();
    oracle_cmd->add_option("--budget", oracle.budget, "search node budget (default 10^6)");
    oracle_cmd->add_option("--format", oracle.format, "text|json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    mu.seed_set = mu_cmd->count("--seed") > 0;
    verify.seed_set = verify_cmd->count("--seed") > 0;
    experiment.seed_set = experiment_cmd->count("--seed") > 0;

    try {
        if (*generate) return run_generate(gen);
        if (*mu_cmd) return run_mu(mu);
        if (*verify_cmd) return run_verify(verify);
        if (*compare_cmd) return run_compare(compare);
        if (*experiment_cmd) return run_experiment(experiment);
        if (*oracle_cmd) return run_oracle_check(oracle);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
