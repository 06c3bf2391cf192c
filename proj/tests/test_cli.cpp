#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "powergraph/io.hpp"
#include "testutil.hpp"

using json = nlohmann::json;
using testutil::run_command;

namespace {

const std::string kCli = POWERGRAPH_CLI_PATH;

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("powergraph_test_" + name);
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("generate edge lists") {
    auto d16 = run_command(kCli + " generate 16 --format edgelist");
    CHECK(d16.exit_code == 0);
    CHECK(d16.output.substr(0, d16.output.find('\n')) == "16 50");

    auto d1 = run_command(kCli + " generate 1 --format edgelist");
    CHECK(d1.exit_code == 0);
    CHECK(d1.output == "1 0\n");

    auto sub = run_command(kCli + " generate 16 --subset 5,6,8,9 --format edgelist");
    CHECK(sub.exit_code == 0);
    CHECK(sub.output == "4 3\n5 6\n5 9\n8 9\n");
}

TEST_CASE("generate labels and dot") {
    auto labels = run_command(kCli + " generate 6");
    CHECK(labels.exit_code == 0);
    CHECK(labels.output == "1 2 3 4 5 6\n");

    auto dot = run_command(kCli + " generate 16 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph power_graph {") == 0);
    CHECK(dot.output.find("group=\"q1\"") != std::string::npos);
}

TEST_CASE("generate usage errors exit with 2") {
    CHECK(run_command(kCli + " generate").exit_code == 2);
    CHECK(run_command(kCli + " generate 0").exit_code == 2);
    CHECK(run_command(kCli + " generate 8 --format nonsense").exit_code == 2);
    CHECK(run_command(kCli + " generate 8 --subset 9").exit_code == 2);
    CHECK(run_command(kCli + " totally-unknown").exit_code == 2);
}

TEST_CASE("mu exact on D_4") {
    auto file = write_temp("d4", "1 2 3 4\n");
    auto r = run_command(kCli + " mu " + file.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["mode"] == "exact");
    CHECK(j["value"] == 1);
    CHECK(j["witness"] == json::array({1, 2}));
    CHECK(j["violations"].empty());
}

TEST_CASE("mu degenerate and error paths") {
    auto empty = write_temp("empty", "\n");
    auto r = run_command(kCli + " mu " + empty.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output)["value"] == 0);

    CHECK(run_command(kCli + " mu /nonexistent/file").exit_code == 2);
    auto bad = write_temp("bad", "1 2 x\n");
    CHECK(run_command(kCli + " mu " + bad.string()).exit_code == 2);

    auto d4 = write_temp("d4b", "1 2 3 4\n");
    CHECK(run_command(kCli + " mu " + d4.string() + " --mode sampled --samples 10").exit_code == 2);
    CHECK(run_command(kCli + " mu " + d4.string() + " --mode sampled --seed 1").exit_code == 2);

    // exact above the cap refuses with guidance
    auto d30 = write_temp("d30", powergraph::write_labels(powergraph::build_dn(30)));
    CHECK(run_command(kCli + " mu " + d30.string()).exit_code == 2);
    CHECK(run_command("WQO_CWLAB_CAP=3 " + kCli + " mu " + d4.string()).exit_code == 2);
    CHECK(run_command("WQO_CWLAB_CAP=4 " + kCli + " mu " + d4.string()).exit_code == 0);
    CHECK(run_command("WQO_CWLAB_CAP=bogus " + kCli + " mu " + d4.string()).exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run_command(kCli + " verify --lemma 2 --n 10").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma 3 --n 10").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma 4 --c 3 --max 1024").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma maxone --max 512 --len 32").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma diffq --max 512 --len 32").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma intiso --pairs 200 --seed 7").exit_code == 0);
    CHECK(run_command(kCli + " verify --lemma intiso --pairs 200").exit_code == 2);
    CHECK(run_command(kCli + " verify --lemma 99").exit_code == 2);
    CHECK(run_command(kCli + " verify --lemma 2 --n 30").exit_code == 2);
}

TEST_CASE("verify emits a structured report") {
    auto r = run_command(kCli + " verify --lemma 2 --n 8 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["lemma"] == "2");
    CHECK(j["pass"] == true);
    CHECK(j["checked"] == 256);
    CHECK(j["violations"].empty());
}

TEST_CASE("compare command") {
    auto a = write_temp("cmp_a", "9\n");
    auto b = write_temp("cmp_b", "1 3\n");
    auto r = run_command(kCli + " compare " + a.string() + " " + b.string() + " --c 1 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["result"] == "comparable");
    CHECK(j["embedding"]["pairs"] == json::array({json::array({9, 1})}));

    auto self = run_command(kCli + " compare " + a.string() + " " + a.string() + " --c 1");
    CHECK(self.exit_code == 0);
    CHECK(self.output.find("comparable") == 0);
}

TEST_CASE("compare counterexample {2} vs {1}") {
    auto a = write_temp("cex_a", "2\n");
    auto b = write_temp("cex_b", "1\n");
    auto plain = run_command(kCli + " compare " + a.string() + " " + b.string() + " --c 1");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "incomparable-under-leq_c\n");

    auto oracle = run_command(kCli + " compare " + a.string() + " " + b.string() +
                              " --c 1 --fallback-oracle --format json");
    REQUIRE(oracle.exit_code == 0);
    json j = json::parse(oracle.output);
    CHECK(j["result"] == "incomparable-under-leq_c");
    CHECK(j["oracle"]["status"] == "embeds");
}

TEST_CASE("compare needs the factor bound or the oracle") {
    auto a = write_temp("long_a", "1 2 3 4 5\n");
    auto b = write_temp("long_b", "1 2 3 4 5 6 7 8\n");
    CHECK(run_command(kCli + " compare " + a.string() + " " + b.string() + " --c 3").exit_code == 2);
    auto fb = run_command(kCli + " compare " + a.string() + " " + b.string() +
                          " --c 3 --fallback-oracle --format json");
    REQUIRE(fb.exit_code == 0);
    json j = json::parse(fb.output);
    CHECK(j["result"] == "leq-c-not-applicable");
    CHECK(j["oracle"]["status"] == "embeds");
}

TEST_CASE("oracle-check command") {
    auto a = write_temp("oc_a", "1 2 3 4\n");
    auto b = write_temp("oc_b", powergraph::write_labels(powergraph::build_dn(16)));
    auto r = run_command(kCli + " oracle-check " + a.string() + " " + b.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["status"] == "embeds");
    CHECK(j["embedding"]["pairs"].size() == 4);

    auto rev = run_command(kCli + " oracle-check " + b.string() + " " + a.string());
    CHECK(rev.exit_code == 0);
    CHECK(rev.output.find("not-embeds") == 0);
}

TEST_CASE("experiment finds duplicate-driven pairs deterministically") {
    const std::string cmd = kCli + " experiment --count 40 --host-n 64 --c 4 --seed 11 --format json";
    auto first = run_command(cmd);
    REQUIRE(first.exit_code == 0);
    auto second = run_command(cmd);
    CHECK(first.output == second.output);
    json j = json::parse(first.output);
    CHECK(j["count"] == 40);
    CHECK(j["seed"] == 11);

    auto one = run_command(kCli + " experiment --count 1 --host-n 64 --c 4 --seed 11 --format json");
    REQUIRE(one.exit_code == 0);
    CHECK(json::parse(one.output)["found"] == false);

    CHECK(run_command(kCli + " experiment --count 5 --host-n 64 --c 4").exit_code == 2);
}

TEST_CASE("seeded commands are byte-identical across runs") {
    auto d12 = write_temp("det_d12", powergraph::write_labels(powergraph::build_dn(12)));
    for (const std::string& cmd :
         {kCli + " mu " + d12.string() + " --mode sampled --samples 64 --seed 3 --format json",
          kCli + " verify --lemma intiso --pairs 100 --seed 5 --format json",
          kCli + " experiment --count 12 --host-n 48 --c 3 --seed 9 --format json"}) {
        auto a = run_command(cmd);
        auto b = run_command(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}
