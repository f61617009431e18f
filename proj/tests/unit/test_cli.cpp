#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "horadam/cli.hpp"
#include "horadam/identities.hpp"

using namespace horadam;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::string flag_for(char index) { return std::string("--") + index; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("horadam_cli_" + name);
}

}  // namespace

TEST_CASE("term") {
    CHECK(run({"term", "--preset", "pell", "--n", "5"}).out == "29\n");
    CHECK(run({"term", "--preset", "pell", "--n", "-3"}).out == "5\n");
    CHECK(run({"term", "--a", "1/2", "--b", "1+1i", "--p", "2", "--q", "-1i", "--n", "2"}).out == "2+5/2i\n");
    CHECK(run({"term", "--preset", "fibonacci", "--n", "500", "--max-index", "100"}).code == kExitUsage);
    CHECK(run({"term", "--preset", "nonsense", "--n", "1"}).code == kExitUsage);
    CHECK(run({"term", "--preset", "pell", "--p", "2", "--n", "1"}).code == kExitUsage);
    CHECK(run({"term", "--a", "0", "--b", "1", "--p", "1", "--n", "1"}).code == kExitUsage);
    CHECK(run({"term", "--a", "0.5", "--b", "1", "--p", "1", "--q", "-1", "--n", "1"}).code == kExitUsage);
    CHECK(run({"term", "--a", "0", "--b", "1", "--p", "0", "--q", "-1", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"term", "--preset", "pell"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check") {
    auto pass = run({"check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2"});
    CHECK(pass.code == kExitOk);
    CHECK(pass.out == "PASS lhs=rhs=6\n");

    auto skip = run({"check", "--id", "thm-xvb2v42", "--preset", "fibonacci", "--r", "1", "--m", "0", "--k", "0"});
    CHECK(skip.code == kExitOk);
    CHECK(skip.out == "SKIP precondition w_{r-1}!=0\n");

    auto fail = run({"check", "--id", "neg-index-eq-8-as-printed", "--a", "1", "--b", "2", "--p", "3", "--q", "2",
                     "--n", "1"});
    CHECK(fail.code == kExitViolation);
    CHECK(fail.out.starts_with("FAIL lhs="));

    auto extra = run({"check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2", "--k", "1"});
    CHECK(extra.code == kExitUsage);
    CHECK(extra.err.find("does not use --k") != std::string::npos);

    auto missing = run({"check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3"});
    CHECK(missing.code == kExitUsage);
    CHECK(missing.err.find("requires --r") != std::string::npos);

    CHECK(run({"check", "--id", "no-such-id", "--preset", "pell", "--n", "1"}).code == kExitUsage);
    CHECK(run({"check", "--id", "lemma-2.1", "--preset", "pell", "--m", "1", "--n", "1", "--r", "1", "--k", "-2"}).code ==
          kExitUsage);
}

TEST_CASE("check output round-trips through the scalar grammar") {
    auto r = run({"check", "--id", "thm-ybopnqn", "--a", "1/2", "--b", "1+1i", "--p", "2", "--q", "-1i", "--m", "1",
                  "--n", "3", "--r", "1", "--k", "2"});
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out.starts_with("PASS lhs=rhs="));
    const std::string value = r.out.substr(13, r.out.size() - 14);
    CHECK(format_scalar(parse_scalar(value)) == value);
}

TEST_CASE("identities listing") {
    auto listing = run({"identities"});
    CHECK(listing.code == kExitOk);
    const auto lines = lines_of(listing.out);
    CHECK(lines.size() == registry().size());

    bool saw_e = false;
    for (const auto& line : lines) {
        if (line.starts_with("kernel-eq-12\t")) saw_e = line.find("e=pab-qa^2-b^2") != std::string::npos;
    }
    CHECK(saw_e);

    // Every listed id is accepted by check once its indices are supplied.
    for (const auto& line : lines) {
        const std::string id = line.substr(0, line.find('\t'));
        const auto open = line.find('[');
        const std::string used = line.substr(open + 1, line.find(']') - open - 1);
        std::vector<std::string> args{"check", "--id", id, "--preset", "fibonacci"};
        for (char index : used) {
            args.push_back(flag_for(index));
            args.push_back(index == 'k' ? "2" : "3");
        }
        const auto r = run(args);
        CHECK_MESSAGE(r.code != kExitUsage, id, ": ", r.err);
    }
}

TEST_CASE("verify with a grid file") {
    const auto grid = temp_file("grid.cfg");
    const auto json = temp_file("report.json");
    {
        std::ofstream cfg(grid);
        cfg << "params = fibonacci, g(3,7), custom(1,2,3,2)\nidentities = kernel-eq-10, eq-ndpr9xm-g, neg-index-eq-8-as-printed\n"
               "m = -2..3\nn = -2..3\nr = 0..3\nk = 0..3\n";
    }
    auto ok = run({"verify", "--grid", grid.string(), "--out", json.string(), "--jobs", "2"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("kernel-eq-10") != std::string::npos);

    std::ifstream in(json);
    const auto doc = nlohmann::json::parse(in);
    for (const char* key : {"grid_cardinality", "wall_seconds", "violations", "quarantined_violations", "identities"}) {
        CHECK_MESSAGE(doc.contains(key), key);
    }
    CHECK(doc["violations"] == 0);
    CHECK(doc["quarantined_violations"].get<int>() > 0);
    REQUIRE(doc["identities"].size() == 3);
    for (const char* key : {"identity", "anchor", "quarantined", "parameter_sets", "pass", "skip", "violation",
                            "skip_reasons", "witnesses"}) {
        CHECK_MESSAGE(doc["identities"][0].contains(key), key);
    }

    // An explicit empty quarantine list puts the misprint back in the verdict.
    {
        std::ofstream cfg(grid, std::ios::app);
        cfg << "quarantine =\n";
    }
    auto bad = run({"verify", "--grid", grid.string(), "--witness-limit", "1"});
    CHECK(bad.code == kExitViolation);
    CHECK(bad.err.find("violation neg-index-eq-8-as-printed") != std::string::npos);
    CHECK(lines_of(bad.err).size() == 1);

    // Quarantining from the command line restores a clean verdict.
    auto again = run({"verify", "--grid", grid.string(), "--quarantine", "neg-index-eq-8-as-printed"});
    CHECK(again.code == kExitOk);

    CHECK(run({"verify", "--grid", "/nonexistent.cfg"}).code == kExitUsage);
    CHECK(run({"verify", "--grid", grid.string(), "--quarantine", "nope"}).code == kExitUsage);
    std::filesystem::remove(grid);
    std::filesystem::remove(json);
}

TEST_CASE("bench") {
    auto r = run({"bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--m", "3", "--r", "2", "--k",
                  "10,200"});
    CHECK(r.code == kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].find("yes") != std::string::npos);
    CHECK(lines[2].find("200") != std::string::npos);

    CHECK(run({"bench", "--id", "kernel-eq-10", "--preset", "fibonacci", "--m", "1", "--n", "1", "--r", "1"}).code ==
          kExitUsage);
    CHECK(run({"bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--m", "3"}).code == kExitUsage);
}
