#include <doctest.h>

#include <json.hpp>

#include "horadam/error.hpp"
#include "horadam/verify.hpp"

using namespace horadam;

namespace {

GridSpec small_fibonacci_grid() {
    return parse_grid_config(R"(
        # a quick sweep
        params = fibonacci
        m = -3..4
        n = -3..4
        r = -2..3
        k = 0..3
    )");
}

}  // namespace

TEST_CASE("a small Fibonacci grid has no violations outside the misprints") {
    const auto report = run_grid(small_fibonacci_grid());
    CHECK(report.ok());
    CHECK(report.violations() == 0);
    CHECK(report.quarantined_violations() > 0);
    std::size_t total = 0;
    for (const auto& t : report.tallies) total += t.instances();
    CHECK(total == report.grid_cardinality);
}

TEST_CASE("an empty identity filter evaluates nothing") {
    GridSpec spec = small_fibonacci_grid();
    spec.identity_filter = std::vector<IdentityId>{};
    const auto report = run_grid(spec);
    CHECK(report.tallies.empty());
    CHECK(report.grid_cardinality == 0);
    CHECK(report.ok());
}

TEST_CASE("the stated r-exclusion is tallied as a skip") {
    GridSpec spec = parse_grid_config("params = fibonacci\nidentities = thm-weighted-vwqo0w9\nr = 1\nm = 0..2\nk = 0..2");
    const auto report = run_grid(spec);
    const auto* t = report.find("thm-weighted-vwqo0w9");
    REQUIRE(t != nullptr);
    CHECK(t->pass == 0);
    CHECK(t->violation == 0);
    CHECK(t->skip == 9);
    CHECK(t->skip_reasons.at("r!=1") == 9);
}

TEST_CASE("tallies do not depend on the worker count") {
    GridSpec spec = parse_grid_config("params = pell, custom(1,2,3,2)\nm = -2..3\nn = -2..3\nr = -1..3\nk = 0..3");
    spec.jobs = 1;
    const auto serial = run_grid(spec);
    spec.jobs = 3;
    const auto parallel = run_grid(spec);
    REQUIRE(serial.tallies.size() == parallel.tallies.size());
    for (std::size_t i = 0; i < serial.tallies.size(); ++i) {
        const auto& a = serial.tallies[i];
        const auto& b = parallel.tallies[i];
        CHECK(a.id == b.id);
        CHECK(a.pass == b.pass);
        CHECK(a.skip == b.skip);
        CHECK(a.violation == b.violation);
        CHECK(a.skip_reasons == b.skip_reasons);
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t j = 0; j < a.witnesses.size(); ++j) CHECK(a.witnesses[j].indices == b.witnesses[j].indices);
    }
    auto strip_time = [](std::string json) {
        auto doc = nlohmann::json::parse(json);
        doc.erase("wall_seconds");
        return doc.dump();
    };
    CHECK(strip_time(serial.to_json()) == strip_time(parallel.to_json()));
}

TEST_CASE("every instance is accounted for exactly once") {
    GridSpec spec = parse_grid_config("params = lucas, jacobsthal, g(3,7)\nm = -1..2\nn = 0..2\nr = 0..2\nk = 0..2");
    const auto report = run_grid(spec);
    for (const auto& t : report.tallies) {
        CHECK_MESSAGE(t.instances() == identity_cardinality(spec, t.id), t.id.name());
        std::size_t by_reason = 0;
        for (const auto& [reason, count] : t.skip_reasons) by_reason += count;
        CHECK(by_reason == t.skip);
    }
}

TEST_CASE("default grid composition") {
    const GridSpec spec = default_grid();
    CHECK(spec.parameter_sets.size() >= 8);
    bool has_non_real = false;
    bool has_fraction = false;
    for (const auto& set : spec.parameter_sets) {
        const auto params = set.params();
        for (const Scalar* s : {&params.a(), &params.b(), &params.p(), &params.q()}) {
            has_non_real = has_non_real || !s->is_real();
            has_fraction = has_fraction || s->re().denominator() != 1;
        }
    }
    CHECK(has_non_real);
    CHECK(has_fraction);
    for (IdentityId id : all_identities()) CHECK(spec.is_quarantined(id) == id.def().quarantined);
    CHECK(spec.m_range.size() == 15);
    CHECK(spec.k_range.lo == 0);
}

TEST_CASE("grid config errors carry the line number") {
    auto message_of = [](const char* text) {
        try {
            parse_grid_config(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("params = fibonacci\nbogus = 3").starts_with("line 2: unknown key"));
    CHECK(message_of("m = 1..x").starts_with("line 1:"));
    CHECK(message_of("\n\nparams = nonsense").starts_with("line 3:"));
    CHECK(message_of("identities = not-an-identity").starts_with("line 1:"));
    CHECK(message_of("just words").starts_with("line 1: expected"));
    CHECK_THROWS_AS(parse_grid_config("k = -1..3"), ConfigError);
    CHECK_THROWS_AS(parse_grid_config("m = 4..1"), ConfigError);
    CHECK_THROWS_AS(load_grid_config("/nonexistent/grid.cfg"), ConfigError);

    const GridSpec spec = parse_grid_config("params = g(3,7), custom(1/2,3,-2,5)  # trailing\nwitness_limit = 2");
    REQUIRE(spec.parameter_sets.size() == 2);
    CHECK(spec.parameter_sets[1].to_string() == "custom(1/2,3,-2,5)");
    CHECK(spec.witness_limit == 2);
}

TEST_CASE("witness lists are bounded") {
    GridSpec spec = parse_grid_config("params = custom(1,2,3,2)\nidentities = neg-index-eq-8-as-printed\nwitness_limit = 3");
    spec.quarantine.clear();
    const auto report = run_grid(spec);
    CHECK_FALSE(report.ok());
    REQUIRE(report.tallies.size() == 1);
    const auto& t = report.tallies.at(0);
    CHECK(t.violation > 3);
    REQUIRE(t.witnesses.size() == 3);
    CHECK(t.witnesses[0].lhs != t.witnesses[0].rhs);

    const auto doc = nlohmann::json::parse(report.to_json());
    CHECK(doc["violations"] == t.violation);
    CHECK(doc["identities"][0]["witnesses"].size() == 3);
}

TEST_CASE("the index guard turns into a skip") {
    GridSpec spec = parse_grid_config("params = pell\nidentities = kernel-eq-10\nmax_index = 5");
    const auto report = run_grid(spec);
    const auto& t = report.tallies.at(0);
    CHECK(t.violation == 0);
    CHECK(t.skip_reasons.count("index guard exceeded") == 1);
}

TEST_CASE("benchmark compares both sides exactly") {
    const IdentityId id = identity("thm-binomial-f9x35z3");
    const auto rows = benchmark(id, parse_preset("fibonacci").params(), {0, 50, 1000}, {.m = 3, .r = 2});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.equal);
    CHECK(rows[2].k == 1000);
    CHECK(rows[2].sum_seconds > 0);

    CHECK_THROWS_AS(benchmark(identity("eq-wbtbfxw-pell"), parse_preset("fibonacci").params(), {10}), PreconditionUnmet);
}
