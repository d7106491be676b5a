#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "quartic/cli.hpp"
#include "quartic/json_io.hpp"
#include "quartic/local.hpp"

using namespace quartic;
using nlohmann::json;

namespace {

std::string write_temp_system(const json& doc, const std::string& name) {
    std::string path = std::string("cli_test_") + name + ".json";
    std::ofstream out(path);
    out << doc.dump();
    return path;
}

std::string failing_system_path() {
    static std::string path =
        write_temp_system(to_json(counterexample_system(9)), "failing");
    return path;
}

}  // namespace

TEST_CASE("analyze reports the invariants") {
    RunConfig config;
    config.subcommand = "analyze";
    config.system_path = failing_system_path();
    DispatchResult result = dispatch(config);
    REQUIRE(result.status == 0);
    REQUIRE(result.has_document);
    CHECK(result.document["q0"] == 4);
    CHECK(result.document["q0_minimization"] == 4);
    CHECK(result.document["s"] == 9);
    CHECK(result.document["profile"] == json::array({5, 3, 1}));
    CHECK(result.document["normal_form"]["transform_det"] != 0);
}

TEST_CASE("unknown subcommands fail with status 2 and no document") {
    RunConfig config;
    config.subcommand = "frobnicate";
    DispatchResult result = dispatch(config);
    CHECK(result.status == 2);
    CHECK(!result.has_document);
    CHECK(!result.error.empty());
}

TEST_CASE("missing required flags fail with status 2") {
    RunConfig config;
    config.subcommand = "count";
    config.system_path = failing_system_path();
    DispatchResult result = dispatch(config);
    CHECK(result.status == 2);

    RunConfig no_system;
    no_system.subcommand = "analyze";
    CHECK(dispatch(no_system).status == 2);

    RunConfig bad_tau;
    bad_tau.subcommand = "analyze";
    bad_tau.system_path = failing_system_path();
    bad_tau.tau = 0.5;
    CHECK(dispatch(bad_tau).status == 2);
}

TEST_CASE("moments emit one record per requested order") {
    RunConfig config;
    config.subcommand = "moments";
    config.P = 3;
    config.t_values = {2};
    DispatchResult result = dispatch(config);
    REQUIRE(result.status == 0);
    CHECK(result.document["P"] == 3);
    CHECK(result.document["R"] == 3);
    CHECK(result.document["moment"] == 3);
    CHECK(result.document["surrogate_delta"] == doctest::Approx(3.0));

    config.t_values = {2, 4};
    DispatchResult two = dispatch(config);
    REQUIRE(two.status == 0);
    REQUIRE(two.document.is_array());
    CHECK(two.document.size() == 2);
}

TEST_CASE("entangled moments through the front end") {
    RunConfig config;
    config.subcommand = "moments";
    config.P = 2;
    config.entangled = "1,1,1,1";
    DispatchResult result = dispatch(config);
    REQUIRE(result.status == 0);
    CHECK(result.document["I"] == 15184);
    CHECK(result.document["bound_3_sum_psi3"] == 3 * 15184);

    config.entangled = "1,1,oops";
    CHECK(dispatch(config).status == 2);
    config.entangled = "1,0,1,1";
    CHECK(dispatch(config).status == 2);
}

TEST_CASE("counterexample subcommand confirms at small scale") {
    RunConfig config;
    config.subcommand = "counterexample";
    config.s = 9;
    config.prime_bound = 20;
    config.search_bound = 6;
    DispatchResult result = dispatch(config);
    REQUIRE(result.status == 0);
    CHECK(result.document["conclusion"] == "counterexample-confirmed-at-scale");
    CHECK(result.document["local"].size() == 8);  // primes to 20

    config.s = 8;
    CHECK(dispatch(config).status == 2);
}

TEST_CASE("local subcommand routes single forms and the built-in pair") {
    RunConfig config;
    config.subcommand = "local";
    config.prime_bound = 10;
    config.search_bound = 3;
    config.system_path = write_temp_system(json{{"A", {1, -1}}, {"B", {0, 0}}}, "single");
    DispatchResult single = dispatch(config);
    REQUIRE(single.status == 0);
    CHECK(single.document["conclusion"] == "hasse-principle-evidence");

    config.system_path = failing_system_path();
    DispatchResult pair = dispatch(config);
    REQUIRE(pair.status == 0);
    CHECK(pair.document["conclusion"] == "counterexample-confirmed-at-scale");

    config.system_path = write_temp_system(json{{"A", {1, 0}}, {"B", {1, 1}}}, "general");
    CHECK(dispatch(config).status == 2);
}

TEST_CASE("series, integral and predict wire through") {
    std::string path = write_temp_system(
        json{{"A", {1, 1, 1, 1, 1, 0, 0, 0, 0, 0}}, {"B", {0, 0, 0, 0, 0, 1, 1, 1, 1, 1}}},
        "fivefive");
    RunConfig series;
    series.subcommand = "series";
    series.system_path = path;
    series.X = 4.0;
    DispatchResult series_result = dispatch(series);
    REQUIRE(series_result.status == 0);
    CHECK(series_result.document["terms"].size() == 4);

    RunConfig integral;
    integral.subcommand = "integral";
    integral.system_path = path;
    integral.P = 4;
    integral.X = 2.0;
    DispatchResult integral_result = dispatch(integral);
    REQUIRE(integral_result.status == 0);
    double j_value = integral_result.document["value"];

    RunConfig predict;
    predict.subcommand = "predict";
    predict.system_path = path;
    predict.P = 4;
    predict.X = 2.0;
    DispatchResult predict_result = dispatch(predict);
    REQUIRE(predict_result.status == 0);
    double series_value = predict_result.document["singular_series"];
    CHECK(predict_result.document["prediction"] ==
          doctest::Approx(series_value * j_value).epsilon(1e-9));
}

TEST_CASE("count wires through with and without prediction") {
    std::string path =
        write_temp_system(json{{"A", {1, -1, 0, 0}}, {"B", {0, 0, 1, -1}}}, "independent");
    RunConfig config;
    config.subcommand = "count";
    config.system_path = path;
    config.P = 2;
    DispatchResult plain = dispatch(config);
    REQUIRE(plain.status == 0);
    CHECK(plain.document["N"] == 81);
    CHECK(!plain.document.contains("prediction"));

    config.predict_X = 2.0;
    DispatchResult with_prediction = dispatch(config);
    REQUIRE(with_prediction.status == 0);
    CHECK(with_prediction.document.contains("prediction"));
    CHECK(with_prediction.document.contains("in_theorem_regime"));
}

TEST_CASE("budget violations surface as status 3") {
    RunConfig config;
    config.subcommand = "moments";
    config.P = 40;
    config.t_values = {12};
    config.budget.max_multiset_entries = 100;
    CHECK(dispatch(config).status == 3);
}

TEST_CASE("identical configurations give byte-identical documents") {
    RunConfig config;
    config.subcommand = "analyze";
    config.system_path = failing_system_path();
    std::string first = dispatch(config).document.dump(2);
    std::string second = dispatch(config).document.dump(2);
    CHECK(first == second);

    RunConfig count;
    count.subcommand = "count";
    count.system_path = failing_system_path();
    count.P = 4;
    count.threads = 1;
    std::string serial = dispatch(count).document.dump(2);
    count.threads = 4;
    std::string parallel = dispatch(count).document.dump(2);
    CHECK(serial == parallel);

    RunConfig moments;
    moments.subcommand = "moments";
    moments.P = 6;
    moments.t_values = {6};
    moments.threads = 1;
    std::string momser = dispatch(moments).document.dump(2);
    moments.threads = 8;
    CHECK(dispatch(moments).document.dump(2) == momser);
}

TEST_CASE("systems load from standard input") {
    std::istringstream feed(to_json(counterexample_system(9)).dump());
    std::streambuf* saved = std::cin.rdbuf(feed.rdbuf());
    FormPair pair = load_form_pair("-");
    std::cin.rdbuf(saved);
    CHECK(pair.A == counterexample_system(9).A);
    CHECK(pair.B == counterexample_system(9).B);
}

TEST_CASE("malformed systems are precondition failures") {
    std::string path = write_temp_system(json{{"A", {1, 0}}, {"B", {0, 0}}}, "zerocol");
    RunConfig config;
    config.subcommand = "analyze";
    config.system_path = path;
    CHECK(dispatch(config).status == 2);

    config.system_path = "no_such_file.json";
    CHECK(dispatch(config).status == 2);

    std::ofstream bad("cli_test_bad.json");
    bad << "{not json";
    bad.close();
    config.system_path = "cli_test_bad.json";
    CHECK(dispatch(config).status == 2);
}
