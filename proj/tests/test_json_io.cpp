#include "support.hpp"
#include "usctec/instances.hpp"
#include "usctec/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace usctec;
using namespace usctec::testing;
using usctec::io::json;

namespace {

std::string pointer_of(const std::string& text) {
    try {
        io::parse_system(io::parse_document(text));
    } catch (const io::ConfigError& e) {
        return e.pointer();
    }
    return "<none>";
}

}  // namespace

TEST_CASE("system config round trip") {
    const auto cfg = io::parse_system(io::parse_document(R"({
        "N": 6, "L": 2, "S": 1,
        "e": ["3/5", "0.6", "4/5", "4/5", 1, "1"],
        "realizations": [{"s": [3, 3, 4, 4, 5, 5], "prob": "1/2"}, {"s": ["3", 1, 2, 2, 3, 5]}],
        "field": {"prime": 2147483647},
        "matrices": {"q": 32, "v": 4, "r": 20, "seed": 5}
    })"));
    CHECK(cfg.params.machines == 6);
    CHECK(cfg.params.replication() == 3);
    CHECK(cfg.params.storage_caps == V({"3/5", "3/5", "4/5", "4/5", "1", "1"}));
    CHECK(cfg.distribution.realizations[1].probability == R("1/2"));
    CHECK(cfg.matrices.rows == 32);
    CHECK(cfg.matrices.seed == 5);
    CHECK_NOTHROW(make_model(cfg.params, cfg.distribution));
}

TEST_CASE("config defaults") {
    const auto cfg = io::parse_system(io::parse_document(
        R"({"N": 3, "L": 1, "S": 1, "realizations": [{"s": [1, 1, 1]}, {"s": [1, 2, 1]}, {"s": [2, 1, 1]}]})"));
    CHECK(cfg.params.storage_caps == ints({1, 1, 1}));
    for (const auto& wr : cfg.distribution.realizations) CHECK(wr.probability == R("1/3"));
    CHECK(cfg.prime == PrimeField::kDefaultPrime);
}

TEST_CASE("config errors point at the offending field") {
    CHECK(pointer_of(R"({"N": 3, "S": 1, "realizations": []})") == "/L");
    CHECK(pointer_of(R"({"N": 3, "L": 1, "S": 1, "e": [1, "x", 1], "realizations": []})") == "/e/1");
    CHECK(pointer_of(R"({"N": -3, "L": 1, "S": 1, "realizations": []})") == "/N");
    CHECK(pointer_of(R"({"N": 3, "L": 1, "S": 1, "realizations": [{"s": [1, 1, 1]}, {"s": 4}]})") ==
          "/realizations/1/s");
    CHECK(pointer_of(R"({"N": 3, "L": 1, "S": 1, "realizations": [{"s": [1, 1, 1], "prob": true}]})") ==
          "/realizations/0/prob");
    CHECK(pointer_of(R"({"N": 3, "L": 1, "S": 1, "realizations": [], "field": {"prime": "7"}})") == "/field/prime");
    CHECK(pointer_of(R"([1, 2])") == "");
    CHECK_THROWS_AS(io::parse_document("{\"N\": 3,"), io::ConfigError);
}

TEST_CASE("load and division problems") {
    const auto lp = io::parse_load_problem(io::parse_document(R"({"l": "6/5", "s": [0, 1, 2, 2, 3, 5], "sigma": ["2/5", "2/5", "2/5", "2/5", "2/5", "2/5"]})"));
    CHECK(lp.total == R("6/5"));
    const auto sol = io::to_json(solve_lp(lp));
    CHECK(sol["c"] == "1/10");
    CHECK(sol["theta"][5] == "2/5");
    CHECK(sol["theta"][0] == "0/1");

    const auto dp = io::parse_division_problem(io::parse_document(R"({"theta": ["3/8", "3/8", "1/2", "1/2", "5/8", "5/8"], "k": 3})"));
    CHECK(dp.mass == Rational(1));
    const auto div = io::to_json(divide(dp), 6);
    CHECK(div["gamma"][0] == "3/8");
    CHECK(div["supports"][0] == json::array({1, 5, 6}));
    CHECK(div["mu"][0][0] == "1/1");

    CHECK_THROWS_AS(io::parse_load_problem(io::parse_document(R"({"l": 1, "s": [1, 1], "sigma": [1]})")), io::ConfigError);
}

TEST_CASE("serialized results use rational strings and one-based machines") {
    const auto res = place(instances::constrained_pair());
    const auto j = io::to_json(res);
    CHECK(j["storage"][0]["machine"] == 1);
    CHECK(j["storage"][0]["measure"] == "3/5");
    CHECK(j["storage"][0]["intervals"][0] == json::array({"0/1", "3/5"}));
    CHECK(j["storage_size"] == "1151/280");
    CHECK(j["expected_time"] == "1301/5600");
    CHECK(j["disabled"] == json::array({1}));
    CHECK(j["passes"][0]["overflow"]["location"] == "3/5");
    CHECK(j["passes"][0]["truncated_gamma"][0] == json::array({"3/8", "9/40"}));
    CHECK(j["passes"][1]["overflow"].is_null());
    // round trip of every rational in the document
    CHECK(Rational::parse(j["expected_time"].get<std::string>()) == res.expected_time);

    const auto asn = build_assignment(V({"1/2", "1/2", "1", "1/2", "1/2"}), 3);
    const auto cols = realize_columns(asn, 20, 2);
    const auto a = io::to_json(asn, &cols);
    CHECK(a["F"] == 2);
    CHECK(a["groups"][0]["columns"]["first"] == 1);
    CHECK(a["groups"][0]["columns"]["last"] == 5);
    CHECK(a["groups"][1]["columns"]["first"] == 6);
}

TEST_CASE("matrix csv") {
    const std::string path = "usctec_test_matrix.csv";
    {
        std::ofstream out(path);
        out << "1,2,-1\n\n4, 5 ,6\n";
    }
    const PrimeField f(13);
    const auto m = io::read_matrix_csv(path, f);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 2) == 12);
    CHECK(m.at(1, 1) == 5);
    {
        std::ofstream out(path);
        out << "1,2\n3\n";
    }
    CHECK_THROWS_AS(io::read_matrix_csv(path, f), InputError);
    {
        std::ofstream out(path);
        out << "1,x\n";
    }
    CHECK_THROWS_AS(io::read_matrix_csv(path, f), InputError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_matrix_csv(path, f), InputError);
}
