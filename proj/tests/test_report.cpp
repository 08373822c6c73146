#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordlab/report.hpp"

#include <json.hpp>

using namespace wordlab;

TEST_CASE("config JSON round trip")
{
	ExperimentConfig cfg;
	cfg.command = "word-measure";
	cfg.set("group", "sl2");
	cfg.set_num("p", 13);
	cfg.set("word", "abAB");
	cfg.set_num("seed", 42);
	ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
	CHECK(back == cfg);
}

TEST_CASE("artifact header round trip")
{
	ExperimentConfig cfg;
	cfg.command = "kesten";
	cfg.set_num("r", 2);
	cfg.set_num("lmax", 30);
	cfg.set_num("trials", 1000000);
	cfg.set_num("seed", 7);
	std::string header = artifact_header(cfg);
	CHECK(parse_artifact_header(header) == cfg);
	CHECK_THROWS_AS(parse_artifact_header("p,raw,net"), std::invalid_argument);
}

TEST_CASE("json artifact carries version, rng id and payload")
{
	ExperimentConfig cfg;
	cfg.command = "zeta";
	auto j = nlohmann::json::parse(json_artifact(cfg, "{\"value\": 2.5}"));
	CHECK(j["schema_version"] == kSchemaVersion);
	CHECK(j["library_version"] == kLibraryVersion);
	CHECK(j["rng"] == "splitmix64-v1");
	CHECK(j["result"]["value"] == 2.5);
}

TEST_CASE("measure export lists classes with representatives")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 3);
	ClassData cd = conjugacy_classes(G);
	Measure tau = word_measure_exact(word_from_string("abAB"), G, cd);
	ExperimentConfig cfg;
	cfg.command = "word-measure";
	auto j = nlohmann::json::parse(measure_to_json(tau, cfg, "abAB"));
	CHECK(j["result"]["group"] == "sl2(F_3)");
	CHECK(j["result"]["mode"] == "class-indexed");
	CHECK(j["result"]["masses"].size() == cd.k());
	CHECK(j["result"]["provenance"] == "exact");
	double total = 0;
	for (auto &row : j["result"]["masses"])
		total += row["mass"].get<double>();
	CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("count series CSV")
{
	CountSeries s;
	s.rows.push_back({5, 10, 2, 8});
	s.rows.push_back({7, 14, 2, 12});
	ExperimentConfig cfg;
	cfg.command = "charvariety-count";
	cfg.set("word", "aBAbaBabAB");
	std::string csv = count_series_to_csv(s, cfg);
	CHECK(csv.find("p,raw,excluded,net\n5,10,2,8\n7,14,2,12\n") != std::string::npos);
	CHECK(parse_artifact_header(csv.substr(0, csv.find('\n'))) == cfg);
}
