#include "wordlab/report.hpp"

#include "wordlab/rng.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wordlab {

using nlohmann::json;

std::string ExperimentConfig::to_json() const
{
	json j;
	j["command"] = command;
	j["params"] = params;
	return j.dump();
}

ExperimentConfig ExperimentConfig::from_json(const std::string &text)
{
	json j = json::parse(text);
	ExperimentConfig cfg;
	cfg.command = j.at("command").get<std::string>();
	for (auto &[k, v] : j.at("params").items())
		cfg.params[k] = v.get<std::string>();
	return cfg;
}

namespace {

json header_json(const ExperimentConfig &cfg)
{
	json h;
	h["schema_version"] = kSchemaVersion;
	h["library_version"] = kLibraryVersion;
	h["rng"] = kRngAlgorithm;
	h["config"] = json::parse(cfg.to_json());
	return h;
}

} // namespace

std::string artifact_header(const ExperimentConfig &cfg)
{
	return "# wordlab " + header_json(cfg).dump();
}

ExperimentConfig parse_artifact_header(const std::string &line)
{
	const std::string prefix = "# wordlab ";
	if (line.rfind(prefix, 0) != 0)
		throw std::invalid_argument("not a wordlab artifact header");
	json h = json::parse(line.substr(prefix.size()));
	return ExperimentConfig::from_json(h.at("config").dump());
}

std::string json_artifact(const ExperimentConfig &cfg, const std::string &payload_json)
{
	json j = header_json(cfg);
	j["result"] = json::parse(payload_json);
	return j.dump(2) + "\n";
}

std::string measure_to_json(const Measure &mu, const ExperimentConfig &cfg, const std::string &word_text)
{
	const GroupTable &G = mu.group();
	const ClassData &cd = mu.classes();
	json payload;
	payload["group"] = std::string(kind_name(G.kind())) + "(F_" + std::to_string(G.p()) + ")";
	payload["group_order"] = G.order();
	payload["word"] = word_text;
	payload["mode"] = mu.mode() == Measure::Mode::class_indexed ? "class-indexed" : "element-indexed";
	payload["provenance"] = mu.provenance_note();
	json masses = json::array();
	for (u32 c = 0; c < mu.cells(); ++c)
	{
		json row;
		row["class"] = c;
		row["representative"] = mat_to_string(G.element(cd.reps[c]));
		row["size"] = cd.sizes[c];
		row["mass"] = mu.mass(c);
		if (mu.exact())
		{
			row["count"] = u128_to_string(mu.count(c));
			row["denominator_exponent"] = mu.denom_exp();
		}
		masses.push_back(std::move(row));
	}
	payload["masses"] = std::move(masses);
	return json_artifact(cfg, payload.dump());
}

std::string count_series_to_csv(const CountSeries &series, const ExperimentConfig &cfg)
{
	std::ostringstream os;
	os << artifact_header(cfg) << "\n";
	os << "p,raw,excluded,net\n";
	for (const CountRow &r : series.rows)
		os << r.p << "," << r.raw << "," << r.excluded << "," << r.net << "\n";
	return os.str();
}

std::string cayley_rows_to_csv(const std::vector<CayleyCsvRow> &rows, const ExperimentConfig &cfg)
{
	std::ostringstream os;
	os << artifact_header(cfg) << "\n";
	os << "p,generators_hash,order,gamma,lambda1,bound_slack\n";
	os.precision(12);
	for (const CayleyCsvRow &r : rows)
		os << r.p << "," << r.generators_hash << "," << r.order << "," << r.gamma << "," << r.lambda1 << "," << r.bound_slack << "\n";
	return os.str();
}

void write_file(const std::string &path, const std::string &content)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw std::runtime_error("cannot open " + path + " for writing");
	out << content;
	if (!out)
		throw std::runtime_error("write to " + path + " failed");
}

} // namespace wordlab
