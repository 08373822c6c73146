#pragma once

#include "wordlab/cayley.hpp"
#include "wordlab/fricke.hpp"
#include "wordlab/measures.hpp"

#include <map>
#include <string>

namespace wordlab {

inline constexpr const char *kLibraryVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Full configuration of one experiment run, embedded in every artifact
/// header and required to round-trip through from_json.
struct ExperimentConfig {
	std::string command;
	std::map<std::string, std::string> params; // ordered, deterministic

	void set(const std::string &key, const std::string &value) { params[key] = value; }
	template <typename T> void set_num(const std::string &key, T v) { params[key] = std::to_string(v); }

	std::string to_json() const;
	static ExperimentConfig from_json(const std::string &text);
	bool operator==(const ExperimentConfig &o) const = default;
};

/// Header line placed at the top of CSV artifacts:
///   # wordlab {"schema_version":...,"library_version":...,"rng":...,"config":{...}}
std::string artifact_header(const ExperimentConfig &cfg);

/// Parses the header line back into its config (round-trip check).
ExperimentConfig parse_artifact_header(const std::string &line);

/// JSON artifact skeleton with the standard header fields filled in.
std::string json_artifact(const ExperimentConfig &cfg, const std::string &payload_json);

/// Measure export: group, word, mode, per-class masses with representative
/// matrices, provenance.
std::string measure_to_json(const Measure &mu, const ExperimentConfig &cfg, const std::string &word_text);

/// CountSeries as CSV rows (p, raw, excluded, net) under the config header.
std::string count_series_to_csv(const CountSeries &series, const ExperimentConfig &cfg);

/// Cayley experiment CSV: (p, generators_hash, order, gamma, lambda1,
/// bound_slack) per row.
struct CayleyCsvRow {
	u64 p;
	u64 generators_hash;
	u64 order;
	int gamma;
	double lambda1;
	double bound_slack;
};
std::string cayley_rows_to_csv(const std::vector<CayleyCsvRow> &rows, const ExperimentConfig &cfg);

void write_file(const std::string &path, const std::string &content);

} // namespace wordlab
