// wordlab: exact word measures, character tables, Cayley spectra and
// character-variety point counts on small matrix groups, as reproducible
// command-line experiments. Every artifact embeds its full configuration.

#include "wordlab/cayley.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/fricke.hpp"
#include "wordlab/measures.hpp"
#include "wordlab/report.hpp"
#include "wordlab/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace wordlab;
using nlohmann::json;

namespace {

struct CommonOpts {
	std::string group = "sl2";
	u64 p = 5;
	std::string word;
	u64 seed = 1;
	int threads = 0;
	std::string out;
	u64 element_budget = 200000;
	u64 pair_budget = 400000000ull;
	u64 point_budget = 125000000ull;
	double time_limit = 1200.0; // soft wall-clock limit per command, seconds
	bool progress = false;
};

/// Soft wall-clock guard with optional per-step progress on stderr
/// (checkpoints never touch the artifact bytes).
struct Deadline {
	std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
	double limit;
	bool progress;

	explicit Deadline(const CommonOpts &o) : limit(o.time_limit), progress(o.progress) {}

	double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }

	void checkpoint(const std::string &what)
	{
		if (progress)
			std::cerr << "# " << what << " (" << static_cast<long>(elapsed()) << "s)\n";
		if (elapsed() > limit)
			throw BudgetExceeded("wall-clock soft limit of " + std::to_string(limit) + "s exceeded at " + what);
	}
};

CountSeries count_series_checked(const VarietySpec &spec, const std::vector<u64> &primes, const CommonOpts &o, Deadline &dl)
{
	CountSeries s;
	for (u64 p : primes)
	{
		s.rows.push_back(count_points(spec, p, o.point_budget, o.threads));
		dl.checkpoint("p=" + std::to_string(p));
	}
	return s;
}

std::pair<u64, u64> parse_prime_range(const std::string &text)
{
	auto colon = text.find(':');
	if (colon == std::string::npos)
		throw std::invalid_argument("--primes expects lo:hi");
	return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
}

void emit(const std::string &out_path, const std::string &content)
{
	if (out_path.empty())
		std::cout << content;
	else
		write_file(out_path, content);
}

struct GroupBundle {
	GroupTable G;
	ClassData cd;
	explicit GroupBundle(const CommonOpts &o)
	    : G(GroupTable::enumerate(kind_from_name(o.group), o.p, o.element_budget)), cd(conjugacy_classes(G)) {}
};

ExperimentConfig base_config(const std::string &command, const CommonOpts &o)
{
	ExperimentConfig cfg;
	cfg.command = command;
	cfg.set("group", o.group);
	cfg.set_num("p", o.p);
	if (!o.word.empty())
		cfg.set("word", o.word);
	cfg.set_num("seed", o.seed);
	cfg.set_num("threads", o.threads);
	cfg.set_num("element_budget", o.element_budget);
	cfg.set_num("pair_budget", o.pair_budget);
	cfg.set_num("point_budget", o.point_budget);
	return cfg;
}

std::vector<Mat> random_generating_pair(const GroupTable &G, SplitMix64 &rng)
{
	for (;;)
	{
		std::vector<Mat> pair{G.element(static_cast<u32>(rng.below(G.order()))), G.element(static_cast<u32>(rng.below(G.order())))};
		if (is_generating(pair, G))
			return pair;
	}
}

u64 generators_hash(const std::vector<Mat> &gens)
{
	u64 h = 0x9e3779b97f4a7c15ull;
	for (const Mat &m : gens)
	{
		u64 k = 0;
		for (int i = 0; i < m.n * m.n; ++i)
			k = k * 1315423911ull + m.a[static_cast<size_t>(i)];
		h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
	}
	return h;
}

int cmd_word_measure(const CommonOpts &o, u64 mc_samples)
{
	GroupBundle gb(o);
	Word w = word_from_string(o.word);
	ExperimentConfig cfg = base_config("word-measure", o);
	cfg.set_num("mc_samples", mc_samples);
	Measure tau = mc_samples > 0 ? word_measure_mc(w, gb.G, gb.cd, mc_samples, o.seed, o.threads)
	                             : word_measure_exact(w, gb.G, gb.cd, o.pair_budget, o.threads);
	emit(o.out, measure_to_json(tau, cfg, o.word));
	return 0;
}

int cmd_mixing_time(const CommonOpts &o, const std::string &q, int t_max, double threshold)
{
	GroupBundle gb(o);
	ClassAlgebra alg(gb.G, gb.cd, o.threads);
	Word w = word_from_string(o.word);
	Measure tau = word_measure_exact(w, gb.G, gb.cd, o.pair_budget, o.threads);
	auto res = mixing_time(tau, lq_from_name(q), t_max, alg, threshold);
	ExperimentConfig cfg = base_config("mixing-time", o);
	cfg.set("q", q);
	cfg.set_num("t_max", t_max);
	cfg.set_num("threshold", threshold);
	json payload;
	payload["reached"] = res.t.has_value();
	if (res.t)
		payload["t"] = *res.t;
	payload["last_distance"] = res.last_distance;
	emit(o.out, json_artifact(cfg, payload.dump()));
	if (res.t)
		std::cout << *res.t << "\n";
	else
		std::cout << "not-reached(t_max=" << t_max << ", last=" << res.last_distance << ")\n";
	return 0;
}

int cmd_char_table(const CommonOpts &o)
{
	GroupBundle gb(o);
	ClassAlgebra alg(gb.G, gb.cd, o.threads);
	CharTable ct = character_table(gb.cd, gb.G, alg);
	emit(o.out, json_artifact(base_config("char-table", o), char_table_to_json(ct)));
	return 0;
}

int cmd_zeta(const CommonOpts &o, double s)
{
	GroupBundle gb(o);
	ClassAlgebra alg(gb.G, gb.cd, o.threads);
	CharTable ct = character_table(gb.cd, gb.G, alg);
	ExperimentConfig cfg = base_config("zeta", o);
	cfg.set_num("s", s);
	json payload;
	payload["s"] = s;
	payload["value"] = zeta_value(ct, s);
	payload["k"] = ct.k;
	emit(o.out, json_artifact(cfg, payload.dump()));
	std::cout << zeta_value(ct, s) << "\n";
	return 0;
}

int cmd_fiber_count(const CommonOpts &o, const std::string &target)
{
	GroupBundle gb(o);
	Word w = word_from_string(o.word);
	Measure tau = word_measure_exact(w, gb.G, gb.cd, o.pair_budget, o.threads);
	u32 cls = target == "identity" ? gb.cd.identity_class : generic_semisimple_class(gb.G, gb.cd);
	FiberCount fc = fiber_count(tau, gb.G.element(gb.cd.reps[cls]));
	ExperimentConfig cfg = base_config("fiber-count", o);
	cfg.set("target", target);
	json payload;
	payload["class"] = fc.class_id;
	payload["representative"] = mat_to_string(gb.G.element(gb.cd.reps[cls]));
	payload["count"] = u128_to_string(fc.count);
	payload["lang_weil_ratio"] = fc.ratio;
	emit(o.out, json_artifact(cfg, payload.dump()));
	return 0;
}

int cmd_centralizer_tail(const CommonOpts &o, double delta)
{
	GroupBundle gb(o);
	Word w = word_from_string(o.word);
	Measure tau = word_measure_exact(w, gb.G, gb.cd, o.pair_budget, o.threads);
	ExperimentConfig cfg = base_config("centralizer-tail", o);
	cfg.set_num("delta", delta);
	json payload;
	payload["delta"] = delta;
	payload["probability"] = centralizer_tail(tau, delta);
	emit(o.out, json_artifact(cfg, payload.dump()));
	std::cout << centralizer_tail(tau, delta) << "\n";
	return 0;
}

int cmd_spectral_decay(const CommonOpts &o)
{
	GroupBundle gb(o);
	ClassAlgebra alg(gb.G, gb.cd, o.threads);
	CharTable ct = character_table(gb.cd, gb.G, alg);
	Word w = word_from_string(o.word);
	auto prof = spectral_decay_profile(w, gb.G, gb.cd, ct, o.pair_budget, o.threads);
	json rows = json::array();
	for (const auto &row : prof.rows)
	{
		json r;
		r["degree"] = row.degree;
		r["abs_coeff"] = row.abs_coeff;
		r["ratio"] = row.ratio;
		r["exponent"] = row.exponent;
		r["below_tol"] = row.below_tol;
		rows.push_back(std::move(r));
	}
	json payload;
	payload["rows"] = std::move(rows);
	payload["epsilon_hat"] = prof.epsilon_hat;
	payload["tol"] = ct.tol;
	emit(o.out, json_artifact(base_config("spectral-decay", o), payload.dump()));
	return 0;
}

int cmd_cayley_gap(const CommonOpts &o, int pairs)
{
	GroupBundle gb(o);
	SplitMix64 rng(o.seed);
	std::vector<CayleyCsvRow> rows;
	for (int i = 0; i < pairs; ++i)
	{
		std::vector<Mat> gens = random_generating_pair(gb.G, rng);
		CayleyGraph g = CayleyGraph::from_group(gb.G, gens);
		auto rep = check_gap_diameter(g);
		rows.push_back({o.p, generators_hash(gens), gb.G.order(), rep.gamma, rep.lambda1, rep.slack});
	}
	ExperimentConfig cfg = base_config("cayley-gap", o);
	cfg.set_num("pairs", pairs);
	emit(o.out, cayley_rows_to_csv(rows, cfg));
	return 0;
}

int cmd_walk_bound(const CommonOpts &o, int steps)
{
	GroupBundle gb(o);
	SplitMix64 rng(o.seed);
	std::vector<Mat> gens = random_generating_pair(gb.G, rng);
	CayleyGraph g = CayleyGraph::from_group(gb.G, gens);
	double l1 = lambda1(g);
	auto rep = walk_deviation(g, steps, l1);
	ExperimentConfig cfg = base_config("walk-bound", o);
	cfg.set_num("steps", steps);
	json payload;
	payload["lambda1"] = l1;
	payload["deviation"] = rep.deviation;
	payload["bound"] = rep.bound;
	payload["ok"] = rep.ok;
	payload["lambda_max"] = rep.lambda_max;
	payload["two_sided_decay"] = rep.two_sided_decay;
	payload["generators_hash"] = generators_hash(gens);
	emit(o.out, json_artifact(cfg, payload.dump()));
	return rep.ok ? 0 : 1;
}

int cmd_kesten(const CommonOpts &o, int r, int lmax, u64 trials)
{
	auto res = kesten_return(r, lmax, trials, o.seed, o.threads);
	ExperimentConfig cfg = base_config("kesten", o);
	cfg.set_num("r", r);
	cfg.set_num("lmax", lmax);
	cfg.set_num("trials", trials);
	std::ostringstream csv;
	csv << artifact_header(cfg) << "\n";
	csv << "l,empirical,reference\n";
	csv.precision(12);
	for (size_t i = 0; i < res.lengths.size(); ++i)
		csv << res.lengths[i] << "," << res.empirical[i] << "," << res.reference[i] << "\n";
	json summary;
	summary["fitted_rate"] = res.fitted_rate;
	summary["raw_rate"] = res.raw_rate;
	summary["reference_rate"] = res.reference_rate;
	csv << "# summary " << summary.dump() << "\n";
	emit(o.out, csv.str());
	std::cout << "fitted " << res.fitted_rate << " reference " << res.reference_rate << "\n";
	return 0;
}

int cmd_trace_poly(const CommonOpts &o)
{
	Word w = word_from_string(o.word);
	TracePoly P = trace_poly(w); // validates against the SL2 oracle
	json payload;
	payload["word"] = o.word;
	payload["polynomial"] = P.to_string();
	payload["total_degree"] = P.total_degree();
	payload["terms"] = P.term_count();
	payload["validated"] = true;
	json terms = json::array();
	for (const auto &[k, c] : P.terms())
		terms.push_back({k[0], k[1], k[2], c});
	payload["monomials"] = std::move(terms);
	emit(o.out, json_artifact(base_config("trace-poly", o), payload.dump()));
	std::cout << P.to_string() << "\n";
	return 0;
}

int cmd_charvariety_count(const CommonOpts &o, const std::string &primes_text)
{
	auto [lo, hi] = parse_prime_range(primes_text);
	Deadline dl(o);
	VarietySpec spec = variety_spec(word_from_string(o.word));
	CountSeries series = count_series_checked(spec, primes_in(lo, hi), o, dl);
	ExperimentConfig cfg = base_config("charvariety-count", o);
	cfg.set("primes", primes_text);
	emit(o.out, count_series_to_csv(series, cfg));
	return 0;
}

int cmd_charvariety_dim(const CommonOpts &o, const std::string &primes_text)
{
	auto [lo, hi] = parse_prime_range(primes_text);
	Deadline dl(o);
	VarietySpec spec = variety_spec(word_from_string(o.word));
	std::vector<u64> primes = primes_in(lo, hi);
	CountSeries series = count_series_checked(spec, primes, o, dl);
	DimEstimate est = estimate_dim(series);
	ExperimentConfig cfg = base_config("charvariety-dim", o);
	cfg.set("primes", primes_text);
	json payload;
	payload["empty"] = est.empty;
	payload["dim"] = est.empty ? json("empty") : json(est.dim);
	payload["slope"] = est.slope;
	payload["support"] = est.support;
	payload["window"] = {{"lo", lo}, {"hi", hi}, {"primes", primes.size()}};
	payload["discriminant"] = fricke_discriminant().to_string();
	if (!est.empty && primes.size() >= 25)
		payload["component_estimate"] = estimate_components(series, est.dim);
	emit(o.out, json_artifact(cfg, payload.dump()));
	if (est.empty)
		std::cout << "empty\n";
	else
		std::cout << est.dim << "\n";
	return 0;
}

VarietySpec diagnostic_spec(const std::string &name)
{
	auto sq = [](int v) { return TracePoly::variable(v) * TracePoly::variable(v); };
	VarietySpec spec;
	spec.nvars = 1;
	spec.strike_coordinate_box = false;
	spec.label = name;
	if (name == "x2+1")
		spec.equations.push_back(sq(0) + TracePoly::constant(1));
	else if (name == "x2-2")
		spec.equations.push_back(sq(0) - TracePoly::constant(2));
	else if (name == "product")
		spec.equations.push_back((sq(0) + TracePoly::constant(1)) * (sq(0) - TracePoly::constant(2)));
	else if (name == "x2+y2")
	{
		spec.equations.push_back(sq(0) + sq(1));
		spec.nvars = 2;
	}
	else
		throw std::invalid_argument("unknown diagnostic scheme " + name);
	return spec;
}

int cmd_chebotarev_avg(const CommonOpts &o, const std::string &primes_text, const std::string &diagnostic)
{
	if (o.word.empty() && diagnostic.empty())
	{
		std::cerr << "chebotarev-avg needs --word or --diagnostic\n";
		return 64;
	}
	auto [lo, hi] = parse_prime_range(primes_text);
	Deadline dl(o);
	VarietySpec spec = diagnostic.empty() ? variety_spec(word_from_string(o.word)) : diagnostic_spec(diagnostic);
	std::vector<u64> primes = primes_in(lo, hi);
	CountSeries series = count_series_checked(spec, primes, o, dl);
	DimEstimate est = estimate_dim(series);
	ExperimentConfig cfg = base_config("chebotarev-avg", o);
	cfg.set("primes", primes_text);
	if (!diagnostic.empty())
		cfg.set("diagnostic", diagnostic);
	json payload;
	payload["empty"] = est.empty;
	payload["dim"] = est.empty ? 0 : est.dim;
	payload["window"] = {{"lo", lo}, {"hi", hi}, {"primes", primes.size()}};
	double estimate = estimate_components(series, est.empty ? 0 : est.dim);
	payload["component_estimate"] = estimate;
	emit(o.out, json_artifact(cfg, payload.dump()));
	std::cout << estimate << "\n";
	return 0;
}

int cmd_random_relator_survey(const CommonOpts &o, int samples, int lmin, int lmax, const std::string &primes_text)
{
	auto [lo, hi] = parse_prime_range(primes_text);
	Deadline dl(o);
	std::vector<u64> primes = primes_in(lo, hi);
	SplitMix64 rng(o.seed);
	int finite = 0, with_estimate = 0;
	double component_sum = 0;
	json words = json::array();
	std::map<u64, u64> net_histogram;
	for (int i = 0; i < samples; ++i)
	{
		int len = lmin + static_cast<int>(rng.below(static_cast<u64>(lmax - lmin + 1)));
		Word w = sample_word(SampleModel::reduced, 2, len, rng);
		VarietySpec spec = variety_spec(w);
		CountSeries series = count_series(spec, primes, o.point_budget, o.threads);
		dl.checkpoint("relator " + word_to_string(w));
		DimEstimate est = estimate_dim(series);
		u64 maxnet = 0;
		for (const CountRow &r : series.rows)
		{
			maxnet = std::max(maxnet, r.net);
			++net_histogram[r.net];
		}
		finite += (est.empty || est.dim == 0) ? 1 : 0;
		json rec;
		rec["word"] = word_to_string(w);
		rec["length"] = w.length();
		rec["dim"] = est.empty ? json("empty") : json(est.dim);
		rec["max_net"] = maxnet;
		if (!est.empty && primes.size() >= 25)
		{
			double comp = estimate_components(series, est.dim);
			rec["component_estimate"] = comp;
			component_sum += comp;
			++with_estimate;
		}
		words.push_back(std::move(rec));
	}
	ExperimentConfig cfg = base_config("random-relator-survey", o);
	cfg.set_num("samples", samples);
	cfg.set_num("lmin", lmin);
	cfg.set_num("lmax", lmax);
	cfg.set("primes", primes_text);
	json payload;
	payload["finite_fraction"] = static_cast<double>(finite) / samples;
	payload["mean_component_estimate"] = with_estimate ? component_sum / with_estimate : 0.0;
	json hist = json::array();
	for (auto &[net, count] : net_histogram)
		hist.push_back({net, count});
	payload["net_count_histogram"] = std::move(hist);
	payload["words"] = std::move(words);
	emit(o.out, json_artifact(cfg, payload.dump()));
	std::cout << "finite_fraction " << static_cast<double>(finite) / samples << "\n";
	return 0;
}

int cmd_pgl_contrast(const CommonOpts &o, const std::string &primes_text, int t_max)
{
	auto [lo, hi] = parse_prime_range(primes_text);
	Deadline dl(o);
	std::vector<u64> primes = primes_in(lo, hi);
	ExperimentConfig cfg = base_config("pgl-contrast", o);
	cfg.set("primes", primes_text);
	cfg.set_num("t_max", t_max);
	std::ostringstream csv;
	csv << artifact_header(cfg) << "\n";
	csv << "group,p,t,max_abs_ratio_minus_1,reference_5_over_sqrt_p\n";
	csv.precision(12);
	Word com = word_from_string("abAB");
	for (u64 p : primes)
	{
		for (const char *kind : {"sl2", "pgl2"})
		{
			CommonOpts go = o;
			go.group = kind;
			go.p = p;
			GroupBundle gb(go);
			ClassAlgebra alg(gb.G, gb.cd, o.threads);
			Measure tau = word_measure_exact(com, gb.G, gb.cd, o.pair_budget, o.threads);
			// sanity row at t = 1: the identity fiber alone is already
			// k(G) p^3 / |G|, bounded away from 1
			FiberCount fe = fiber_count(tau, gb.G.element(gb.G.identity()));
			csv << kind << "," << p << ",1," << std::abs(fe.ratio - 1.0) << "," << 5.0 / std::sqrt(static_cast<double>(p)) << "\n";
			Measure power = tau;
			for (int t = 2; t <= t_max; ++t)
			{
				power = convolve_measures(power, tau, alg);
				double maxdev = 0;
				for (u32 c = 0; c < gb.cd.k(); ++c)
				{
					FiberCount fc = fiber_count(power, gb.G.element(gb.cd.reps[c]));
					maxdev = std::max(maxdev, std::abs(fc.ratio - 1.0));
				}
				csv << kind << "," << p << "," << t << "," << maxdev << "," << 5.0 / std::sqrt(static_cast<double>(p)) << "\n";
			}
			dl.checkpoint(std::string(kind) + " p=" + std::to_string(p));
		}
	}
	emit(o.out, csv.str());
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"wordlab: word measures, spectra and character varieties on small matrix groups"};
	app.require_subcommand(1);

	CommonOpts o;
	auto add_common = [&](CLI::App *sub, bool needs_group = true, bool needs_word = false) {
		if (needs_group)
		{
			sub->add_option("--group", o.group, "group kind: sl2, gl2, pgl2, sl3")->capture_default_str();
			sub->add_option("--p", o.p, "prime modulus")->capture_default_str();
		}
		if (needs_word)
			sub->add_option("--word", o.word, "word in letters a-d, uppercase = inverse")->required();
		sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
		sub->add_option("--threads", o.threads, "worker pool size (0 = auto, or WORDLAB_THREADS)");
		sub->add_option("--out", o.out, "artifact output path (default: stdout)");
		sub->add_option("--element-budget", o.element_budget, "group enumeration budget")->capture_default_str();
		sub->add_option("--pair-budget", o.pair_budget, "word-map evaluation budget")->capture_default_str();
		sub->add_option("--point-budget", o.point_budget, "point-count evaluation budget")->capture_default_str();
		sub->add_option("--time-limit", o.time_limit, "soft wall-clock limit in seconds")->capture_default_str();
		sub->add_flag("--progress", o.progress, "print progress checkpoints to stderr");
	};

	u64 mc_samples = 0;
	auto *wm = app.add_subcommand("word-measure", "exact or Monte-Carlo word measure");
	add_common(wm, true, true);
	wm->add_option("--mc", mc_samples, "Monte-Carlo sample count (0 = exact)");

	std::string q = "2";
	int t_max = 8;
	double threshold = 0.5;
	auto *mt = app.add_subcommand("mixing-time", "least t with ||tau^{*t} - uniform||_q below the threshold");
	add_common(mt, true, true);
	mt->add_option("--q", q, "norm: 1, 2 or inf")->capture_default_str();
	mt->add_option("--t-max", t_max, "largest convolution power tried")->capture_default_str();
	mt->add_option("--threshold", threshold, "mixing threshold")->capture_default_str();

	auto *ct = app.add_subcommand("char-table", "numerical character table (JSON)");
	add_common(ct);

	double s_value = 2.0;
	auto *zt = app.add_subcommand("zeta", "representation zeta function value");
	add_common(zt);
	zt->add_option("--s", s_value, "argument of zeta_G")->capture_default_str();

	std::string target = "generic";
	auto *fc = app.add_subcommand("fiber-count", "exact fiber size and Lang-Weil ratio");
	add_common(fc, true, true);
	fc->add_option("--target", target, "fiber point: generic or identity")->capture_default_str();

	double delta = 0.25;
	auto *tl = app.add_subcommand("centralizer-tail", "Pr[|C_G(w(g))| > |G|^delta]");
	add_common(tl, true, true);
	tl->add_option("--delta", delta, "centralizer exponent")->capture_default_str();

	auto *sd = app.add_subcommand("spectral-decay", "per-irreducible Fourier decay of tau_w");
	add_common(sd, true, true);

	int pairs = 5;
	auto *cg = app.add_subcommand("cayley-gap", "lambda1/diameter table over random generating pairs");
	add_common(cg);
	cg->add_option("--pairs", pairs, "number of random generating pairs")->capture_default_str();

	int steps = 40;
	auto *wb = app.add_subcommand("walk-bound", "walk deviation against exp(-lambda1 l/2r)");
	add_common(wb);
	wb->add_option("--steps", steps, "walk length")->capture_default_str();

	int kr = 2, lmax = 30;
	u64 trials = 1000000;
	auto *ks = app.add_subcommand("kesten", "free-group return probabilities and decay fit");
	add_common(ks, false);
	ks->add_option("--r", kr, "free group rank")->capture_default_str();
	ks->add_option("--lmax", lmax, "largest (even) word length")->capture_default_str();
	ks->add_option("--trials", trials, "samples per length")->capture_default_str();

	auto *tp = app.add_subcommand("trace-poly", "Fricke word polynomial P_w(x,y,z)");
	add_common(tp, false, true);

	std::string primes_text = "5:97";
	auto *cc = app.add_subcommand("charvariety-count", "point counts of the principal character variety");
	add_common(cc, false, true);
	cc->add_option("--primes", primes_text, "prime window lo:hi")->capture_default_str();

	auto *cdm = app.add_subcommand("charvariety-dim", "dimension estimate from the count series");
	add_common(cdm, false, true);
	cdm->add_option("--primes", primes_text, "prime window lo:hi")->capture_default_str();

	std::string diagnostic;
	auto *ca = app.add_subcommand("chebotarev-avg", "component-count estimator over a prime window");
	add_common(ca, false, false);
	ca->add_option("--word", o.word, "word in letters a-d (character variety mode)");
	ca->add_option("--diagnostic", diagnostic, "diagnostic scheme: x2+1, x2-2, product, x2+y2");
	ca->add_option("--primes", primes_text, "prime window lo:hi")->capture_default_str();

	int survey_n = 20, survey_lmin = 8, survey_lmax = 24;
	auto *rs = app.add_subcommand("random-relator-survey", "dim/count pipeline over random one-relator groups");
	add_common(rs, false);
	rs->add_option("--n", survey_n, "number of sampled relators")->capture_default_str();
	rs->add_option("--lmin", survey_lmin, "shortest relator length")->capture_default_str();
	rs->add_option("--lmax", survey_lmax, "longest relator length")->capture_default_str();
	rs->add_option("--primes", primes_text, "prime window lo:hi")->capture_default_str();

	int contrast_t = 2;
	auto *pc = app.add_subcommand("pgl-contrast", "commutator convolution fibers: SL2 vs PGL2");
	add_common(pc, false);
	pc->add_option("--primes", primes_text, "prime window lo:hi")->capture_default_str();
	pc->add_option("--t", contrast_t, "largest convolution power (>= 2)")->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		std::cerr << e.what() << "\n";
		return 64;
	}

	try
	{
		if (wm->parsed())
			return cmd_word_measure(o, mc_samples);
		if (mt->parsed())
			return cmd_mixing_time(o, q, t_max, threshold);
		if (ct->parsed())
			return cmd_char_table(o);
		if (zt->parsed())
			return cmd_zeta(o, s_value);
		if (fc->parsed())
			return cmd_fiber_count(o, target);
		if (tl->parsed())
			return cmd_centralizer_tail(o, delta);
		if (sd->parsed())
			return cmd_spectral_decay(o);
		if (cg->parsed())
			return cmd_cayley_gap(o, pairs);
		if (wb->parsed())
			return cmd_walk_bound(o, steps);
		if (ks->parsed())
			return cmd_kesten(o, kr, lmax, trials);
		if (tp->parsed())
			return cmd_trace_poly(o);
		if (cc->parsed())
			return cmd_charvariety_count(o, primes_text);
		if (cdm->parsed())
			return cmd_charvariety_dim(o, primes_text);
		if (ca->parsed())
			return cmd_chebotarev_avg(o, primes_text, diagnostic);
		if (rs->parsed())
			return cmd_random_relator_survey(o, survey_n, survey_lmin, survey_lmax, primes_text);
		if (pc->parsed())
			return cmd_pgl_contrast(o, primes_text, contrast_t);
	}
	catch (const BudgetExceeded &e)
	{
		std::cerr << "budget exceeded: " << e.what() << "\n";
		return 2;
	}
	catch (const OracleFailure &e)
	{
		std::cerr << "oracle validation failure: " << e.what() << "\n";
		return 3;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 64;
}
