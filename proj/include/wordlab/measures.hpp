#pragma once

#include "wordlab/freeword.hpp"
#include "wordlab/matgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordlab {

enum class Lq { L1, L2, Linf };
Lq lq_from_name(const std::string &name);
const char *lq_name(Lq q);

/// Probability distribution on an enumerated group. Word measures are
/// conjugation invariant and stored class-indexed with exact per-element
/// integer counts over the denominator |G|^denom_exp; Monte-Carlo measures
/// carry per-element probability estimates instead.
class Measure {
  public:
	enum class Mode { class_indexed, element_indexed };
	enum class Provenance { exact, montecarlo, floating };

	static Measure uniform(const GroupTable &G, const ClassData &cd);
	static Measure dirac_identity(const GroupTable &G, const ClassData &cd);
	/// Exact class-indexed measure from per-element counts and denominator
	/// |G|^denom_exp. Checks that total mass is exactly 1.
	static Measure exact_classwise(const GroupTable &G, const ClassData &cd, std::vector<u128> per_element_counts, int denom_exp);
	/// Exact element-indexed measure (one numerator per group element).
	static Measure exact_elementwise(const GroupTable &G, const ClassData &cd, std::vector<u128> per_element_counts, int denom_exp);

	Mode mode() const { return mode_; }
	Provenance provenance() const { return prov_; }
	bool exact() const { return prov_ == Provenance::exact; }
	const GroupTable &group() const { return *group_; }
	const ClassData &classes() const { return *classes_; }
	u32 cells() const { return static_cast<u32>(prob_.size()); }

	/// Probability of a single element of cell c (class or element index).
	double element_prob(u32 c) const { return prob_[c]; }
	/// Total probability of cell c.
	double mass(u32 c) const;
	/// Exact per-element numerator (exact mode only).
	u128 count(u32 c) const { return counts_[c]; }
	int denom_exp() const { return denom_exp_; }
	/// substring recorded in artifacts, e.g. "exact" or "montecarlo(N=...,seed=...)"
	const std::string &provenance_note() const { return note_; }

	u64 mc_samples() const { return mc_n_; }
	u64 mc_seed() const { return mc_seed_; }

	/// Copy that keeps only the double probabilities (used when exact
	/// convolution denominators would overflow).
	Measure floating_copy() const;

	/// Word rank behind the denominator exponent (r for tau_w, r1+r2 after
	/// convolution). Meaningful for exact measures only.
	int rank_exponent() const { return denom_exp_; }

	friend Measure convolve_measures(const Measure &mu, const Measure &nu, const ClassAlgebra &alg);
	friend Measure word_measure_mc(const Word &w, const GroupTable &G, const ClassData &cd, u64 samples, u64 seed, int workers);

  private:
	Measure() = default;

	Mode mode_ = Mode::class_indexed;
	Provenance prov_ = Provenance::exact;
	const GroupTable *group_ = nullptr;
	const ClassData *classes_ = nullptr;
	std::vector<u128> counts_; // exact per-element numerators
	int denom_exp_ = 0;        // denominator = |G|^denom_exp
	std::vector<double> prob_; // per-element probability (always valid)
	std::string note_ = "exact";
	u64 mc_n_ = 0, mc_seed_ = 0;
};

/// Exact word measure tau_w by exhaustive evaluation. For r = 2 the outer
/// variable runs over class representatives weighted by class size (word
/// fibers are conjugation covariant); r = 1 is a single pass. Throws
/// BudgetExceeded when |G|^r exceeds pair_budget.
Measure word_measure_exact(const Word &w, const GroupTable &G, const ClassData &cd, u64 pair_budget = 400000000ull, int workers = 0);

/// Independent oracle: the naive full |G|^r loop (r <= 2 only). Must agree
/// with word_measure_exact bit for bit.
Measure word_measure_exact_naive(const Word &w, const GroupTable &G, const ClassData &cd, u64 pair_budget = 400000000ull);

/// Monte-Carlo word measure from N uniform tuples. Sampling is split over
/// 64 logical shards with seed+shard streams, so results are byte-identical
/// for a given (N, seed) regardless of thread count.
Measure word_measure_mc(const Word &w, const GroupTable &G, const ClassData &cd, u64 samples, u64 seed, int workers = 0);

/// (mu*nu)(g) = sum_h mu(h) nu(h^{-1}g), exact rationals preserved.
/// Throws GroupMismatch across groups, BudgetExceeded if the exact
/// denominator would overflow 128 bits.
Measure convolve_measures(const Measure &mu, const Measure &nu, const ClassAlgebra &alg);

/// ||mu - mu_G||_q with the density normalization f_mu = |G| mu.
double lq_distance(const Measure &mu, Lq q);

struct MixingResult {
	std::optional<int> t; // least t with distance < threshold, if reached
	double last_distance = 0;
	int t_max = 0;
};

/// Least t <= t_max with ||mu^{*t} - mu_G||_q < threshold.
MixingResult mixing_time(const Measure &mu, Lq q, int t_max, const ClassAlgebra &alg, double threshold = 0.5);

struct FiberCount {
	u128 count;        // |w^{-1}(g)|
	double ratio;      // count / p^{(r-1) dim G}
	u32 class_id;
};

/// Exact fiber size over g from an exact word measure.
FiberCount fiber_count(const Measure &tau, const Mat &g);
FiberCount fiber_count(const Word &w, const GroupTable &G, const ClassData &cd, const Mat &g, u64 pair_budget = 400000000ull, int workers = 0);

/// Class id of the reference fiber point: diag(u, u^{-1}) with u the
/// smallest generator of F_p^*. Split regular semisimple, never central.
u32 generic_semisimple_class(const GroupTable &G, const ClassData &cd);

/// Pr[ |C_G(w(g))| > |G|^delta ] under tau. The comparison is done on
/// logarithms with a 1e-12 slack, so delta = 1 captures exactly the
/// central classes.
double centralizer_tail(const Measure &tau, double delta);

/// epsilon-hat = -log(max_g tau(g)) / log|G| (reported metric only).
double word_exponent(const Measure &tau);

std::string u128_to_string(u128 v);

} // namespace wordlab
