#pragma once

#include "wordlab/matgroup.hpp"
#include "wordlab/rng.hpp"

#include <vector>

namespace wordlab {

/// Cayley multigraph of a finite group on r generators, left multiplication.
/// Each vertex has exactly 2r out-edges {x_i g, x_i^{-1} g}; a self-inverse
/// generator contributes two parallel edges, matching the walk measure
/// mu = (1/2r) sum (delta_{x_i} + delta_{x_i^{-1}}).
struct CayleyGraph {
	u32 n = 0;
	int r = 0;
	u32 identity = 0;
	std::vector<u32> adj; // 2r entries per vertex
	bool connected = false;

	static CayleyGraph from_group(const GroupTable &G, const std::vector<Mat> &generators);
	/// Generic build from left-multiplication permutations (one per
	/// generator); used for cyclic and other non-matrix groups.
	static CayleyGraph from_permutations(u32 n, const std::vector<std::vector<u32>> &gen_perms, u32 identity = 0);

	const u32 *neighbors(u32 v) const { return adj.data() + static_cast<size_t>(v) * 2 * static_cast<size_t>(r); }
};

/// Smallest nonzero eigenvalue of the combinatorial Laplacian
/// Delta f(g) = 2r f(g) - sum_i (f(x_i g) + f(x_i^{-1} g)).
/// Lanczos with full reorthogonalization on the complement of the
/// constants (40 iterations, up to 5 restarts); falls back to a dense
/// solver for n <= 4000. Throws Disconnected on disconnected input.
double lambda1(const CayleyGraph &g, double rel_tol = 1e-6);

/// Exact diameter via one BFS from the identity (vertex transitivity).
int diameter(const CayleyGraph &g);

struct GapDiameterReport {
	double lambda1 = 0;
	int gamma = 0;
	double bound = 0; // 1/(8 gamma^2)
	double slack = 0; // lambda1 - bound
	bool ok = false;  // lambda1 >= bound - 1e-9
};

GapDiameterReport check_gap_diameter(const CayleyGraph &g);

struct WalkDeviationReport {
	double deviation = 0;       // max_g |mu^{*l}(g) - 1/n|
	double bound = 0;           // exp(-lambda1 l / 2r)
	bool ok = false;            // deviation <= bound + 1e-12
	double lambda_max = 0;      // largest Laplacian eigenvalue
	double two_sided_decay = 0; // max(1 - lambda1/2r, lambda_max/2r - 1)
};

/// Largest Laplacian eigenvalue (same solver as lambda1).
double lambda_max(const CayleyGraph &g, double rel_tol = 1e-6);

/// mu^{*steps} by repeated sparse application from delta_e. Pass lambda1
/// if already computed, else it is recomputed. The reported bound tracks
/// the positive spectral edge only; when lambda_max exceeds 4r - lambda1
/// the true decay is the two-sided edge and the bound can be crossed at
/// large l — the report flags this instead of asserting.
WalkDeviationReport walk_deviation(const CayleyGraph &g, int steps, double lambda1_value = -1);

/// Full deviation trajectory for l = 0..steps (deviation is monotone
/// non-increasing for the symmetrized walk). Starting from the uniform
/// distribution instead of delta_e gives identically zero deviation.
std::vector<double> walk_deviation_curve(const CayleyGraph &g, int steps, bool from_uniform = false);

struct KestenResult {
	int rank = 0;
	u64 trials_per_length = 0;
	u64 seed = 0;
	std::vector<int> lengths;            // even l = 2,4,...,lmax
	std::vector<double> empirical;       // Pr[word of length l trivial]
	std::vector<double> reference;       // (sqrt(2r-1)/r)^l
	double fitted_rate = 0;              // corrected log-slope per step
	double raw_rate = 0;                 // uncorrected log-slope per step
	double reference_rate = 0;           // log(sqrt(2r-1)/r)
};

/// Empirical probability that a random non-reduced word of length l is
/// trivial in F_r, for even l up to lmax. The fitted per-step decay
/// corrects the known l^{-3/2} tree-return factor before the least-squares
/// fit (the raw slope is reported alongside). Trials are split over 64
/// seed+shard streams, so results do not depend on the thread count.
KestenResult kesten_return(int rank, int lmax, u64 trials, u64 seed, int workers = 0);

} // namespace wordlab
