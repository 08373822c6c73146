#include "wordlab/cayley.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace wordlab {

namespace {

constexpr int kLanczosIters = 40;
constexpr int kLanczosRestarts = 5;
constexpr u32 kDenseFallback = 4000;

void bfs_depths(const CayleyGraph &g, std::vector<int> &depth)
{
	depth.assign(g.n, -1);
	std::queue<u32> q;
	q.push(g.identity);
	depth[g.identity] = 0;
	while (!q.empty())
	{
		u32 v = q.front();
		q.pop();
		const u32 *nb = g.neighbors(v);
		for (int i = 0; i < 2 * g.r; ++i)
		{
			u32 w = nb[i];
			if (depth[w] < 0)
			{
				depth[w] = depth[v] + 1;
				q.push(w);
			}
		}
	}
}

/// y = Delta x = 2r x - A x
void apply_laplacian(const CayleyGraph &g, const std::vector<double> &x, std::vector<double> &y)
{
	const double deg = 2.0 * g.r;
	for (u32 v = 0; v < g.n; ++v)
	{
		double s = 0;
		const u32 *nb = g.neighbors(v);
		for (int i = 0; i < 2 * g.r; ++i)
			s += x[nb[i]];
		y[v] = deg * x[v] - s;
	}
}

void remove_mean(std::vector<double> &x)
{
	double m = 0;
	for (double v : x)
		m += v;
	m /= static_cast<double>(x.size());
	for (double &v : x)
		v -= m;
}

double norm2(const std::vector<double> &x)
{
	double s = 0;
	for (double v : x)
		s += v * v;
	return std::sqrt(s);
}

double dot(const std::vector<double> &a, const std::vector<double> &b)
{
	double s = 0;
	for (size_t i = 0; i < a.size(); ++i)
		s += a[i] * b[i];
	return s;
}

double lambda_dense(const CayleyGraph &g, bool largest)
{
	Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
	for (u32 v = 0; v < g.n; ++v)
	{
		L(v, v) += 2.0 * g.r;
		const u32 *nb = g.neighbors(v);
		for (int i = 0; i < 2 * g.r; ++i)
			L(v, nb[i]) -= 1.0;
	}
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L, Eigen::EigenvaluesOnly);
	if (es.info() != Eigen::Success)
		throw std::runtime_error("dense eigensolver failed");
	// eigenvalues ascending; [0] is the 0 of the constants
	return largest ? es.eigenvalues()[g.n - 1] : es.eigenvalues()[1];
}

/// Extremal Ritz value of Delta restricted to the complement of the
/// constants, with the residual used as the convergence certificate.
double lambda_lanczos(const CayleyGraph &g, double rel_tol, bool largest, bool &converged)
{
	const u32 n = g.n;
	SplitMix64 rng(0x1a2b3c4dull + n);
	std::vector<double> start(n);
	for (u32 v = 0; v < n; ++v)
		start[v] = rng.symmetric();

	double best = 0;
	converged = false;
	for (int restart = 0; restart <= kLanczosRestarts; ++restart)
	{
		remove_mean(start);
		double nrm = norm2(start);
		if (nrm < 1e-30)
		{
			for (u32 v = 0; v < n; ++v)
				start[v] = rng.symmetric();
			continue;
		}
		for (double &v : start)
			v /= nrm;

		std::vector<std::vector<double>> basis;
		std::vector<double> alpha, beta;
		std::vector<double> v = start, w(n);
		double beta_last = 0;
		bool exhausted = false;
		for (int it = 0; it < kLanczosIters; ++it)
		{
			basis.push_back(v);
			apply_laplacian(g, v, w);
			remove_mean(w);
			double a = dot(w, v);
			alpha.push_back(a);
			// full reorthogonalization, twice for stability; deflate the
			// constants again afterwards so roundoff cannot reintroduce the
			// zero eigenvector once the Krylov space is nearly invariant
			for (int pass = 0; pass < 2; ++pass)
				for (const auto &b : basis)
				{
					double c = dot(w, b);
					for (u32 i = 0; i < n; ++i)
						w[i] -= c * b[i];
				}
			remove_mean(w);
			double bnorm = norm2(w);
			beta_last = bnorm;
			if (bnorm < 1e-9)
			{
				// invariant subspace found: Ritz values are exact there
				exhausted = true;
				beta_last = 0;
				break;
			}
			beta.push_back(bnorm);
			for (u32 i = 0; i < n; ++i)
				v[i] = w[i] / bnorm;
		}

		const int m = static_cast<int>(alpha.size());
		Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
		for (int i = 0; i < m; ++i)
		{
			T(i, i) = alpha[static_cast<size_t>(i)];
			if (i + 1 < m)
				T(i, i + 1) = T(i + 1, i) = beta[static_cast<size_t>(i)];
		}
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
		int lo;
		if (largest)
			es.eigenvalues().maxCoeff(&lo);
		else
			es.eigenvalues().minCoeff(&lo);
		double theta = es.eigenvalues()[lo];
		double resid = std::abs(beta_last * es.eigenvectors()(m - 1, lo));
		best = theta;
		if (exhausted || resid <= rel_tol * std::max(theta, 1e-3))
		{
			converged = true;
			return best;
		}
		// restart from the best Ritz vector
		std::fill(start.begin(), start.end(), 0.0);
		for (int i = 0; i < m; ++i)
		{
			double c = es.eigenvectors()(i, lo);
			for (u32 j = 0; j < n; ++j)
				start[j] += c * basis[static_cast<size_t>(i)][j];
		}
	}
	return best;
}

} // namespace

CayleyGraph CayleyGraph::from_group(const GroupTable &G, const std::vector<Mat> &generators)
{
	CayleyGraph g;
	g.n = static_cast<u32>(G.order());
	g.r = static_cast<int>(generators.size());
	g.identity = G.identity();
	g.adj.resize(static_cast<size_t>(g.n) * 2 * static_cast<size_t>(g.r));
	std::vector<u32> gi, gii;
	for (const Mat &m : generators)
	{
		u32 i = G.index_of(m);
		gi.push_back(i);
		gii.push_back(G.inv(i));
	}
	for (u32 v = 0; v < g.n; ++v)
	{
		u32 *nb = g.adj.data() + static_cast<size_t>(v) * 2 * static_cast<size_t>(g.r);
		for (int i = 0; i < g.r; ++i)
		{
			nb[2 * i] = G.mul(gi[static_cast<size_t>(i)], v);
			nb[2 * i + 1] = G.mul(gii[static_cast<size_t>(i)], v);
		}
	}
	std::vector<int> depth;
	bfs_depths(g, depth);
	g.connected = std::none_of(depth.begin(), depth.end(), [](int d) { return d < 0; });
	return g;
}

CayleyGraph CayleyGraph::from_permutations(u32 n, const std::vector<std::vector<u32>> &gen_perms, u32 identity)
{
	CayleyGraph g;
	g.n = n;
	g.r = static_cast<int>(gen_perms.size());
	g.identity = identity;
	g.adj.resize(static_cast<size_t>(n) * 2 * static_cast<size_t>(g.r));
	for (const auto &perm : gen_perms)
	{
		if (perm.size() != n)
			throw std::invalid_argument("generator permutation has wrong size");
	}
	// invert each permutation
	std::vector<std::vector<u32>> inv(gen_perms.size(), std::vector<u32>(n));
	for (size_t i = 0; i < gen_perms.size(); ++i)
		for (u32 v = 0; v < n; ++v)
			inv[i][gen_perms[i][v]] = v;
	for (u32 v = 0; v < n; ++v)
	{
		u32 *nb = g.adj.data() + static_cast<size_t>(v) * 2 * static_cast<size_t>(g.r);
		for (int i = 0; i < g.r; ++i)
		{
			nb[2 * i] = gen_perms[static_cast<size_t>(i)][v];
			nb[2 * i + 1] = inv[static_cast<size_t>(i)][v];
		}
	}
	std::vector<int> depth;
	bfs_depths(g, depth);
	g.connected = std::none_of(depth.begin(), depth.end(), [](int d) { return d < 0; });
	return g;
}

namespace {

double laplacian_extreme(const CayleyGraph &g, double rel_tol, bool largest)
{
	if (!g.connected)
		throw Disconnected("spectrum of a disconnected Cayley graph");
	if (g.n == 1)
		throw std::invalid_argument("trivial group has no nonzero spectrum");
	if (g.n <= 64)
		return lambda_dense(g, largest);
	bool converged = false;
	double v = lambda_lanczos(g, rel_tol, largest, converged);
	if (converged)
		return v;
	if (g.n <= kDenseFallback)
		return lambda_dense(g, largest);
	throw std::runtime_error("Lanczos failed to converge and group too large for dense fallback");
}

} // namespace

double lambda1(const CayleyGraph &g, double rel_tol)
{
	return laplacian_extreme(g, rel_tol, false);
}

double lambda_max(const CayleyGraph &g, double rel_tol)
{
	return laplacian_extreme(g, rel_tol, true);
}

int diameter(const CayleyGraph &g)
{
	if (!g.connected)
		throw Disconnected("diameter of a disconnected Cayley graph");
	std::vector<int> depth;
	bfs_depths(g, depth);
	return *std::max_element(depth.begin(), depth.end());
}

GapDiameterReport check_gap_diameter(const CayleyGraph &g)
{
	GapDiameterReport rep;
	rep.lambda1 = lambda1(g);
	rep.gamma = diameter(g);
	rep.bound = 1.0 / (8.0 * rep.gamma * rep.gamma);
	rep.slack = rep.lambda1 - rep.bound;
	rep.ok = rep.lambda1 >= rep.bound - 1e-9;
	return rep;
}

std::vector<double> walk_deviation_curve(const CayleyGraph &g, int steps, bool from_uniform)
{
	const double uniform = 1.0 / g.n;
	std::vector<double> cur(g.n, from_uniform ? uniform : 0.0), next(g.n);
	if (!from_uniform)
		cur[g.identity] = 1.0;
	std::vector<double> out;
	out.reserve(static_cast<size_t>(steps) + 1);
	auto deviation = [&](const std::vector<double> &dist) {
		double d = 0;
		for (double v : dist)
			d = std::max(d, std::abs(v - uniform));
		return d;
	};
	out.push_back(deviation(cur));
	const double inv_deg = 1.0 / (2.0 * g.r);
	for (int t = 1; t <= steps; ++t)
	{
		for (u32 v = 0; v < g.n; ++v)
		{
			double s = 0;
			const u32 *nb = g.neighbors(v);
			for (int i = 0; i < 2 * g.r; ++i)
				s += cur[nb[i]];
			next[v] = s * inv_deg;
		}
		cur.swap(next);
		out.push_back(deviation(cur));
	}
	return out;
}

WalkDeviationReport walk_deviation(const CayleyGraph &g, int steps, double lambda1_value)
{
	if (!g.connected)
		throw Disconnected("walk on a disconnected Cayley graph");
	WalkDeviationReport rep;
	double l1 = lambda1_value >= 0 ? lambda1_value : lambda1(g);
	rep.deviation = walk_deviation_curve(g, steps).back();
	rep.bound = std::exp(-l1 * steps / (2.0 * g.r));
	rep.ok = rep.deviation <= rep.bound + 1e-12;
	rep.lambda_max = lambda_max(g);
	rep.two_sided_decay = std::max(1.0 - l1 / (2.0 * g.r), rep.lambda_max / (2.0 * g.r) - 1.0);
	return rep;
}

KestenResult kesten_return(int rank, int lmax, u64 trials, u64 seed, int workers)
{
	if (rank < 2)
		throw std::invalid_argument("kesten_return needs rank >= 2");
	if (trials < 10000)
		throw std::invalid_argument("kesten_return needs at least 10^4 trials");
	KestenResult res;
	res.rank = rank;
	res.trials_per_length = trials;
	res.seed = seed;
	res.reference_rate = std::log(std::sqrt(2.0 * rank - 1.0) / rank);

	constexpr int kShards = 64;
	for (int len = 2; len <= lmax; len += 2)
		res.lengths.push_back(len);
	std::vector<std::vector<u64>> shard_hits(kShards, std::vector<u64>(res.lengths.size(), 0));

	parallel_shards(kShards, workers, [&](int s) {
		auto [lo, hi] = shard_range(trials, kShards, s);
		SplitMix64 rng(seed + static_cast<u64>(s));
		std::vector<int> stack;
		for (u64 t = lo; t < hi; ++t)
		{
			// one walk of length lmax; record triviality at each even time
			stack.clear();
			for (size_t li = 0, step = 1; step <= static_cast<size_t>(lmax); ++step)
			{
				u64 pick = rng.below(2ull * rank);
				int letter = pick < static_cast<u64>(rank) ? static_cast<int>(pick) + 1 : -(static_cast<int>(pick) - rank + 1);
				if (!stack.empty() && stack.back() == -letter)
					stack.pop_back();
				else
					stack.push_back(letter);
				if (step % 2 == 0)
				{
					if (stack.empty())
						++shard_hits[static_cast<size_t>(s)][li];
					++li;
				}
			}
		}
	});

	std::vector<u64> hits(res.lengths.size(), 0);
	for (int s = 0; s < kShards; ++s)
		for (size_t i = 0; i < hits.size(); ++i)
			hits[i] += shard_hits[static_cast<size_t>(s)][i];

	for (size_t i = 0; i < res.lengths.size(); ++i)
	{
		res.empirical.push_back(static_cast<double>(hits[i]) / static_cast<double>(trials));
		res.reference.push_back(std::exp(res.reference_rate * res.lengths[i]));
	}

	// least squares of log p (optionally + 1.5 log l, cancelling the
	// polynomial tree-return factor) against l, over positive samples
	auto fit = [&](bool corrected) {
		double sx = 0, sy = 0, sxx = 0, sxy = 0;
		int m = 0;
		for (size_t i = 0; i < res.lengths.size(); ++i)
		{
			if (res.empirical[i] <= 0)
				continue;
			double x = res.lengths[i];
			double y = std::log(res.empirical[i]) + (corrected ? 1.5 * std::log(x) : 0.0);
			sx += x;
			sy += y;
			sxx += x * x;
			sxy += x * y;
			++m;
		}
		if (m < 2)
			throw InsufficientData("not enough positive return frequencies to fit");
		return (m * sxy - sx * sy) / (m * sxx - sx * sx);
	};
	res.fitted_rate = fit(true);
	res.raw_rate = fit(false);
	return res;
}

} // namespace wordlab
