#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordlab/cayley.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/freeword.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

using namespace wordlab;

namespace {

CayleyGraph cycle_graph(u32 n)
{
	std::vector<u32> shift(n);
	for (u32 v = 0; v < n; ++v)
		shift[v] = (v + 1) % n;
	return CayleyGraph::from_permutations(n, {shift});
}

Mat mat2(const GroupTable &G, long long a, long long b, long long c, long long d)
{
	const PrimeField &F = G.field();
	Mat m;
	m.n = 2;
	m.a = {F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d), 0, 0, 0, 0, 0};
	return m;
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

} // namespace

TEST_CASE("cycle graphs: lambda1 matches the Fourier closed form")
{
	for (u32 n = 4; n <= 64; ++n)
	{
		CayleyGraph g = cycle_graph(n);
		double expect = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / n);
		CHECK(lambda1(g) == doctest::Approx(expect).epsilon(1e-6));
	}
}

TEST_CASE("order-2 group with a self-inverse generator has spectrum {0,4}")
{
	// t = t^{-1} contributes two parallel edges
	CayleyGraph g = CayleyGraph::from_permutations(2, {{1, 0}});
	CHECK(lambda1(g) == doctest::Approx(4.0));
}

TEST_CASE("disconnected graphs are rejected")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 5);
	Mat minus_id = mat2(G, -1, 0, 0, -1);
	CayleyGraph g = CayleyGraph::from_group(G, {minus_id});
	CHECK(!g.connected);
	CHECK_THROWS_AS(lambda1(g), Disconnected);
	CHECK_THROWS_AS(diameter(g), Disconnected);
	CHECK_THROWS_AS(walk_deviation(g, 3), Disconnected);
}

TEST_CASE("diameters")
{
	for (u32 n : {5u, 8u, 13u})
		CHECK(diameter(cycle_graph(n)) == static_cast<int>(n / 2));

	// group of order 4 with all non-identity elements as generators: K4
	std::vector<std::vector<u32>> gens;
	for (u32 s = 1; s < 4; ++s)
	{
		std::vector<u32> perm(4);
		for (u32 v = 0; v < 4; ++v)
			perm[v] = s ^ v; // Z/2 x Z/2
		gens.push_back(perm);
	}
	CayleyGraph k4 = CayleyGraph::from_permutations(4, gens);
	CHECK(diameter(k4) == 1);

	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 5);
	std::vector<Mat> pair{mat2(G, 1, 1, 0, 1), mat2(G, 1, 0, 1, 1)};
	CayleyGraph g = CayleyGraph::from_group(G, pair);
	int d1 = diameter(g);
	int d2 = diameter(CayleyGraph::from_group(G, pair));
	CHECK(d1 == d2); // stable across runs
	CHECK(d1 >= 3);  // log_4(120) rounded up
}

TEST_CASE("Laplacian is positive semidefinite")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 7);
	std::vector<Mat> pair{mat2(G, 1, 1, 0, 1), mat2(G, 1, 0, 1, 1)};
	CayleyGraph g = CayleyGraph::from_group(G, pair);
	SplitMix64 rng(1);
	std::vector<double> x(g.n), y(g.n);
	for (int trial = 0; trial < 100; ++trial)
	{
		for (u32 v = 0; v < g.n; ++v)
			x[v] = rng.symmetric();
		// <x, Delta x> = 2r|x|^2 - <x, Ax>
		double quad = 0;
		for (u32 v = 0; v < g.n; ++v)
		{
			double s = 2.0 * g.r * x[v];
			const u32 *nb = g.neighbors(v);
			for (int i = 0; i < 2 * g.r; ++i)
				s -= x[nb[i]];
			quad += x[v] * s;
		}
		CHECK(quad >= -1e-9);
	}
}

TEST_CASE("gap-diameter inequality lambda1 >= 1/(8 gamma^2)")
{
	auto rep = check_gap_diameter(cycle_graph(12));
	CHECK(rep.ok);
	CHECK(rep.lambda1 == doctest::Approx(2 - 2 * std::cos(std::numbers::pi / 6)).epsilon(1e-6));
	CHECK(rep.bound == doctest::Approx(1.0 / (8 * 36)));

	CayleyGraph order2 = CayleyGraph::from_permutations(2, {{1, 0}});
	auto rep2 = check_gap_diameter(order2);
	CHECK(rep2.lambda1 == doctest::Approx(4.0));
	CHECK(rep2.gamma == 1);
	CHECK(rep2.ok);

	SplitMix64 rng(17);
	for (u64 p : {5ull, 7ull, 11ull})
	{
		GroupTable G = GroupTable::enumerate(GroupKind::SL2, p);
		for (int i = 0; i < 3; ++i)
		{
			CayleyGraph g = CayleyGraph::from_group(G, random_generating_pair(G, rng));
			CHECK(check_gap_diameter(g).ok);
		}
	}
}

TEST_CASE("walk deviation and the spectral bound")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 7);
	std::vector<Mat> pair{mat2(G, 1, 1, 0, 1), mat2(G, 1, 0, 1, 1)};
	CayleyGraph g = CayleyGraph::from_group(G, pair);

	auto curve = walk_deviation_curve(g, 40);
	CHECK(curve[0] == doctest::Approx(1.0 - 1.0 / g.n));
	for (size_t i = 1; i < curve.size(); ++i)
		CHECK(curve[i] <= curve[i - 1] + 1e-12); // monotone for the symmetric walk

	double l1 = lambda1(g);
	auto rep = walk_deviation(g, 40, l1);
	CHECK(rep.ok);
	CHECK(rep.deviation <= rep.bound + 1e-12);

	// uniform start is a fixed point: deviation 0 at every step
	auto flat = walk_deviation_curve(g, 10, true);
	for (double d : flat)
		CHECK(d == doctest::Approx(0.0));
}

TEST_CASE("Lanczos and dense solvers agree")
{
	SplitMix64 rng(77);
	for (u64 p : {7ull, 11ull})
	{
		GroupTable G = GroupTable::enumerate(GroupKind::SL2, p);
		CayleyGraph g = CayleyGraph::from_group(G, random_generating_pair(G, rng));
		// library picks Lanczos for n > 64; compare against a dense solve
		double fast = lambda1(g);
		Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
		for (u32 v = 0; v < g.n; ++v)
		{
			L(v, v) += 2.0 * g.r;
			const u32 *nb = g.neighbors(v);
			for (int i = 0; i < 2 * g.r; ++i)
				L(v, nb[i]) -= 1.0;
		}
		Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L, Eigen::EigenvaluesOnly);
		CHECK(fast == doctest::Approx(es.eigenvalues()[1]).epsilon(1e-6));
	}
}

TEST_CASE("lambda1 beyond the dense fallback size (p = 17)")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 17); // n = 4896
	SplitMix64 rng(3);
	CayleyGraph g = CayleyGraph::from_group(G, random_generating_pair(G, rng));
	double l1 = lambda1(g);
	CHECK(l1 > 0.01);
	CHECK(l1 < 4.0 * g.r);
}

TEST_CASE("walk bound caveat: near-bipartite pairs can cross it at large l")
{
	// This generating pair of SL2(F_7) has lambda1 = 3 - sqrt(5) but
	// lambda_max = 7.543 > 4r - lambda1, so the negative spectral edge
	// decays slower than exp(-lambda1/2r) and overtakes the reported
	// bound near l = 58. The report flags it; nothing throws.
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 7);
	std::vector<Mat> pair{mat2(G, 0, 4, 5, 4), mat2(G, 6, 5, 6, 4)};
	REQUIRE(is_generating(pair, G));
	CayleyGraph g = CayleyGraph::from_group(G, pair);
	double l1 = lambda1(g);
	CHECK(l1 == doctest::Approx(3.0 - std::sqrt(5.0)).epsilon(1e-9));
	auto rep = walk_deviation(g, 58, l1);
	CHECK(rep.lambda_max > 4.0 * g.r - l1);
	CHECK(rep.two_sided_decay > std::exp(-l1 / (2.0 * g.r)));
	CHECK(!rep.ok); // honest report of the crossover
	// at moderate l the bound still holds
	CHECK(walk_deviation(g, 30, l1).ok);
}

TEST_CASE("kesten return probabilities")
{
	// parity: odd-length words never reduce to the empty word
	SplitMix64 rng(8);
	for (int i = 0; i < 2000; ++i)
		CHECK(!sample_word(SampleModel::nonreduced, 2, 2 * static_cast<int>(rng.below(8)) + 1, rng).empty());

	auto res = kesten_return(2, 12, 200000, 7);
	// l = 2: second letter must cancel the first, probability 1/(2r) = 1/4
	double sigma2 = std::sqrt(0.25 * 0.75 / 200000.0);
	CHECK(res.lengths[0] == 2);
	CHECK(std::abs(res.empirical[0] - 0.25) < 4 * sigma2);
	CHECK(res.reference_rate == doctest::Approx(std::log(std::sqrt(3.0) / 2.0)));

	// deterministic for a fixed seed
	auto res2 = kesten_return(2, 12, 200000, 7);
	CHECK(res.empirical == res2.empirical);
}

TEST_CASE("kesten fitted rate at small scale")
{
	auto res = kesten_return(2, 30, 300000, 11);
	CHECK(std::abs(res.fitted_rate - res.reference_rate) < 0.05);
	// the uncorrected slope is biased well below the reference rate
	CHECK(res.raw_rate < res.reference_rate - 0.05);
}
