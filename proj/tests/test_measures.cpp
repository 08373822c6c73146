#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordlab/errors.hpp"
#include "wordlab/measures.hpp"
#include "wordlab/rng.hpp"

using namespace wordlab;

namespace {

struct Ctx {
	GroupTable G;
	ClassData cd;
	ClassAlgebra alg;
	explicit Ctx(u64 p, GroupKind kind = GroupKind::SL2)
	    : G(GroupTable::enumerate(kind, p)), cd(conjugacy_classes(G)), alg(G, cd, 0) {}
};

// independent oracle: brute-force count of tuples with w(g) in each class,
// for arbitrary rank (only usable on tiny groups)
std::vector<u128> brute_force_class_counts(const Word &w, const GroupTable &G, const ClassData &cd)
{
	std::vector<u128> total(cd.k(), 0);
	const u64 n = G.order();
	std::vector<u32> tuple(static_cast<size_t>(w.rank), 0);
	std::vector<Mat> mats(static_cast<size_t>(w.rank));
	for (;;)
	{
		for (int i = 0; i < w.rank; ++i)
			mats[static_cast<size_t>(i)] = G.element(tuple[static_cast<size_t>(i)]);
		++total[cd.class_of[G.index_of(evaluate(w, mats, G))]];
		int pos = w.rank - 1;
		while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == n)
			tuple[static_cast<size_t>(pos--)] = 0;
		if (pos < 0)
			break;
	}
	return total;
}

} // namespace

TEST_CASE("single-letter word measure is uniform")
{
	Ctx c(5);
	Measure tau = word_measure_exact(word_from_string("a"), c.G, c.cd);
	for (u32 k = 0; k < c.cd.k(); ++k)
		CHECK(tau.count(k) == 1); // per-element numerator over |G|^1
	CHECK(word_exponent(tau) == doctest::Approx(1.0));

	// embedding the same word in rank 2 leaves the distribution unchanged
	Measure tau2 = word_measure_exact(word_from_string("a", 2), c.G, c.cd);
	for (u32 k = 0; k < c.cd.k(); ++k)
		CHECK(tau2.element_prob(k) == doctest::Approx(tau.element_prob(k)));
}

TEST_CASE("commutator fiber over the identity counts |G| k(G)")
{
	Ctx c(3);
	Word com = word_from_string("abAB");
	Measure tau = word_measure_exact(com, c.G, c.cd);
	// |{(x,y) : [x,y] = e}| = |G| * k(G) = 24 * 7 = 168 (Frobenius)
	CHECK(tau.count(c.cd.identity_class) == 168);
	CHECK(c.G.order() * c.cd.k() == 168);
}

TEST_CASE("square-word fiber over -I in SL2(F_5)")
{
	Ctx c(5);
	// brute force over the 120 elements as the oracle
	Mat minus_id;
	minus_id.n = 2;
	minus_id.a = {4, 0, 0, 4, 0, 0, 0, 0, 0};
	u64 direct = 0;
	for (u32 g = 0; g < c.G.order(); ++g)
		if (c.G.mul(g, g) == c.G.index_of(minus_id))
			++direct;
	CHECK(direct == 30);

	Measure tau = word_measure_exact(word_from_string("aa"), c.G, c.cd);
	auto fc = fiber_count(tau, minus_id);
	CHECK(fc.count == direct);
}

TEST_CASE("class-accelerated and naive word measures agree bit for bit")
{
	for (u64 p : {3ull, 5ull, 7ull})
	{
		Ctx c(p);
		SplitMix64 rng(p);
		std::vector<Word> words{word_from_string("abAB"), word_from_string("aa", 2), word_from_string("abaB")};
		for (int i = 0; i < 3; ++i)
			words.push_back(sample_word(SampleModel::reduced, 2, 2 + static_cast<int>(rng.below(5)), rng));
		for (const Word &w : words)
		{
			Measure fast = word_measure_exact(w, c.G, c.cd);
			Measure slow = word_measure_exact_naive(w, c.G, c.cd);
			REQUIRE(fast.cells() == slow.cells());
			for (u32 k = 0; k < fast.cells(); ++k)
				CHECK(fast.count(k) == slow.count(k));
			CHECK(fast.denom_exp() == slow.denom_exp());
		}
	}
}

TEST_CASE("pair budget is enforced")
{
	Ctx c(13);
	CHECK_THROWS_AS(word_measure_exact(word_from_string("abAB"), c.G, c.cd, 1000), BudgetExceeded);
}

TEST_CASE("convolution functoriality tau_w1 * tau_w2 = tau_{w1*w2}")
{
	Ctx c(3);
	Word com = word_from_string("abAB");
	Measure tau = word_measure_exact(com, c.G, c.cd);
	Measure conv = convolve_measures(tau, tau, c.alg);

	// oracle: exhaust |G|^4 = 331776 tuples for the convolved word
	Word w4 = convolve_words(com, com);
	auto total = brute_force_class_counts(w4, c.G, c.cd);
	for (u32 k = 0; k < c.cd.k(); ++k)
	{
		CHECK(total[k] % c.cd.sizes[k] == 0);
		CHECK(conv.count(k) == total[k] / c.cd.sizes[k]);
	}
	CHECK(conv.denom_exp() == 4);
}

TEST_CASE("identity and absorbing laws of convolution")
{
	Ctx c(5);
	Measure tau = word_measure_exact(word_from_string("abAB"), c.G, c.cd);
	Measure delta = Measure::dirac_identity(c.G, c.cd);
	Measure unif = Measure::uniform(c.G, c.cd);

	Measure taue = convolve_measures(tau, delta, c.alg);
	for (u32 k = 0; k < c.cd.k(); ++k)
		CHECK(taue.count(k) == tau.count(k));

	Measure mixed = convolve_measures(unif, tau, c.alg);
	// uniform * mu = uniform: per-element numerator |G|^2 over |G|^3
	for (u32 k = 0; k < c.cd.k(); ++k)
		CHECK(mixed.count(k) == static_cast<u128>(c.G.order()) * c.G.order());
}

TEST_CASE("group mismatch is rejected")
{
	Ctx a(3), b(5);
	Measure ta = Measure::uniform(a.G, a.cd);
	Measure tb = Measure::uniform(b.G, b.cd);
	CHECK_THROWS_AS(convolve_measures(ta, tb, a.alg), GroupMismatch);
}

TEST_CASE("Lq distances")
{
	Ctx c(5);
	Measure unif = Measure::uniform(c.G, c.cd);
	CHECK(lq_distance(unif, Lq::L1) == doctest::Approx(0.0));
	CHECK(lq_distance(unif, Lq::L2) == doctest::Approx(0.0));
	CHECK(lq_distance(unif, Lq::Linf) == doctest::Approx(0.0));

	Measure delta = Measure::dirac_identity(c.G, c.cd);
	double n = static_cast<double>(c.G.order());
	CHECK(lq_distance(delta, Lq::L1) == doctest::Approx(2 * (n - 1) / n));
	CHECK(lq_distance(delta, Lq::Linf) == doctest::Approx(n - 1));
}

TEST_CASE("Jensen and Young inequalities on word measures")
{
	for (u64 p : {5ull, 7ull})
	{
		Ctx c(p);
		SplitMix64 rng(p * 17);
		std::vector<Word> words{word_from_string("abAB"), word_from_string("aa", 2)};
		for (int i = 0; i < 4; ++i)
			words.push_back(sample_word(SampleModel::reduced, 2, 2 + static_cast<int>(rng.below(6)), rng));
		for (const Word &w : words)
		{
			Measure tau = word_measure_exact(w, c.G, c.cd);
			double l1 = lq_distance(tau, Lq::L1), l2 = lq_distance(tau, Lq::L2), li = lq_distance(tau, Lq::Linf);
			CHECK(l1 <= l2 + 1e-12);
			CHECK(l2 <= li + 1e-12);
			// Young at q = s = 2, r = inf: ||(tau - u)^{*2}||_inf <= ||tau - u||_2^2
			Measure tau2 = convolve_measures(tau, tau, c.alg);
			CHECK(lq_distance(tau2, Lq::Linf) <= l2 * l2 + 1e-10);
		}
	}
}

TEST_CASE("mixing times")
{
	Ctx c(13);
	Measure unif = Measure::uniform(c.G, c.cd);
	auto m0 = mixing_time(unif, Lq::L2, 4, c.alg);
	CHECK(m0.t == 1);

	Word com = word_from_string("abAB");
	Measure tau = word_measure_exact(com, c.G, c.cd);
	auto m2 = mixing_time(tau, Lq::L2, 6, c.alg);
	CHECK(m2.t == 1);
	auto mi = mixing_time(tau, Lq::Linf, 6, c.alg);
	CHECK(mi.t == 2);

	// threshold is a parameter: an absurdly small one is never reached
	auto never = mixing_time(tau, Lq::Linf, 3, c.alg, 1e-12);
	CHECK(!never.t.has_value());
	CHECK(never.t_max == 3);
}

TEST_CASE("Monte-Carlo measures")
{
	Ctx c(5);
	Word com = word_from_string("abAB");
	Measure exact = word_measure_exact(com, c.G, c.cd);
	Measure mc = word_measure_mc(com, c.G, c.cd, 1000000, 99);
	double maxdev = 0;
	for (u32 k = 0; k < c.cd.k(); ++k)
		maxdev = std::max(maxdev, std::abs(mc.mass(k) - exact.mass(k)));
	CHECK(maxdev < 5e-3);

	Measure mc2 = word_measure_mc(com, c.G, c.cd, 1000000, 99);
	for (u32 k = 0; k < c.cd.k(); ++k)
		CHECK(mc.element_prob(k) == mc2.element_prob(k)); // same seed, same bits

	// w = x matches uniform within 3 sigma per class (binomial bands)
	Measure mcx = word_measure_mc(word_from_string("a", 2), c.G, c.cd, 200000, 5);
	for (u32 k = 0; k < c.cd.k(); ++k)
	{
		double pexp = static_cast<double>(c.cd.sizes[k]) / static_cast<double>(c.G.order());
		double sigma = std::sqrt(pexp * (1 - pexp) / 200000.0);
		CHECK(std::abs(mcx.mass(k) - pexp) <= 3 * sigma + 1e-9);
	}
}

TEST_CASE("centralizer tail")
{
	Ctx c(11);
	// trivial word: w(g) = e always, centralizer |G|
	Measure triv = word_measure_exact(Word{2, {}}, c.G, c.cd);
	CHECK(centralizer_tail(triv, 0.5) == doctest::Approx(1.0));
	CHECK(centralizer_tail(triv, 1.0) == doctest::Approx(1.0));

	Word com = word_from_string("abAB");
	Measure tau = word_measure_exact(com, c.G, c.cd);
	// delta = 0.9: only the central classes +-I have |C| = |G| > |G|^0.9
	double central_mass = 0;
	for (u32 k = 0; k < c.cd.k(); ++k)
		if (c.cd.centralizer_sizes[k] == c.G.order())
			central_mass += tau.mass(k);
	CHECK(centralizer_tail(tau, 0.9) == doctest::Approx(central_mass));
	// delta = 1 keeps exactly the central classes
	CHECK(centralizer_tail(tau, 1.0) == doctest::Approx(central_mass));
}

TEST_CASE("word exponent values")
{
	Ctx c(13);
	Measure tau = word_measure_exact(word_from_string("abAB"), c.G, c.cd);
	double expect = 1.0 - std::log(static_cast<double>(c.cd.k())) / std::log(static_cast<double>(c.G.order()));
	CHECK(word_exponent(tau) == doctest::Approx(expect));

	Measure sq = word_measure_exact(word_from_string("aa", 2), c.G, c.cd);
	CHECK(word_exponent(sq) > 0);
	CHECK(word_exponent(sq) < 1);
}

TEST_CASE("accelerated measure at the budget edge (p = 23)")
{
	// |G|^2 = 1.5e8 is inside the default 4e8 pair budget; the class
	// acceleration keeps this to k |G| evaluations
	Ctx c(23);
	Word com = word_from_string("abAB");
	Measure tau = word_measure_exact(com, c.G, c.cd);
	CHECK(c.cd.k() == 27);
	CHECK(tau.count(c.cd.identity_class) == static_cast<u128>(c.G.order()) * c.cd.k());
	CHECK(lq_distance(tau, Lq::L1) <= lq_distance(tau, Lq::L2) + 1e-12);
}

TEST_CASE("fiber ratios over the generic semisimple class")
{
	Word com = word_from_string("abAB");
	for (u64 p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull})
	{
		Ctx c(p);
		Measure tau = word_measure_exact(com, c.G, c.cd);
		u32 cls = generic_semisimple_class(c.G, c.cd);
		CHECK(c.cd.sizes[cls] > 1); // not central
		FiberCount fc = fiber_count(tau, c.G.element(c.cd.reps[cls]));
		CHECK(std::abs(fc.ratio - 1.0) < 5.0 / std::sqrt(static_cast<double>(p)));
	}
}
