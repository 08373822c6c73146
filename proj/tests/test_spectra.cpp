#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordlab/errors.hpp"
#include "wordlab/spectra.hpp"

#include <json.hpp>

#include <algorithm>

using namespace wordlab;

namespace {

struct Ctx {
	GroupTable G;
	ClassData cd;
	ClassAlgebra alg;
	CharTable ct;
	explicit Ctx(u64 p, GroupKind kind = GroupKind::SL2)
	    : G(GroupTable::enumerate(kind, p)), cd(conjugacy_classes(G)), alg(G, cd, 0), ct(character_table(cd, G, alg)) {}
};

} // namespace

TEST_CASE("SL2(F_5) degree multiset matches the classical oracle")
{
	Ctx c(5);
	std::vector<int> got = c.ct.degrees;
	std::sort(got.begin(), got.end());
	CHECK(got == sl2_degree_oracle(5));
	CHECK(got == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("degree oracle cross-check for several primes")
{
	for (u64 p : {3ull, 7ull, 11ull, 13ull})
	{
		Ctx c(p);
		std::vector<int> got = c.ct.degrees;
		std::sort(got.begin(), got.end());
		CHECK(got == sl2_degree_oracle(p));
	}
}

TEST_CASE("sum of degree squares is the group order (more kinds)")
{
	for (auto [kind, p] : std::vector<std::pair<GroupKind, u64>>{{GroupKind::GL2, 3}, {GroupKind::GL2, 5}, {GroupKind::PGL2, 5}, {GroupKind::PGL2, 7}})
	{
		Ctx c(p, kind);
		u64 s = 0;
		for (int d : c.ct.degrees)
			s += static_cast<u64>(d) * static_cast<u64>(d);
		CHECK(s == c.G.order());
	}
}

TEST_CASE("row and column orthogonality")
{
	std::vector<Ctx> contexts;
	contexts.emplace_back(5);
	contexts.emplace_back(7);
	contexts.emplace_back(11);
	contexts.emplace_back(13);
	contexts.emplace_back(23); // |G| = 12144, the largest in-budget SL2
	contexts.emplace_back(7, GroupKind::PGL2);
	for (const Ctx &c : contexts)
	{
		const CharTable &ct = c.ct;
		for (u32 r = 0; r < ct.k; ++r)
			for (u32 s = 0; s < ct.k; ++s)
			{
				std::complex<double> ip = 0;
				for (u32 cc = 0; cc < ct.k; ++cc)
					ip += static_cast<double>(ct.class_sizes[cc]) * ct.at(r, cc) * std::conj(ct.at(s, cc));
				ip /= static_cast<double>(ct.group_order);
				CHECK(std::abs(ip - (r == s ? 1.0 : 0.0)) < 1e-8);
			}
		// columns: sum_rho chi(c) conj(chi(c')) = delta |C_G(g_c)|
		for (u32 cc = 0; cc < ct.k; ++cc)
			for (u32 dd = 0; dd < ct.k; ++dd)
			{
				std::complex<double> ip = 0;
				for (u32 r = 0; r < ct.k; ++r)
					ip += ct.at(r, cc) * std::conj(ct.at(r, dd));
				double want = cc == dd ? static_cast<double>(c.cd.centralizer_sizes[cc]) : 0.0;
				CHECK(std::abs(ip - want) < 1e-7);
			}
	}
}

TEST_CASE("first row is the trivial character")
{
	Ctx c(7);
	CHECK(c.ct.degrees[0] == 1);
	for (u32 cc = 0; cc < c.ct.k; ++cc)
		CHECK(std::abs(c.ct.at(0, cc) - 1.0) < 1e-9);
}

TEST_CASE("zeta values")
{
	Ctx c(5);
	CHECK(zeta_value(c.ct, 0) == doctest::Approx(9.0)); // k(G)
	// recomputed from the degree multiset {1,2,2,3,3,4,4,5,6}
	double expect = 1.0 + 2.0 / 4 + 2.0 / 9 + 2.0 / 16 + 1.0 / 25 + 1.0 / 36;
	CHECK(zeta_value(c.ct, 2) == doctest::Approx(expect).epsilon(1e-9));
	CHECK(zeta_value(c.ct, 60) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Fourier coefficients: uniform, dirac, commutator")
{
	for (u64 p : {3ull, 5ull, 7ull, 11ull})
	{
		Ctx c(p);
		Measure unif = Measure::uniform(c.G, c.cd);
		Measure delta = Measure::dirac_identity(c.G, c.cd);
		Measure tau = word_measure_exact(word_from_string("abAB"), c.G, c.cd);
		for (u32 r = 0; r < c.ct.k; ++r)
		{
			bool trivial = r == 0;
			CHECK(std::abs(fourier_coeff(unif, c.ct, r) - (trivial ? 1.0 : 0.0)) < 1e-9);
			CHECK(std::abs(fourier_coeff(delta, c.ct, r) - static_cast<double>(c.ct.degrees[r])) < 1e-8);
			// Frobenius: a_{tau_com, rho} = 1/rho(1)
			CHECK(std::abs(fourier_coeff(tau, c.ct, r) - 1.0 / c.ct.degrees[r]) < 1e-8);
		}
	}
}

TEST_CASE("element-indexed measures must be class constant")
{
	Ctx c(3);
	std::vector<u128> counts(c.G.order(), 1);
	Measure ok = Measure::exact_elementwise(c.G, c.cd, counts, 1);
	CHECK(std::abs(fourier_coeff(ok, c.ct, 0) - 1.0) < 1e-12);

	// move one unit of mass inside a non-singleton class
	u32 cls = 0;
	while (c.cd.sizes[cls] < 2)
		++cls;
	std::vector<u32> members;
	for (u32 g = 0; g < c.G.order() && members.size() < 2; ++g)
		if (c.cd.class_of[g] == cls)
			members.push_back(g);
	counts[members[0]] = 2;
	counts[members[1]] = 0;
	Measure bad = Measure::exact_elementwise(c.G, c.cd, counts, 1);
	CHECK_THROWS_AS(fourier_coeff(bad, c.ct, 0), NotInvariant);
}

TEST_CASE("Plancherel ties the L2 distance to Fourier coefficients")
{
	Ctx c(7);
	Measure tau = word_measure_exact(word_from_string("abaB"), c.G, c.cd);
	double l2 = lq_distance(tau, Lq::L2);
	double sum = 0;
	for (u32 r = 1; r < c.ct.k; ++r)
		sum += std::norm(fourier_coeff(tau, c.ct, r));
	CHECK(std::abs(l2 * l2 - sum) < 1e-6);
}

TEST_CASE("Garion-Shalev norm identity")
{
	for (u64 p : {5ull, 7ull, 11ull, 13ull})
	{
		Ctx c(p);
		Measure tau = word_measure_exact(word_from_string("abAB"), c.G, c.cd);
		double l2sq = lq_distance(tau, Lq::L2);
		l2sq *= l2sq;
		CHECK(std::abs(l2sq - (zeta_value(c.ct, 2) - 1.0)) < 1e-6);
	}
}

TEST_CASE("centralizer bound")
{
	Ctx c(7);
	auto rep = centralizer_bound_check(c.ct, c.cd);
	CHECK(rep.ok);
	// identity column: chi(e) = rho(1) <= sqrt(|G|)
	for (u32 r = 0; r < c.ct.k; ++r)
		CHECK(c.ct.degrees[r] <= std::sqrt(static_cast<double>(c.G.order())) + 1e-9);
}

TEST_CASE("convolution of irreducible characters (class-algebra route)")
{
	std::vector<Ctx> contexts;
	contexts.emplace_back(5);
	contexts.emplace_back(7);
	contexts.emplace_back(5, GroupKind::PGL2);
	SplitMix64 rng(3);
	for (const Ctx &c : contexts)
		for (int trial = 0; trial < 3; ++trial)
		{
			u32 r1 = static_cast<u32>(rng.below(c.ct.k)), r2 = static_cast<u32>(rng.below(c.ct.k));
			// (chi1 * chi2)(g_k) = (1/|G|) sum_{i,j} c_{ijk} chi1(g_i) chi2(g_j)
			for (u32 k = 0; k < c.ct.k; ++k)
			{
				std::complex<double> conv = 0;
				for (u32 i = 0; i < c.ct.k; ++i)
					for (u32 j = 0; j < c.ct.k; ++j)
						conv += static_cast<double>(c.alg.at(i, j, k)) * c.ct.at(r1, i) * c.ct.at(r2, j);
				conv /= static_cast<double>(c.G.order());
				std::complex<double> want = r1 == r2 ? c.ct.at(r1, k) / static_cast<double>(c.ct.degrees[r1]) : 0.0;
				CHECK(std::abs(conv - want) < 1e-7);
			}
		}
}

TEST_CASE("spectral decay profiles")
{
	Ctx c(7);
	// commutator: a = 1/rho(1), so every ratio is 1/rho(1)^2
	auto prof = spectral_decay_profile(word_from_string("abAB"), c.G, c.cd, c.ct);
	for (const auto &row : prof.rows)
		CHECK(std::abs(row.ratio - 1.0 / (static_cast<double>(row.degree) * row.degree)) < 1e-8);

	// single letter: uniform, all nontrivial coefficients vanish
	auto uniform_prof = spectral_decay_profile(word_from_string("a", 2), c.G, c.cd, c.ct);
	for (const auto &row : uniform_prof.rows)
	{
		CHECK(row.below_tol);
		CHECK(row.exponent == doctest::Approx(1.0));
	}

	// x^2: the coefficient at rho is E rho(g^2), the Frobenius-Schur
	// indicator, so every |a| is 0 or 1 exactly. (The max ratio is NOT
	// monotone in p: the half-degree indicators switch on at p = 1 mod 4.
	// The profile is reported, not asserted as a trend.)
	for (u64 p : {5ull, 7ull, 11ull, 13ull})
	{
		Ctx cp(p);
		auto pr = spectral_decay_profile(word_from_string("aa"), cp.G, cp.cd, cp.ct);
		for (const auto &row : pr.rows)
		{
			double a = row.abs_coeff;
			CHECK(std::min(a, std::abs(a - 1.0)) < 1e-8);
		}
	}
}

TEST_CASE("degenerate-spectrum guard fires when no attempts are allowed")
{
	GroupTable G = GroupTable::enumerate(GroupKind::SL2, 5);
	ClassData cd = conjugacy_classes(G);
	ClassAlgebra alg(G, cd, 0);
	CHECK_THROWS_AS(character_table(cd, G, alg, 0x5eed, 0), DegenerateSpectrum);
}

TEST_CASE("character table export is valid JSON with rounded values")
{
	Ctx c(5);
	auto parsed = nlohmann::json::parse(char_table_to_json(c.ct));
	CHECK(parsed["k"] == 9);
	CHECK(parsed["degrees"].size() == 9);
	CHECK(parsed["values"].size() == 9);
	CHECK(parsed["schema_version"] == 1);
}
