#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordlab/errors.hpp"
#include "wordlab/matgroup.hpp"
#include "wordlab/rng.hpp"

using namespace wordlab;

namespace {

Mat mat2(u64 a, u64 b, u64 c, u64 d)
{
	Mat m;
	m.n = 2;
	m.a = {a, b, c, d, 0, 0, 0, 0, 0};
	return m;
}

} // namespace

TEST_CASE("group orders match the closed forms")
{
	for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull})
	{
		auto sl2 = GroupTable::enumerate(GroupKind::SL2, p);
		CHECK(sl2.order() == p * (p * p - 1));
	}
	auto gl2 = GroupTable::enumerate(GroupKind::GL2, 3);
	CHECK(gl2.order() == 48); // (p^2-1)(p^2-p) = 8*6
	auto pgl2 = GroupTable::enumerate(GroupKind::PGL2, 3);
	CHECK(pgl2.order() == 24);
	// |PGL2| = |GL2|/(p-1) for several primes
	for (u64 p : {3ull, 5ull, 7ull, 11ull})
	{
		auto pg = GroupTable::enumerate(GroupKind::PGL2, p);
		CHECK(pg.order() == GroupTable::closed_form_order(GroupKind::GL2, p) / (p - 1));
	}
}

TEST_CASE("budget and input validation")
{
	CHECK_THROWS_AS(GroupTable::enumerate(GroupKind::SL2, 59), BudgetExceeded);
	CHECK_THROWS_AS(GroupTable::enumerate(GroupKind::SL2, 4), std::invalid_argument);
	CHECK_THROWS_AS(GroupTable::enumerate(GroupKind::SL2, 2), std::invalid_argument);
	CHECK_THROWS_AS(GroupTable::enumerate(GroupKind::SL3, 5), BudgetExceeded);
}

TEST_CASE("SL3 over F_3 enumerates (optional kind)")
{
	auto g = GroupTable::enumerate(GroupKind::SL3, 3);
	CHECK(g.order() == 5616); // p^3 (p^3-1)(p^2-1)
	CHECK(g.mul(g.identity(), g.identity()) == g.identity());
}

TEST_CASE("multiplication closure and index round-trip on random pairs")
{
	for (auto kind : {GroupKind::SL2, GroupKind::PGL2})
	{
		auto G = GroupTable::enumerate(kind, 7);
		SplitMix64 rng(7);
		for (int i = 0; i < 100; ++i)
		{
			u32 a = static_cast<u32>(rng.below(G.order()));
			u32 b = static_cast<u32>(rng.below(G.order()));
			u32 c = G.mul(a, b);
			CHECK(c < G.order());
			CHECK(G.index_of(G.element(c)) == c);
			Mat prod = G.mul_mat(G.element(a), G.element(b));
			CHECK(G.index_of(prod) == c);
			CHECK(G.mul(c, G.inv(b)) == a);
		}
	}
}

TEST_CASE("PGL2 canonical form is projective")
{
	auto G = GroupTable::enumerate(GroupKind::PGL2, 5);
	const PrimeField &F = G.field();
	Mat m = mat2(2, 3, 1, 1); // det = -1
	Mat m2 = mat2(F.mul(2, 3), F.mul(3, 3), F.mul(1, 3), F.mul(1, 3)); // scalar multiple
	CHECK(G.index_of(m) == G.index_of(m2));
}

TEST_CASE("conjugacy classes")
{
	auto check_classes = [](GroupKind kind, u64 p, u32 expect_k) {
		auto G = GroupTable::enumerate(kind, p);
		auto cd = conjugacy_classes(G);
		CHECK(cd.k() == expect_k);
		u64 sum = 0;
		for (u32 c = 0; c < cd.k(); ++c)
		{
			sum += cd.sizes[c];
			CHECK(cd.sizes[c] * cd.centralizer_sizes[c] == G.order());
		}
		CHECK(sum == G.order());
		CHECK(cd.sizes[cd.identity_class] == 1);
		CHECK(cd.centralizer_sizes[cd.identity_class] == G.order());
	};
	check_classes(GroupKind::SL2, 3, 7);
	check_classes(GroupKind::SL2, 5, 9);
	// classical count k = p + 4 for odd p >= 5
	for (u64 p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull})
	{
		auto G = GroupTable::enumerate(GroupKind::SL2, p);
		auto cd = conjugacy_classes(G);
		CHECK(cd.k() == p + 4);
	}
	// classical counts for the other kinds: k(PGL2) = p + 2, k(GL2) = p^2 - 1
	for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull})
	{
		auto G = GroupTable::enumerate(GroupKind::PGL2, p);
		CHECK(conjugacy_classes(G).k() == p + 2);
	}
	for (u64 p : {3ull, 5ull, 7ull})
	{
		auto G = GroupTable::enumerate(GroupKind::GL2, p);
		CHECK(conjugacy_classes(G).k() == p * p - 1);
	}
}

TEST_CASE("class_of is constant on conjugacy orbits")
{
	auto G = GroupTable::enumerate(GroupKind::SL2, 5);
	auto cd = conjugacy_classes(G);
	SplitMix64 rng(11);
	for (int i = 0; i < 200; ++i)
	{
		u32 g = static_cast<u32>(rng.below(G.order()));
		u32 h = static_cast<u32>(rng.below(G.order()));
		u32 conj = G.mul(G.mul(h, g), G.inv(h));
		CHECK(cd.class_of[g] == cd.class_of[conj]);
	}
}

TEST_CASE("is_generating")
{
	auto G5 = GroupTable::enumerate(GroupKind::SL2, 5);
	std::vector<Mat> unipotent = {mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)};
	CHECK(is_generating(unipotent, G5));
	CHECK(!is_generating({mat_identity(2)}, G5));

	auto G7 = GroupTable::enumerate(GroupKind::SL2, 7);
	// -I has order 2; its cyclic subgroup has 2 elements
	Mat minus_id = mat2(6, 0, 0, 6);
	CHECK(!is_generating({minus_id}, G7));
}

TEST_CASE("class algebra counts factorizations")
{
	auto G = GroupTable::enumerate(GroupKind::SL2, 5);
	auto cd = conjugacy_classes(G);
	ClassAlgebra alg(G, cd, 1);
	// row sums: sum_j c(i,j,k) = |C_i| for every i, k
	for (u32 i = 0; i < cd.k(); ++i)
		for (u32 k = 0; k < cd.k(); ++k)
		{
			u64 s = 0;
			for (u32 j = 0; j < cd.k(); ++j)
				s += alg.at(i, j, k);
			CHECK(s == cd.sizes[i]);
		}
	// identity class: c(i, j, e) is |C_i| when C_j = C_i^{-1}, else 0
	for (u32 i = 0; i < cd.k(); ++i)
	{
		u32 iinv = cd.class_of[G.inv(cd.reps[i])];
		for (u32 j = 0; j < cd.k(); ++j)
		{
			u64 expect = j == iinv ? cd.sizes[i] : 0;
			CHECK(alg.at(i, j, cd.identity_class) == expect);
		}
	}
}
