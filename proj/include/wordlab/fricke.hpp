#pragma once

#include "wordlab/ffield.hpp"
#include "wordlab/freeword.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wordlab {

/// Sparse integer polynomial in (x, y, z) = (tr A, tr B, tr AB).
/// Zero coefficients are never stored; total degree <= l(w) for word
/// polynomials. Coefficient arithmetic is overflow-checked.
class TracePoly {
  public:
	using Key = std::array<std::uint8_t, 3>; // exponents of x, y, z

	static TracePoly constant(long long c);
	static TracePoly variable(int idx); // 0 -> x, 1 -> y, 2 -> z

	bool is_zero() const { return terms_.empty(); }
	int total_degree() const;
	int degree_in(int var) const;
	int num_vars_used() const; // 1 + largest variable index used, 0 if constant
	size_t term_count() const { return terms_.size(); }
	const std::map<Key, long long> &terms() const { return terms_; }

	TracePoly operator+(const TracePoly &o) const;
	TracePoly operator-(const TracePoly &o) const;
	TracePoly operator*(const TracePoly &o) const;
	TracePoly operator-() const;
	TracePoly scaled(long long c) const;
	bool operator==(const TracePoly &o) const = default;

	u64 eval_mod(const PrimeField &F, u64 x, u64 y, u64 z) const;
	std::string to_string() const; // e.g. "x^2 + y^2 + z^2 - x*y*z - 2"

  private:
	void add_term(const Key &k, long long c);
	std::map<Key, long long> terms_;
};

/// Word polynomial P_w with tr(w(A,B)) = P_w(tr A, tr B, tr AB) on SL2,
/// computed by trace-identity rewriting (tr(UV) = tr(U)tr(V) - tr(UV^{-1}),
/// tr(U^{-1}) = tr(U), cyclic invariance, Cayley-Hamilton power reduction).
/// Every generated polynomial is validated against 1000 random SL2 pairs
/// at p in {101, 103}; a mismatch throws OracleFailure. Requires a word on
/// at most 2 letters (ArityUnsupported) of length <= 64.
TracePoly trace_poly(const Word &w, bool validate = true);

/// The validation oracle on its own: exact congruence of P and tr(w(A,B))
/// on `pairs` random SL2(F_p) pairs for each p in primes.
bool validate_trace_poly(const Word &w, const TracePoly &P, const std::vector<u64> &primes = {101, 103}, int pairs = 1000, u64 seed = 0x0acceded);

/// Polynomial system cutting out the principal part of the character
/// variety of the one-relator group <a,b | w>: equations P_w = 2,
/// P_{aw} = x, P_{bw} = y, inequation Delta = P_{[a,b]} - 2 != 0, minus
/// the coordinate box {0, +-1, +-sqrt2, (1+-sqrt5)/2}^3 (a superset of the
/// finite exceptional set, struck from the net count per prime).
struct VarietySpec {
	std::vector<TracePoly> equations;   // required to vanish
	std::vector<TracePoly> inequations; // required not to vanish
	int nvars = 3;                      // diagnostic specs may use 1 or 2
	bool strike_coordinate_box = true;
	std::string label;
};

VarietySpec variety_spec(const Word &w);

/// The commutator-trace discriminant P_{[a,b]} - 2, from the validated
/// rewriting engine.
TracePoly fricke_discriminant();

struct CountRow {
	u64 p = 0;
	u64 raw = 0;      // solutions of the system in F_p^nvars
	u64 excluded = 0; // solutions with every coordinate in the struck box
	u64 net = 0;      // raw - excluded
};

struct CountSeries {
	std::vector<CountRow> rows;
};

/// Exhaustive count over F_p^nvars: outer loops over (x, y), univariate
/// z-scan inside, parallel over x-slices with deterministic merge.
/// Throws BudgetExceeded when p^nvars exceeds the evaluation budget.
CountRow count_points(const VarietySpec &spec, u64 p, u64 budget = 125000000ull, int workers = 0);

CountSeries count_series(const VarietySpec &spec, const std::vector<u64> &primes, u64 budget = 125000000ull, int workers = 0);

struct DimEstimate {
	bool empty = false; // all net counts zero
	int dim = 0;
	double slope = 0;   // least-squares slope of log(net) vs log(p)
	int support = 0;    // primes with net > 0
};

/// Log-log slope over primes with positive net count, rounded to the
/// nearest integer >= 0. All-zero series report empty; a nonzero series
/// needs >= 8 positive primes (InsufficientData otherwise).
DimEstimate estimate_dim(const CountSeries &series);

/// Chebotarev averaging: mean of net/p^dim over the window, an estimator
/// of the number of top-dimensional Q-irreducible components. Requires at
/// least 25 primes.
double estimate_components(const CountSeries &series, int dim);

struct SpecialPointResult {
	bool sqrt2_exists = false;
	std::vector<std::array<u64, 3>> points; // the two predicted points, if any
	bool points_satisfy = false;            // equations vanish at both
	CountRow count;                         // exhaustive cross-check
};

/// The w = a^2 b a^{-2} b^{-2} check: when 2 is a QR mod p the points
/// (-+sqrt2, -1, +-1/sqrt2) satisfy the generated equations and the net
/// count is 2; otherwise the net count is 0.
SpecialPointResult special_point_check(u64 p, u64 budget = 125000000ull, int workers = 0);

/// Primes in [lo, hi] (odd primes only; 2 is never included).
std::vector<u64> primes_in(u64 lo, u64 hi);

} // namespace wordlab
