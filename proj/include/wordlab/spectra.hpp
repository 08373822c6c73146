#pragma once

#include "wordlab/matgroup.hpp"
#include "wordlab/measures.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wordlab {

/// Numerically computed complex character table. Rows are sorted by degree,
/// then lexicographically by value, with the trivial character first.
struct CharTable {
	u32 k = 0;
	std::vector<int> degrees;                  // rho(1) per row
	std::vector<std::complex<double>> values;  // row-major k x k, values[rho*k + c]
	std::vector<u64> class_sizes;
	u64 group_order = 0;
	u32 identity_class = 0;
	double tol = 1e-8;

	std::complex<double> at(u32 rho, u32 c) const { return values[static_cast<size_t>(rho) * k + c]; }
};

/// Class-matrix (Burnside) method: simultaneous eigenvectors of the class
/// multiplication matrices give the normalized columns chi(g_c)/chi(1);
/// degrees come from row orthonormality. A random real combination of the
/// class matrices is eigendecomposed and clustered eigenspaces are refined
/// with fresh combinations, redrawing up to max_attempts times before
/// giving up with DegenerateSpectrum. Requires k <= 200.
CharTable character_table(const ClassData &cd, const GroupTable &G, const ClassAlgebra &alg, u64 seed = 0x5eed, int max_attempts = 8);

/// Representation zeta function: sum over irreducibles of rho(1)^{-s}.
double zeta_value(const CharTable &ct, double s);

/// Fourier coefficient a_{mu,rho} = sum_g conj(rho(g)) mu(g) of a
/// conjugation-invariant measure. Element-indexed exact measures must be
/// class-constant (exactly), otherwise NotInvariant is thrown.
std::complex<double> fourier_coeff(const Measure &mu, const CharTable &ct, u32 rho);

struct CentralizerBoundReport {
	double max_slack = 0; // max over (rho, c) of |chi(c)| - sqrt(|C_G(g_c)|)
	bool ok = false;      // slack <= tol everywhere
};

/// Checks |chi_rho(c)| <= sqrt(centralizer size) for all rows and classes.
CentralizerBoundReport centralizer_bound_check(const CharTable &ct, const ClassData &cd);

struct DecayRow {
	int degree;
	double abs_coeff;  // |a_{tau,rho}|
	double ratio;      // |a| / rho(1)
	double exponent;   // 1 - log|a| / log rho(1); 1.0 by convention when below tol
	bool below_tol;
};

struct DecayProfile {
	std::vector<DecayRow> rows; // nontrivial irreducibles, table order
	/// min exponent over nontrivial rho with rho(1) >= 2 and |a| >= tol.
	/// (Linear characters see only the abelianization and are excluded;
	/// coefficients below tol are flagged, not minimized over.)
	double epsilon_hat = 0;
};

/// Per-irreducible decay of the exact word measure tau_w. For conjugation
/// invariant measures the operator Fourier coefficient is the scalar
/// a/rho(1) by Schur's lemma.
DecayProfile spectral_decay_profile(const Word &w, const GroupTable &G, const ClassData &cd, const CharTable &ct, u64 pair_budget = 400000000ull, int workers = 0);
DecayProfile spectral_decay_profile(const Measure &tau, const CharTable &ct);

/// Independent oracle: the classical SL2(F_p) degree multiset
/// {1, p, (p+1)/2 x2, (p-1)/2 x2, (p+1) x (p-3)/2, (p-1) x (p-1)/2},
/// sorted ascending. Not used by character_table.
std::vector<int> sl2_degree_oracle(u64 p);

/// JSON export with degrees, class sizes and values as (re, im) pairs
/// rounded to 12 digits.
std::string char_table_to_json(const CharTable &ct);

} // namespace wordlab
