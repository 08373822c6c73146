#include "wordlab/spectra.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/rng.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wordlab {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

// eigenvalue separation below this (relative to the spectral scale) counts
// as a shared eigenspace in need of refinement
constexpr double kSepTol = 1e-7;

MatrixXd random_combination(const std::vector<MatrixXd> &cls_mats, SplitMix64 &rng)
{
	const auto k = cls_mats[0].rows();
	MatrixXd M = MatrixXd::Zero(k, k);
	for (const auto &Mi : cls_mats)
		M += rng.symmetric() * Mi;
	return M;
}

struct Cluster {
	MatrixXcd basis; // k x m, columns span the (approximate) eigenspace
};

/// Splits the column span of V by the eigenvalues of M restricted to it.
std::vector<Cluster> split_by(const MatrixXcd &V, const MatrixXcd &M)
{
	const auto m = V.cols();
	// restriction of M to span(V) in least squares: solve V B = M V
	MatrixXcd B = V.colPivHouseholderQr().solve(M * V);
	Eigen::ComplexEigenSolver<MatrixXcd> es(B);
	if (es.info() != Eigen::Success)
		throw DegenerateSpectrum("restricted eigendecomposition failed");
	VectorXcd vals = es.eigenvalues();
	MatrixXcd vecs = V * es.eigenvectors();
	double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());

	std::vector<int> order(static_cast<size_t>(m));
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](int a, int b) {
		if (vals[a].real() != vals[b].real())
			return vals[a].real() < vals[b].real();
		return vals[a].imag() < vals[b].imag();
	});

	std::vector<Cluster> out;
	for (size_t pos = 0; pos < order.size();)
	{
		size_t end = pos + 1;
		while (end < order.size() && std::abs(vals[order[end]] - vals[order[end - 1]]) <= kSepTol * scale)
			++end;
		MatrixXcd basis(V.rows(), static_cast<Eigen::Index>(end - pos));
		for (size_t t = pos; t < end; ++t)
			basis.col(static_cast<Eigen::Index>(t - pos)) = vecs.col(order[t]);
		out.push_back({std::move(basis)});
		pos = end;
	}
	return out;
}

} // namespace

CharTable character_table(const ClassData &cd, const GroupTable &G, const ClassAlgebra &alg, u64 seed, int max_attempts)
{
	const u32 k = cd.k();
	if (k > 200)
		throw BudgetExceeded("character table limited to k <= 200 classes, got " + std::to_string(k));

	// class multiplication matrices: (M_i)_{j,t} = c(i,j,t); the vector
	// w_t = |C_t| chi(g_t)/chi(1) is a common eigenvector, M_i w = w_i w
	std::vector<MatrixXd> cls_mats(k, MatrixXd::Zero(k, k));
	for (u32 i = 0; i < k; ++i)
		for (u32 j = 0; j < k; ++j)
			for (u32 t = 0; t < k; ++t)
				cls_mats[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t)) = static_cast<double>(alg.at(i, j, t));

	SplitMix64 rng(seed);
	std::vector<Cluster> clusters{{MatrixXcd::Identity(k, k)}};
	bool all_split = false;
	for (int attempt = 0; attempt < max_attempts && !all_split; ++attempt)
	{
		MatrixXcd M = random_combination(cls_mats, rng).cast<std::complex<double>>();
		std::vector<Cluster> next;
		all_split = true;
		for (const Cluster &cl : clusters)
		{
			if (cl.basis.cols() == 1)
			{
				next.push_back(cl);
				continue;
			}
			auto parts = split_by(cl.basis, M);
			for (auto &part : parts)
			{
				if (part.basis.cols() > 1)
					all_split = false;
				next.push_back(std::move(part));
			}
		}
		clusters = std::move(next);
	}
	if (!all_split)
		throw DegenerateSpectrum("could not separate " + std::to_string(k) + " eigenspaces after recombinations");

	CharTable ct;
	ct.k = k;
	ct.class_sizes = cd.sizes;
	ct.group_order = G.order();
	ct.identity_class = cd.identity_class;

	std::vector<std::vector<std::complex<double>>> rows;
	std::vector<int> degs;
	for (const Cluster &cl : clusters)
	{
		VectorXcd v = cl.basis.col(0);
		std::complex<double> at_e = v[static_cast<Eigen::Index>(cd.identity_class)];
		if (std::abs(at_e) < 1e-12)
			throw DegenerateSpectrum("eigenvector vanishes at the identity class");
		v /= at_e;
		// v_c = |C_c| chi(c)/chi(1); recover the degree from orthonormality
		double s = 0;
		std::vector<std::complex<double>> u(k);
		for (u32 c = 0; c < k; ++c)
		{
			u[c] = v[static_cast<Eigen::Index>(c)] / static_cast<double>(cd.sizes[c]);
			s += static_cast<double>(cd.sizes[c]) * std::norm(u[c]);
		}
		double degree = std::sqrt(static_cast<double>(G.order()) / s);
		int d = static_cast<int>(std::lround(degree));
		if (d < 1 || std::abs(degree - d) > 1e-6)
			throw DegenerateSpectrum("non-integral character degree " + std::to_string(degree));
		std::vector<std::complex<double>> row(k);
		for (u32 c = 0; c < k; ++c)
			row[c] = static_cast<double>(d) * u[c];
		rows.push_back(std::move(row));
		degs.push_back(d);
	}

	// canonical order: degree, trivial first among degree 1, then by value
	std::vector<size_t> order(k);
	std::iota(order.begin(), order.end(), size_t{0});
	auto is_trivial = [&](size_t r) {
		for (u32 c = 0; c < k; ++c)
			if (std::abs(rows[r][c] - 1.0) > 1e-6)
				return false;
		return true;
	};
	auto lex_less = [&](size_t a, size_t b) {
		for (u32 c = 0; c < k; ++c)
		{
			long long ra = std::llround(rows[a][c].real() * 1e9), rb = std::llround(rows[b][c].real() * 1e9);
			if (ra != rb)
				return ra < rb;
			long long ia = std::llround(rows[a][c].imag() * 1e9), ib = std::llround(rows[b][c].imag() * 1e9);
			if (ia != ib)
				return ia < ib;
		}
		return false;
	};
	std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
		if (degs[a] != degs[b])
			return degs[a] < degs[b];
		bool ta = is_trivial(a), tb = is_trivial(b);
		if (ta != tb)
			return ta;
		return lex_less(a, b);
	});

	ct.degrees.resize(k);
	ct.values.resize(static_cast<size_t>(k) * k);
	for (u32 r = 0; r < k; ++r)
	{
		ct.degrees[r] = degs[order[r]];
		for (u32 c = 0; c < k; ++c)
			ct.values[static_cast<size_t>(r) * k + c] = rows[order[r]][c];
	}

	// hard checks: sum of squares and row orthonormality
	u64 sumsq = 0;
	for (int d : ct.degrees)
		sumsq += static_cast<u64>(d) * static_cast<u64>(d);
	if (sumsq != G.order())
		throw DegenerateSpectrum("degree squares sum to " + std::to_string(sumsq) + ", group order " + std::to_string(G.order()));
	for (u32 r = 0; r < k; ++r)
		for (u32 s2 = r; s2 < k; ++s2)
		{
			std::complex<double> ip = 0;
			for (u32 c = 0; c < k; ++c)
				ip += static_cast<double>(cd.sizes[c]) * ct.at(r, c) * std::conj(ct.at(s2, c));
			ip /= static_cast<double>(G.order());
			double want = r == s2 ? 1.0 : 0.0;
			if (std::abs(ip - want) > ct.tol)
				throw DegenerateSpectrum("row orthogonality violated by " + std::to_string(std::abs(ip - want)));
		}
	return ct;
}

double zeta_value(const CharTable &ct, double s)
{
	double acc = 0;
	for (int d : ct.degrees)
		acc += std::pow(static_cast<double>(d), -s);
	return acc;
}

std::complex<double> fourier_coeff(const Measure &mu, const CharTable &ct, u32 rho)
{
	const ClassData &cd = mu.classes();
	if (cd.k() != ct.k)
		throw GroupMismatch("measure and character table disagree on class count");

	std::vector<double> class_mass(ct.k);
	if (mu.mode() == Measure::Mode::class_indexed)
	{
		for (u32 c = 0; c < ct.k; ++c)
			class_mass[c] = mu.mass(c);
	}
	else
	{
		// element-indexed: must be exactly class-constant (word measures
		// carry exact integer numerators, so the comparison is exact)
		if (!mu.exact())
			throw NotInvariant("element-indexed Fourier coefficients require exact measures");
		const GroupTable &G = mu.group();
		std::vector<bool> seen(ct.k, false);
		std::vector<u128> per_class(ct.k, 0);
		for (u32 g = 0; g < G.order(); ++g)
		{
			u32 c = cd.class_of[g];
			if (!seen[c])
			{
				per_class[c] = mu.count(g);
				seen[c] = true;
			}
			else if (per_class[c] != mu.count(g))
				throw NotInvariant("measure is not conjugation invariant");
		}
		double denom = std::pow(static_cast<double>(G.order()), mu.denom_exp());
		for (u32 c = 0; c < ct.k; ++c)
			class_mass[c] = static_cast<double>(per_class[c]) / denom * static_cast<double>(cd.sizes[c]);
	}

	std::complex<double> a = 0;
	for (u32 c = 0; c < ct.k; ++c)
		a += std::conj(ct.at(rho, c)) * class_mass[c];
	return a;
}

CentralizerBoundReport centralizer_bound_check(const CharTable &ct, const ClassData &cd)
{
	CentralizerBoundReport rep;
	rep.max_slack = -1e300;
	for (u32 r = 0; r < ct.k; ++r)
		for (u32 c = 0; c < ct.k; ++c)
		{
			double slack = std::abs(ct.at(r, c)) - std::sqrt(static_cast<double>(cd.centralizer_sizes[c]));
			rep.max_slack = std::max(rep.max_slack, slack);
		}
	rep.ok = rep.max_slack <= ct.tol;
	return rep;
}

DecayProfile spectral_decay_profile(const Measure &tau, const CharTable &ct)
{
	DecayProfile prof;
	double eps = std::numeric_limits<double>::infinity();
	for (u32 rho = 0; rho < ct.k; ++rho)
	{
		// skip the trivial character; other linear characters are still
		// reported but never enter the epsilon-hat minimum
		if (ct.degrees[rho] == 1)
		{
			bool is_triv = true;
			for (u32 c = 0; c < ct.k && is_triv; ++c)
				is_triv = std::abs(ct.at(rho, c) - 1.0) < 1e-6;
			if (is_triv)
				continue;
		}
		DecayRow row;
		row.degree = ct.degrees[rho];
		row.abs_coeff = std::abs(fourier_coeff(tau, ct, rho));
		row.ratio = row.abs_coeff / row.degree;
		row.below_tol = row.abs_coeff < ct.tol;
		if (row.below_tol)
			row.exponent = 1.0; // convention: flagged, not measured
		else if (row.degree >= 2)
			row.exponent = 1.0 - std::log(row.abs_coeff) / std::log(static_cast<double>(row.degree));
		else
			row.exponent = 0.0; // linear character, no scale to measure against
		if (!row.below_tol && row.degree >= 2)
			eps = std::min(eps, row.exponent);
		prof.rows.push_back(row);
	}
	prof.epsilon_hat = std::isfinite(eps) ? eps : 1.0;
	return prof;
}

DecayProfile spectral_decay_profile(const Word &w, const GroupTable &G, const ClassData &cd, const CharTable &ct, u64 pair_budget, int workers)
{
	Measure tau = word_measure_exact(w, G, cd, pair_budget, workers);
	return spectral_decay_profile(tau, ct);
}

std::vector<int> sl2_degree_oracle(u64 p)
{
	std::vector<int> d;
	if (p == 3)
	{
		d = {1, 1, 1, 2, 2, 2, 3};
		return d;
	}
	d.push_back(1);
	d.push_back(static_cast<int>(p));
	d.push_back(static_cast<int>((p + 1) / 2));
	d.push_back(static_cast<int>((p + 1) / 2));
	d.push_back(static_cast<int>((p - 1) / 2));
	d.push_back(static_cast<int>((p - 1) / 2));
	for (u64 i = 0; i < (p - 3) / 2; ++i)
		d.push_back(static_cast<int>(p + 1));
	for (u64 i = 0; i < (p - 1) / 2; ++i)
		d.push_back(static_cast<int>(p - 1));
	std::sort(d.begin(), d.end());
	return d;
}

std::string char_table_to_json(const CharTable &ct)
{
	auto round12 = [](double v) { return std::round(v * 1e12) / 1e12; };
	nlohmann::json j;
	j["schema_version"] = 1;
	j["k"] = ct.k;
	j["group_order"] = ct.group_order;
	j["tol"] = ct.tol;
	j["degrees"] = ct.degrees;
	j["class_sizes"] = ct.class_sizes;
	nlohmann::json vals = nlohmann::json::array();
	for (u32 r = 0; r < ct.k; ++r)
	{
		nlohmann::json row = nlohmann::json::array();
		for (u32 c = 0; c < ct.k; ++c)
			row.push_back({round12(ct.at(r, c).real()), round12(ct.at(r, c).imag())});
		vals.push_back(std::move(row));
	}
	j["values"] = std::move(vals);
	return j.dump();
}

} // namespace wordlab
