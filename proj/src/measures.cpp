#include "wordlab/measures.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/parallel.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace wordlab {

namespace {

constexpr int kMcShards = 64;

/// |G|^e as u128; throws BudgetExceeded on overflow.
u128 pow_order(u64 order, int e)
{
	u128 r = 1;
	for (int i = 0; i < e; ++i)
	{
		u128 next = r * order;
		if (next / order != r)
			throw BudgetExceeded("exact denominator |G|^" + std::to_string(e) + " overflows 128 bits");
		r = next;
	}
	return r;
}

bool denom_fits(u64 order, int e)
{
	long double bits = e * std::log2(static_cast<long double>(order));
	return bits < 126.0L;
}

/// Word evaluation on element ordinals: ops are precomputed per tuple.
struct IndexWord {
	std::vector<std::pair<int, bool>> steps; // (letter-1, inverted)

	explicit IndexWord(const Word &w)
	{
		steps.reserve(w.syllables.size());
		for (std::int16_t s : w.syllables)
			steps.emplace_back(std::abs(static_cast<int>(s)) - 1, s < 0);
	}

	u32 eval(const GroupTable &G, std::span<const u32> tuple) const
	{
		u32 acc = G.identity();
		for (auto [letter, invert] : steps)
		{
			u32 t = tuple[static_cast<size_t>(letter)];
			acc = G.mul(acc, invert ? G.inv(t) : t);
		}
		return acc;
	}
};

} // namespace

Lq lq_from_name(const std::string &name)
{
	if (name == "1")
		return Lq::L1;
	if (name == "2")
		return Lq::L2;
	if (name == "inf")
		return Lq::Linf;
	throw std::invalid_argument("q must be one of 1, 2, inf");
}

const char *lq_name(Lq q)
{
	switch (q)
	{
	case Lq::L1:
		return "1";
	case Lq::L2:
		return "2";
	case Lq::Linf:
		return "inf";
	}
	return "?";
}

std::string u128_to_string(u128 v)
{
	if (v == 0)
		return "0";
	std::string s;
	while (v)
	{
		s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
		v /= 10;
	}
	return {s.rbegin(), s.rend()};
}

Measure Measure::uniform(const GroupTable &G, const ClassData &cd)
{
	std::vector<u128> counts(cd.k(), 1);
	return exact_classwise(G, cd, std::move(counts), 1);
}

Measure Measure::dirac_identity(const GroupTable &G, const ClassData &cd)
{
	std::vector<u128> counts(cd.k(), 0);
	counts[cd.identity_class] = 1;
	return exact_classwise(G, cd, std::move(counts), 0);
}

Measure Measure::exact_classwise(const GroupTable &G, const ClassData &cd, std::vector<u128> per_element_counts, int denom_exp)
{
	if (per_element_counts.size() != cd.k())
		throw std::invalid_argument("count vector size does not match class count");
	u128 denom = pow_order(G.order(), denom_exp);
	u128 total = 0;
	for (u32 c = 0; c < cd.k(); ++c)
		total += per_element_counts[c] * cd.sizes[c];
	if (total != denom)
		throw std::logic_error("measure mass is not exactly 1");
	Measure m;
	m.mode_ = Mode::class_indexed;
	m.prov_ = Provenance::exact;
	m.group_ = &G;
	m.classes_ = &cd;
	m.counts_ = std::move(per_element_counts);
	m.denom_exp_ = denom_exp;
	m.prob_.resize(cd.k());
	double d = static_cast<double>(denom);
	for (u32 c = 0; c < cd.k(); ++c)
		m.prob_[c] = static_cast<double>(m.counts_[c]) / d;
	m.note_ = "exact";
	return m;
}

Measure Measure::exact_elementwise(const GroupTable &G, const ClassData &cd, std::vector<u128> per_element_counts, int denom_exp)
{
	if (per_element_counts.size() != G.order())
		throw std::invalid_argument("count vector size does not match group order");
	u128 denom = pow_order(G.order(), denom_exp);
	u128 total = 0;
	for (u128 c : per_element_counts)
		total += c;
	if (total != denom)
		throw std::logic_error("measure mass is not exactly 1");
	Measure m;
	m.mode_ = Mode::element_indexed;
	m.prov_ = Provenance::exact;
	m.group_ = &G;
	m.classes_ = &cd;
	m.counts_ = std::move(per_element_counts);
	m.denom_exp_ = denom_exp;
	m.prob_.resize(m.counts_.size());
	double d = static_cast<double>(denom);
	for (size_t i = 0; i < m.counts_.size(); ++i)
		m.prob_[i] = static_cast<double>(m.counts_[i]) / d;
	return m;
}

double Measure::mass(u32 c) const
{
	if (mode_ == Mode::class_indexed)
		return prob_[c] * static_cast<double>(classes_->sizes[c]);
	return prob_[c];
}

Measure Measure::floating_copy() const
{
	Measure m = *this;
	m.prov_ = Provenance::floating;
	m.counts_.clear();
	m.denom_exp_ = 0;
	m.note_ = "float(" + note_ + ")";
	return m;
}

Measure word_measure_exact(const Word &w, const GroupTable &G, const ClassData &cd, u64 pair_budget, int workers)
{
	const int r = w.rank;
	const u64 n = G.order();
	if (r >= 1)
	{
		long double evals = std::pow(static_cast<long double>(n), r);
		if (evals > static_cast<long double>(pair_budget))
			throw BudgetExceeded("|G|^r = " + std::to_string(static_cast<double>(evals)) + " exceeds pair budget " + std::to_string(pair_budget));
	}
	if (r > 2)
		throw BudgetExceeded("exhaustive word measures support r <= 2 (use word_measure_mc)");

	std::vector<u128> per_elem(cd.k(), 0);
	if (r == 0)
	{
		per_elem[cd.identity_class] = 1;
		return Measure::exact_classwise(G, cd, std::move(per_elem), 0);
	}

	IndexWord iw(w);
	if (r == 1)
	{
		std::vector<u128> total(cd.k(), 0);
		for (u32 g = 0; g < n; ++g)
		{
			u32 t[1] = {g};
			++total[cd.class_of[iw.eval(G, t)]];
		}
		for (u32 c = 0; c < cd.k(); ++c)
		{
			if (total[c] % cd.sizes[c] != 0)
				throw std::logic_error("fiber counts not conjugation covariant");
			per_elem[c] = total[c] / cd.sizes[c];
		}
		return Measure::exact_classwise(G, cd, std::move(per_elem), 1);
	}

	// r = 2: the class distribution of w(g1, g2) over g2 depends only on
	// the class of g1, so run one representative per class and weight by
	// the class size. Shards merge in class order, deterministically.
	std::vector<std::vector<u64>> shard_counts(cd.k());
	parallel_shards(static_cast<int>(cd.k()), workers, [&](int c) {
		std::vector<u64> local(cd.k(), 0);
		u32 rep = cd.reps[static_cast<size_t>(c)];
		for (u32 g2 = 0; g2 < n; ++g2)
		{
			u32 t[2] = {rep, g2};
			++local[cd.class_of[iw.eval(G, t)]];
		}
		shard_counts[static_cast<size_t>(c)] = std::move(local);
	});
	std::vector<u128> total(cd.k(), 0);
	for (u32 c = 0; c < cd.k(); ++c)
		for (u32 k = 0; k < cd.k(); ++k)
			total[k] += static_cast<u128>(cd.sizes[c]) * shard_counts[c][k];
	for (u32 c = 0; c < cd.k(); ++c)
	{
		if (total[c] % cd.sizes[c] != 0)
			throw std::logic_error("fiber counts not conjugation covariant");
		per_elem[c] = total[c] / cd.sizes[c];
	}
	return Measure::exact_classwise(G, cd, std::move(per_elem), 2);
}

Measure word_measure_exact_naive(const Word &w, const GroupTable &G, const ClassData &cd, u64 pair_budget)
{
	const int r = w.rank;
	const u64 n = G.order();
	if (r > 2)
		throw BudgetExceeded("naive oracle supports r <= 2");
	long double evals = std::pow(static_cast<long double>(n), std::max(r, 0));
	if (evals > static_cast<long double>(pair_budget))
		throw BudgetExceeded("naive |G|^r exceeds pair budget");

	std::vector<u128> total(cd.k(), 0), per_elem(cd.k(), 0);
	IndexWord iw(w);
	if (r == 0)
	{
		per_elem[cd.identity_class] = 1;
		return Measure::exact_classwise(G, cd, std::move(per_elem), 0);
	}
	if (r == 1)
	{
		for (u32 g = 0; g < n; ++g)
		{
			u32 t[1] = {g};
			++total[cd.class_of[iw.eval(G, t)]];
		}
	}
	else
	{
		for (u32 g1 = 0; g1 < n; ++g1)
			for (u32 g2 = 0; g2 < n; ++g2)
			{
				u32 t[2] = {g1, g2};
				++total[cd.class_of[iw.eval(G, t)]];
			}
	}
	for (u32 c = 0; c < cd.k(); ++c)
	{
		if (total[c] % cd.sizes[c] != 0)
			throw std::logic_error("fiber counts not conjugation covariant");
		per_elem[c] = total[c] / cd.sizes[c];
	}
	return Measure::exact_classwise(G, cd, std::move(per_elem), r);
}

Measure word_measure_mc(const Word &w, const GroupTable &G, const ClassData &cd, u64 samples, u64 seed, int workers)
{
	if (samples < 1)
		throw std::invalid_argument("Monte-Carlo needs at least one sample");
	const u64 n = G.order();
	const int r = std::max(w.rank, 1);
	IndexWord iw(w);

	std::vector<std::vector<u64>> shard_hits(kMcShards);
	parallel_shards(kMcShards, workers, [&](int s) {
		auto [lo, hi] = shard_range(samples, kMcShards, s);
		SplitMix64 rng(seed + static_cast<u64>(s));
		std::vector<u64> hits(cd.k(), 0);
		std::vector<u32> tuple(static_cast<size_t>(r));
		for (u64 i = lo; i < hi; ++i)
		{
			for (int j = 0; j < r; ++j)
				tuple[static_cast<size_t>(j)] = static_cast<u32>(rng.below(n));
			++hits[cd.class_of[iw.eval(G, tuple)]];
		}
		shard_hits[static_cast<size_t>(s)] = std::move(hits);
	});
	std::vector<u64> hits(cd.k(), 0);
	for (int s = 0; s < kMcShards; ++s)
		for (u32 c = 0; c < cd.k(); ++c)
			hits[c] += shard_hits[static_cast<size_t>(s)][c];

	Measure m;
	m.mode_ = Measure::Mode::class_indexed;
	m.prov_ = Measure::Provenance::montecarlo;
	m.group_ = &G;
	m.classes_ = &cd;
	m.denom_exp_ = 0;
	m.prob_.resize(cd.k());
	for (u32 c = 0; c < cd.k(); ++c)
		m.prob_[c] = static_cast<double>(hits[c]) / (static_cast<double>(samples) * static_cast<double>(cd.sizes[c]));
	m.mc_n_ = samples;
	m.mc_seed_ = seed;
	m.note_ = "montecarlo(N=" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ",rng=" + kRngAlgorithm + ")";
	return m;
}

Measure convolve_measures(const Measure &mu, const Measure &nu, const ClassAlgebra &alg)
{
	if (mu.group_ != nu.group_ || mu.classes_ != nu.classes_)
		throw GroupMismatch("convolution of measures on different groups");
	if (mu.exact() != nu.exact())
		throw GroupMismatch("convolution requires both measures exact or both Monte-Carlo");
	const ClassData &cd = *mu.classes_;
	const u32 k = cd.k();
	if (alg.k() != k)
		throw GroupMismatch("class algebra does not match the measures");

	if (mu.exact())
	{
		if (!denom_fits(mu.group_->order(), mu.denom_exp_ + nu.denom_exp_ + 1))
			throw BudgetExceeded("exact convolution denominator exceeds 128 bits");
		std::vector<u128> out(k, 0);
		for (u32 kk = 0; kk < k; ++kk)
		{
			u128 acc = 0;
			for (u32 i = 0; i < k; ++i)
			{
				if (mu.counts_[i] == 0)
					continue;
				for (u32 j = 0; j < k; ++j)
				{
					u64 c = alg.at(i, j, kk);
					if (c && nu.counts_[j])
						acc += static_cast<u128>(c) * mu.counts_[i] * nu.counts_[j];
				}
			}
			out[kk] = acc;
		}
		return Measure::exact_classwise(*mu.group_, cd, std::move(out), mu.denom_exp_ + nu.denom_exp_);
	}

	Measure m;
	m.mode_ = Measure::Mode::class_indexed;
	bool any_mc = mu.prov_ == Measure::Provenance::montecarlo || nu.prov_ == Measure::Provenance::montecarlo;
	m.prov_ = any_mc ? Measure::Provenance::montecarlo : Measure::Provenance::floating;
	m.group_ = mu.group_;
	m.classes_ = mu.classes_;
	m.denom_exp_ = 0;
	m.prob_.assign(k, 0.0);
	for (u32 kk = 0; kk < k; ++kk)
	{
		double acc = 0;
		for (u32 i = 0; i < k; ++i)
			for (u32 j = 0; j < k; ++j)
				acc += static_cast<double>(alg.at(i, j, kk)) * mu.prob_[i] * nu.prob_[j];
		m.prob_[kk] = acc;
	}
	m.note_ = "convolved(" + mu.note_ + "," + nu.note_ + ")";
	return m;
}

double lq_distance(const Measure &mu, Lq q)
{
	const GroupTable &G = mu.group();
	const double order = static_cast<double>(G.order());
	const u32 cells = mu.cells();
	auto weight = [&](u32 c) {
		return mu.mode() == Measure::Mode::class_indexed ? static_cast<double>(mu.classes().sizes[c]) : 1.0;
	};
	double acc = 0;
	for (u32 c = 0; c < cells; ++c)
	{
		double dev = std::abs(order * mu.element_prob(c) - 1.0);
		switch (q)
		{
		case Lq::L1:
			acc += weight(c) / order * dev;
			break;
		case Lq::L2:
			acc += weight(c) / order * dev * dev;
			break;
		case Lq::Linf:
			acc = std::max(acc, dev);
			break;
		}
	}
	return q == Lq::L2 ? std::sqrt(acc) : acc;
}

MixingResult mixing_time(const Measure &mu, Lq q, int t_max, const ClassAlgebra &alg, double threshold)
{
	if (t_max < 1)
		throw std::invalid_argument("t_max >= 1 required");
	MixingResult res;
	res.t_max = t_max;
	Measure power = mu;
	Measure step = mu;
	for (int t = 1; t <= t_max; ++t)
	{
		if (t > 1)
		{
			try
			{
				power = convolve_measures(power, step, alg);
			}
			catch (const BudgetExceeded &)
			{
				// denominators outgrew 128 bits; carry on in doubles
				power = power.floating_copy();
				step = step.floating_copy();
				power = convolve_measures(power, step, alg);
			}
		}
		res.last_distance = lq_distance(power, q);
		if (res.last_distance < threshold)
		{
			res.t = t;
			return res;
		}
	}
	return res;
}

FiberCount fiber_count(const Measure &tau, const Mat &g)
{
	if (!tau.exact())
		throw std::invalid_argument("fiber_count needs an exact measure");
	const GroupTable &G = tau.group();
	u32 cls = tau.classes().class_of[G.index_of(g)];
	FiberCount fc;
	fc.class_id = cls;
	fc.count = tau.count(cls);
	int r = tau.denom_exp();
	double denom = std::pow(static_cast<double>(G.p()), static_cast<double>((r - 1) * G.dim()));
	fc.ratio = static_cast<double>(fc.count) / denom;
	return fc;
}

FiberCount fiber_count(const Word &w, const GroupTable &G, const ClassData &cd, const Mat &g, u64 pair_budget, int workers)
{
	Measure tau = word_measure_exact(w, G, cd, pair_budget, workers);
	return fiber_count(tau, g);
}

u32 generic_semisimple_class(const GroupTable &G, const ClassData &cd)
{
	const PrimeField &F = G.field();
	u64 p = F.p();
	// prime factors of p-1
	std::vector<u64> factors;
	u64 m = p - 1;
	for (u64 q = 2; q * q <= m; ++q)
	{
		if (m % q)
			continue;
		factors.push_back(q);
		while (m % q == 0)
			m /= q;
	}
	if (m > 1)
		factors.push_back(m);
	u64 u = 0;
	for (u64 cand = 2; cand < p && u == 0; ++cand)
	{
		bool primitive = true;
		for (u64 q : factors)
			if (F.pow(cand, (p - 1) / q) == 1)
			{
				primitive = false;
				break;
			}
		if (primitive)
			u = cand;
	}
	if (u == 0)
		throw std::logic_error("no primitive root found");
	Mat rep;
	rep.n = 2;
	rep.a = {u, 0, 0, F.inv(u), 0, 0, 0, 0, 0};
	return cd.class_of[G.index_of(rep)];
}

double centralizer_tail(const Measure &tau, double delta)
{
	const ClassData &cd = tau.classes();
	double log_order = std::log(static_cast<double>(tau.group().order()));
	double acc = 0;
	for (u32 c = 0; c < cd.k(); ++c)
	{
		if (std::log(static_cast<double>(cd.centralizer_sizes[c])) > delta * log_order - 1e-12)
			acc += tau.mass(c);
	}
	return acc;
}

double word_exponent(const Measure &tau)
{
	double maxp = 0;
	for (u32 c = 0; c < tau.cells(); ++c)
		maxp = std::max(maxp, tau.element_prob(c));
	return -std::log(maxp) / std::log(static_cast<double>(tau.group().order()));
}

} // namespace wordlab
