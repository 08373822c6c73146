#include "wordlab/fricke.hpp"

#include "wordlab/errors.hpp"
#include "wordlab/parallel.hpp"
#include "wordlab/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace wordlab {

namespace {

long long checked_add(long long a, long long b)
{
	long long r;
	if (__builtin_add_overflow(a, b, &r))
		throw std::overflow_error("trace polynomial coefficient overflow");
	return r;
}

long long checked_mul(long long a, long long b)
{
	long long r;
	if (__builtin_mul_overflow(a, b, &r))
		throw std::overflow_error("trace polynomial coefficient overflow");
	return r;
}

} // namespace

TracePoly TracePoly::constant(long long c)
{
	TracePoly p;
	p.add_term({0, 0, 0}, c);
	return p;
}

TracePoly TracePoly::variable(int idx)
{
	TracePoly p;
	Key k{0, 0, 0};
	k[static_cast<size_t>(idx)] = 1;
	p.add_term(k, 1);
	return p;
}

void TracePoly::add_term(const Key &k, long long c)
{
	if (c == 0)
		return;
	auto it = terms_.find(k);
	if (it == terms_.end())
	{
		terms_.emplace(k, c);
		return;
	}
	it->second = checked_add(it->second, c);
	if (it->second == 0)
		terms_.erase(it);
}

int TracePoly::total_degree() const
{
	int d = 0;
	for (const auto &[k, c] : terms_)
		d = std::max(d, static_cast<int>(k[0]) + k[1] + k[2]);
	return d;
}

int TracePoly::degree_in(int var) const
{
	int d = 0;
	for (const auto &[k, c] : terms_)
		d = std::max(d, static_cast<int>(k[static_cast<size_t>(var)]));
	return d;
}

int TracePoly::num_vars_used() const
{
	int n = 0;
	for (const auto &[k, c] : terms_)
		for (int v = 0; v < 3; ++v)
			if (k[static_cast<size_t>(v)] > 0)
				n = std::max(n, v + 1);
	return n;
}

TracePoly TracePoly::operator+(const TracePoly &o) const
{
	TracePoly r = *this;
	for (const auto &[k, c] : o.terms_)
		r.add_term(k, c);
	return r;
}

TracePoly TracePoly::operator-(const TracePoly &o) const
{
	TracePoly r = *this;
	for (const auto &[k, c] : o.terms_)
		r.add_term(k, -c);
	return r;
}

TracePoly TracePoly::operator-() const
{
	TracePoly r;
	for (const auto &[k, c] : terms_)
		r.terms_.emplace(k, -c);
	return r;
}

TracePoly TracePoly::scaled(long long c) const
{
	TracePoly r;
	if (c == 0)
		return r;
	for (const auto &[k, v] : terms_)
		r.terms_.emplace(k, checked_mul(v, c));
	return r;
}

TracePoly TracePoly::operator*(const TracePoly &o) const
{
	TracePoly r;
	for (const auto &[k1, c1] : terms_)
		for (const auto &[k2, c2] : o.terms_)
		{
			int e0 = k1[0] + k2[0], e1 = k1[1] + k2[1], e2 = k1[2] + k2[2];
			if (e0 > 255 || e1 > 255 || e2 > 255)
				throw std::overflow_error("trace polynomial exponent overflow");
			Key k{static_cast<std::uint8_t>(e0), static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(e2)};
			r.add_term(k, checked_mul(c1, c2));
		}
	return r;
}

u64 TracePoly::eval_mod(const PrimeField &F, u64 x, u64 y, u64 z) const
{
	int dx = degree_in(0), dy = degree_in(1), dz = degree_in(2);
	std::vector<u64> px(static_cast<size_t>(dx) + 1), py(static_cast<size_t>(dy) + 1), pz(static_cast<size_t>(dz) + 1);
	px[0] = py[0] = pz[0] = 1;
	for (int i = 1; i <= dx; ++i)
		px[static_cast<size_t>(i)] = F.mul(px[static_cast<size_t>(i - 1)], x);
	for (int i = 1; i <= dy; ++i)
		py[static_cast<size_t>(i)] = F.mul(py[static_cast<size_t>(i - 1)], y);
	for (int i = 1; i <= dz; ++i)
		pz[static_cast<size_t>(i)] = F.mul(pz[static_cast<size_t>(i - 1)], z);
	u64 acc = 0;
	for (const auto &[k, c] : terms_)
	{
		u64 cv = F.from_int(c);
		u64 m = F.mul(F.mul(px[k[0]], py[k[1]]), pz[k[2]]);
		acc = F.add(acc, F.mul(cv, m));
	}
	return acc;
}

std::string TracePoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	static const char *names[3] = {"x", "y", "z"};
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		long long c = it->second;
		if (first)
		{
			if (c < 0)
				os << "-";
			first = false;
		}
		else
			os << (c < 0 ? " - " : " + ");
		long long ac = std::abs(c);
		const Key &k = it->first;
		bool has_var = k[0] || k[1] || k[2];
		if (ac != 1 || !has_var)
			os << ac;
		bool star = ac != 1;
		for (int v = 0; v < 3; ++v)
		{
			if (!k[static_cast<size_t>(v)])
				continue;
			if (star)
				os << "*";
			os << names[v];
			if (k[static_cast<size_t>(v)] > 1)
				os << "^" << static_cast<int>(k[static_cast<size_t>(v)]);
			star = true;
		}
	}
	return os.str();
}

// ---------------------------------------------------------------------------
// rewriting engine

namespace {

struct Syllable {
	int letter;    // 0 = a, 1 = b
	long long exp; // nonzero
	bool operator==(const Syllable &o) const = default;
};

using Syllables = std::vector<Syllable>;

/// Free reduction (merge adjacent equal letters) followed by cyclic
/// reduction (merge first and last); the trace is invariant under both.
void normalize(Syllables &w)
{
	Syllables out;
	for (const Syllable &s : w)
	{
		if (s.exp == 0)
			continue;
		if (!out.empty() && out.back().letter == s.letter)
		{
			out.back().exp += s.exp;
			if (out.back().exp == 0)
				out.pop_back();
		}
		else
			out.push_back(s);
	}
	while (out.size() >= 2 && out.front().letter == out.back().letter)
	{
		out.front().exp += out.back().exp;
		out.pop_back();
		if (out.front().exp == 0)
			out.erase(out.begin());
	}
	w = std::move(out);
}

std::string encode(const Syllables &w)
{
	std::string s;
	for (const Syllable &t : w)
	{
		s.push_back(static_cast<char>('a' + t.letter));
		s += std::to_string(t.exp);
		s.push_back(';');
	}
	return s;
}

/// Minimal rotation, used as the memo key (trace is cyclically invariant).
std::string canonical_key(const Syllables &w)
{
	if (w.empty())
		return "";
	std::string best = encode(w);
	Syllables rot = w;
	for (size_t i = 1; i < w.size(); ++i)
	{
		std::rotate(rot.begin(), rot.begin() + 1, rot.end());
		std::string e = encode(rot);
		if (e < best)
			best = e;
	}
	return best;
}

/// t_n with t_0 = 2, t_1 = base, t_n = base t_{n-1} - t_{n-2}; equals
/// tr(U^n) when base = tr(U) (Cayley-Hamilton).
TracePoly power_trace(long long n, const TracePoly &base)
{
	n = std::llabs(n); // tr(U^{-n}) = tr(U^n)
	if (n == 0)
		return TracePoly::constant(2);
	TracePoly prev = TracePoly::constant(2), cur = base;
	for (long long i = 2; i <= n; ++i)
	{
		TracePoly next = base * cur - prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

struct TraceEngine {
	std::map<std::string, TracePoly> memo;

	TracePoly run(Syllables w)
	{
		normalize(w);
		if (w.empty())
			return TracePoly::constant(2);
		if (w.size() == 1)
			return power_trace(w[0].exp, TracePoly::variable(w[0].letter));

		std::string key = canonical_key(w);
		if (auto it = memo.find(key); it != memo.end())
			return it->second;

		// pivot on the syllable of largest absolute exponent
		size_t pivot = 0;
		for (size_t i = 1; i < w.size(); ++i)
			if (std::llabs(w[i].exp) > std::llabs(w[pivot].exp))
				pivot = i;

		TracePoly result;
		if (std::llabs(w[pivot].exp) >= 2)
		{
			// tr(s^n M) = tr(s) tr(s^{n-1} M) - tr(s^{n-2} M), exponent
			// stepping toward zero from either side
			std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pivot), w.end());
			long long n = w[0].exp;
			int s = w[0].letter;
			long long n1 = n > 0 ? n - 1 : n + 1;
			long long n2 = n > 0 ? n - 2 : n + 2;
			Syllables m1(w.begin() + 1, w.end()), m2(w.begin() + 1, w.end());
			m1.insert(m1.begin(), {s, n1});
			m2.insert(m2.begin(), {s, n2});
			result = TracePoly::variable(s) * run(std::move(m1)) - run(std::move(m2));
		}
		else
		{
			size_t neg = w.size();
			for (size_t i = 0; i < w.size(); ++i)
				if (w[i].exp < 0)
				{
					neg = i;
					break;
				}
			if (neg < w.size())
			{
				// tr(s^{-1} M) = tr(s) tr(M) - tr(s M)
				std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(neg), w.end());
				int s = w[0].letter;
				Syllables m(w.begin() + 1, w.end());
				Syllables sm = m;
				sm.insert(sm.begin(), {s, 1});
				result = TracePoly::variable(s) * run(std::move(m)) - run(std::move(sm));
			}
			else
			{
				// positive alternating word, i.e. (ab)^k up to rotation
				assert(w.size() % 2 == 0);
				result = power_trace(static_cast<long long>(w.size() / 2), TracePoly::variable(2));
			}
		}
		memo.emplace(std::move(key), result);
		return result;
	}
};

Syllables syllables_from_word(const Word &w)
{
	Syllables out;
	for (std::int16_t s : w.syllables)
	{
		int letter = std::abs(static_cast<int>(s)) - 1;
		out.push_back({letter, s > 0 ? 1 : -1});
	}
	return out;
}

// 2x2 SL2 arithmetic on raw arrays (no group enumeration needed)
struct M2 {
	u64 a, b, c, d;
};

M2 m2_mul(const PrimeField &F, const M2 &x, const M2 &y)
{
	return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
	        F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

M2 m2_inv_sl2(const PrimeField &F, const M2 &x)
{
	return {x.d, F.neg(x.b), F.neg(x.c), x.a};
}

M2 random_sl2(const PrimeField &F, SplitMix64 &rng)
{
	u64 p = F.p();
	u64 a, c;
	do
	{
		a = rng.below(p);
		c = rng.below(p);
	} while (a == 0 && c == 0);
	u64 b, d;
	if (a != 0)
	{
		b = rng.below(p);
		d = F.div(F.add(1, F.mul(b, c)), a);
	}
	else
	{
		b = F.neg(F.inv(c));
		d = rng.below(p);
	}
	return {a, b, c, d};
}

u64 m2_eval_word_trace(const PrimeField &F, const Word &w, const M2 &A, const M2 &B)
{
	M2 acc{1, 0, 0, 1};
	M2 Ai = m2_inv_sl2(F, A), Bi = m2_inv_sl2(F, B);
	for (std::int16_t s : w.syllables)
	{
		const M2 &g = s == 1 ? A : s == -1 ? Ai : s == 2 ? B : Bi;
		acc = m2_mul(F, acc, g);
	}
	return F.add(acc.a, acc.d);
}

} // namespace

bool validate_trace_poly(const Word &w, const TracePoly &P, const std::vector<u64> &primes, int pairs, u64 seed)
{
	for (u64 p : primes)
	{
		PrimeField F(p);
		SplitMix64 rng(seed ^ (p * 0x9e3779b9ull));
		for (int i = 0; i < pairs; ++i)
		{
			M2 A = random_sl2(F, rng), B = random_sl2(F, rng);
			M2 AB = m2_mul(F, A, B);
			u64 lhs = m2_eval_word_trace(F, w, A, B);
			u64 rhs = P.eval_mod(F, F.add(A.a, A.d), F.add(B.a, B.d), F.add(AB.a, AB.d));
			if (lhs != rhs)
				return false;
		}
	}
	return true;
}

TracePoly trace_poly(const Word &w, bool validate)
{
	if (w.rank > 2)
		throw ArityUnsupported("trace polynomials are implemented for words on 2 letters, got rank " + std::to_string(w.rank));
	if (w.length() > 64)
		throw ArityUnsupported("word length " + std::to_string(w.length()) + " exceeds 64");
	TraceEngine engine;
	TracePoly P = engine.run(syllables_from_word(w));
	if (P.total_degree() > std::max(w.length(), 1))
		throw std::logic_error("trace polynomial degree exceeds word length for " + word_to_string(w));
	if (validate && !validate_trace_poly(w, P))
		throw OracleFailure("trace polynomial failed random-evaluation validation for word '" + word_to_string(w) + "' (computed " + P.to_string() + ")");
	return P;
}

TracePoly fricke_discriminant()
{
	static const TracePoly delta = trace_poly(word_from_string("abAB")) - TracePoly::constant(2);
	return delta;
}

VarietySpec variety_spec(const Word &w)
{
	if (w.rank > 2)
		throw ArityUnsupported("variety specs need words on 2 letters");
	Word a = word_from_string("a", 2);
	Word b = word_from_string("b", 2);
	VarietySpec spec;
	spec.equations.push_back(trace_poly(w) - TracePoly::constant(2));
	spec.equations.push_back(trace_poly(concat_words(a, w)) - TracePoly::variable(0));
	spec.equations.push_back(trace_poly(concat_words(b, w)) - TracePoly::variable(1));
	spec.inequations.push_back(fricke_discriminant());
	spec.nvars = 3;
	spec.strike_coordinate_box = true;
	spec.label = word_to_string(w);
	return spec;
}

namespace {

/// Residues of {0, +-1, +-sqrt2, (1+-sqrt5)/2} mod p (square roots included
/// only when they exist). The paper's finite exceptional set is contained
/// in this coordinate box; striking the superset changes counts by O(1).
std::vector<char> coordinate_box(const PrimeField &F)
{
	std::vector<char> box(F.p(), 0);
	box[0] = 1;
	box[1] = 1;
	box[F.p() - 1] = 1;
	if (auto r2 = F.sqrt(2))
	{
		box[r2->first] = 1;
		box[r2->second] = 1;
	}
	if (auto r5 = F.sqrt(5 % F.p()))
	{
		u64 half = F.inv(2);
		box[F.mul(F.add(1, r5->first), half)] = 1;
		box[F.mul(F.sub(1, r5->first), half)] = 1;
		box[F.mul(F.add(1, r5->second), half)] = 1;
		box[F.mul(F.sub(1, r5->second), half)] = 1;
	}
	return box;
}

struct PolyModP {
	std::vector<std::array<std::uint8_t, 3>> exps;
	std::vector<u64> coeffs;
	int degz = 0;

	static PolyModP from(const TracePoly &P, const PrimeField &F)
	{
		PolyModP out;
		for (const auto &[k, c] : P.terms())
		{
			u64 cv = F.from_int(c);
			if (cv == 0)
				continue;
			out.exps.push_back(k);
			out.coeffs.push_back(cv);
			out.degz = std::max(out.degz, static_cast<int>(k[2]));
		}
		return out;
	}

	bool zero() const { return exps.empty(); }

	/// Collapse to coefficients of z^j at fixed (x, y).
	void z_profile(const PrimeField &F, const std::vector<u64> &xpow, const std::vector<u64> &ypow, std::vector<u64> &cz) const
	{
		std::fill(cz.begin(), cz.begin() + degz + 1, 0);
		for (size_t t = 0; t < exps.size(); ++t)
		{
			u64 v = F.mul(coeffs[t], F.mul(xpow[exps[t][0]], ypow[exps[t][1]]));
			cz[exps[t][2]] = F.add(cz[exps[t][2]], v);
		}
	}
};

u64 horner(const PrimeField &F, const std::vector<u64> &cz, int deg, u64 z)
{
	u64 acc = cz[static_cast<size_t>(deg)];
	for (int i = deg - 1; i >= 0; --i)
		acc = F.add(F.mul(acc, z), cz[static_cast<size_t>(i)]);
	return acc;
}

} // namespace

CountRow count_points(const VarietySpec &spec, u64 p, u64 budget, int workers)
{
	PrimeField F(p);
	long double evals = std::pow(static_cast<long double>(p), spec.nvars);
	if (evals > static_cast<long double>(budget))
		throw BudgetExceeded("p^" + std::to_string(spec.nvars) + " exceeds the point-count budget at p = " + std::to_string(p));

	auto check_vars = [&](const TracePoly &P) {
		if (P.num_vars_used() > spec.nvars)
			throw std::invalid_argument("polynomial uses more variables than the spec declares");
	};
	for (const TracePoly &e : spec.equations)
		check_vars(e);
	for (const TracePoly &e : spec.inequations)
		check_vars(e);

	CountRow row;
	row.p = p;

	// identically-zero inequations can never be nonvanishing
	for (const TracePoly &q : spec.inequations)
		if (q.is_zero())
			return row;

	std::vector<PolyModP> eqs, ineqs;
	for (const TracePoly &e : spec.equations)
	{
		PolyModP pm = PolyModP::from(e, F);
		if (!pm.zero()) // zero equation holds everywhere
			eqs.push_back(std::move(pm));
	}
	for (const TracePoly &q : spec.inequations)
		ineqs.push_back(PolyModP::from(q, F));

	std::vector<char> box = spec.strike_coordinate_box ? coordinate_box(F) : std::vector<char>(p, 0);

	int maxdeg = 1;
	for (const auto &e : eqs)
		for (const auto &k : e.exps)
			maxdeg = std::max({maxdeg, static_cast<int>(k[0]), static_cast<int>(k[1])});
	for (const auto &e : ineqs)
		for (const auto &k : e.exps)
			maxdeg = std::max({maxdeg, static_cast<int>(k[0]), static_cast<int>(k[1])});

	if (spec.nvars < 3)
	{
		// diagnostic mode, small enough for a direct scan
		u64 raw = 0, excluded = 0;
		u64 ylim = spec.nvars >= 2 ? p : 1;
		for (u64 x = 0; x < p; ++x)
			for (u64 y = 0; y < ylim; ++y)
			{
				bool ok = true;
				for (const auto &e : spec.equations)
					if (e.eval_mod(F, x, y, 0) != 0)
					{
						ok = false;
						break;
					}
				if (!ok)
					continue;
				for (const auto &q : spec.inequations)
					if (q.eval_mod(F, x, y, 0) == 0)
					{
						ok = false;
						break;
					}
				if (!ok)
					continue;
				++raw;
				bool in_box = box[x] && (spec.nvars < 2 || box[y]);
				if (in_box)
					++excluded;
			}
		row.raw = raw;
		row.excluded = excluded;
		row.net = raw - excluded;
		return row;
	}

	// full (x, y, z) scan: collapse every polynomial to a univariate in z
	// per (x, y), short-circuit on the first equation
	const int nworkers = resolve_workers(workers);
	const int nshards = std::min<int>(static_cast<int>(p), nworkers * 8);
	std::vector<u64> shard_raw(static_cast<size_t>(nshards), 0), shard_excl(static_cast<size_t>(nshards), 0);

	parallel_shards(nshards, workers, [&](int shard) {
		auto [xlo, xhi] = shard_range(p, nshards, shard);
		std::vector<u64> xpow(static_cast<size_t>(maxdeg) + 1), ypow(static_cast<size_t>(maxdeg) + 1);
		std::vector<std::vector<u64>> eq_cz(eqs.size()), ineq_cz(ineqs.size());
		for (size_t i = 0; i < eqs.size(); ++i)
			eq_cz[i].resize(static_cast<size_t>(eqs[i].degz) + 1);
		for (size_t i = 0; i < ineqs.size(); ++i)
			ineq_cz[i].resize(static_cast<size_t>(ineqs[i].degz) + 1);
		u64 raw = 0, excl = 0;
		for (u64 x = xlo; x < xhi; ++x)
		{
			xpow[0] = 1;
			for (int i = 1; i <= maxdeg; ++i)
				xpow[static_cast<size_t>(i)] = F.mul(xpow[static_cast<size_t>(i - 1)], x);
			for (u64 y = 0; y < p; ++y)
			{
				ypow[0] = 1;
				for (int i = 1; i <= maxdeg; ++i)
					ypow[static_cast<size_t>(i)] = F.mul(ypow[static_cast<size_t>(i - 1)], y);
				for (size_t i = 0; i < eqs.size(); ++i)
					eqs[i].z_profile(F, xpow, ypow, eq_cz[i]);
				for (size_t i = 0; i < ineqs.size(); ++i)
					ineqs[i].z_profile(F, xpow, ypow, ineq_cz[i]);
				for (u64 z = 0; z < p; ++z)
				{
					bool ok = true;
					for (size_t i = 0; i < eqs.size(); ++i)
						if (horner(F, eq_cz[i], eqs[i].degz, z) != 0)
						{
							ok = false;
							break;
						}
					if (!ok)
						continue;
					for (size_t i = 0; i < ineqs.size(); ++i)
						if (horner(F, ineq_cz[i], ineqs[i].degz, z) == 0)
						{
							ok = false;
							break;
						}
					if (!ok)
						continue;
					++raw;
					if (box[x] && box[y] && box[z])
						++excl;
				}
			}
		}
		shard_raw[static_cast<size_t>(shard)] = raw;
		shard_excl[static_cast<size_t>(shard)] = excl;
	});

	for (int s = 0; s < nshards; ++s)
	{
		row.raw += shard_raw[static_cast<size_t>(s)];
		row.excluded += shard_excl[static_cast<size_t>(s)];
	}
	row.net = row.raw - row.excluded;
	return row;
}

CountSeries count_series(const VarietySpec &spec, const std::vector<u64> &primes, u64 budget, int workers)
{
	CountSeries s;
	for (u64 p : primes)
		s.rows.push_back(count_points(spec, p, budget, workers));
	return s;
}

DimEstimate estimate_dim(const CountSeries &series)
{
	DimEstimate est;
	std::vector<std::pair<double, double>> pts;
	for (const CountRow &r : series.rows)
		if (r.net > 0)
			pts.emplace_back(std::log(static_cast<double>(r.p)), std::log(static_cast<double>(r.net)));
	est.support = static_cast<int>(pts.size());
	if (pts.empty())
	{
		est.empty = true;
		est.dim = 0;
		return est;
	}
	if (pts.size() < 8)
		throw InsufficientData("dimension estimate needs >= 8 primes with positive net count, got " + std::to_string(pts.size()));
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	for (auto [x, y] : pts)
	{
		sx += x;
		sy += y;
		sxx += x * x;
		sxy += x * y;
	}
	double n = static_cast<double>(pts.size());
	est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
	est.dim = std::max(0, static_cast<int>(std::lround(est.slope)));
	return est;
}

double estimate_components(const CountSeries &series, int dim)
{
	if (series.rows.size() < 25)
		throw InsufficientData("component estimate needs >= 25 primes, got " + std::to_string(series.rows.size()));
	double acc = 0;
	for (const CountRow &r : series.rows)
		acc += static_cast<double>(r.net) / std::pow(static_cast<double>(r.p), dim);
	return acc / static_cast<double>(series.rows.size());
}

SpecialPointResult special_point_check(u64 p, u64 budget, int workers)
{
	Word w = word_from_string("aabAABB"); // a^2 b a^{-2} b^{-2}
	VarietySpec spec = variety_spec(w);
	SpecialPointResult res;
	PrimeField F(p);
	res.count = count_points(spec, p, budget, workers);
	auto r2 = F.sqrt(2);
	res.sqrt2_exists = r2.has_value();
	if (!res.sqrt2_exists)
		return res;
	u64 s = r2->first;
	u64 inv_s = F.inv(s);
	res.points.push_back({F.neg(s), p - 1, inv_s});
	res.points.push_back({s, p - 1, F.neg(inv_s)});
	res.points_satisfy = true;
	for (const auto &pt : res.points)
	{
		for (const TracePoly &e : spec.equations)
			if (e.eval_mod(F, pt[0], pt[1], pt[2]) != 0)
				res.points_satisfy = false;
		for (const TracePoly &q : spec.inequations)
			if (q.eval_mod(F, pt[0], pt[1], pt[2]) == 0)
				res.points_satisfy = false;
	}
	return res;
}

std::vector<u64> primes_in(u64 lo, u64 hi)
{
	std::vector<u64> out;
	if (lo < 3)
		lo = 3;
	if (lo % 2 == 0)
		++lo;
	for (u64 n = lo; n <= hi; n += 2)
		if (is_prime_u64(n))
			out.push_back(n);
	return out;
}

} // namespace wordlab
