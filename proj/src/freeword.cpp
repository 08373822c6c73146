#include "wordlab/freeword.hpp"

#include "wordlab/errors.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace wordlab {

Word reduce_word(int rank, std::span<const std::int16_t> raw)
{
	Word w;
	w.rank = rank;
	w.syllables.reserve(raw.size());
	for (std::int16_t s : raw)
	{
		int letter = std::abs(static_cast<int>(s));
		if (letter < 1 || letter > rank)
			throw BadLetter("letter " + std::to_string(s) + " outside [1," + std::to_string(rank) + "]");
		if (!w.syllables.empty() && w.syllables.back() == -s)
			w.syllables.pop_back();
		else
			w.syllables.push_back(s);
	}
	return w;
}

Word inverse_word(const Word &w)
{
	Word r;
	r.rank = w.rank;
	r.syllables.reserve(w.syllables.size());
	for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
		r.syllables.push_back(static_cast<std::int16_t>(-*it));
	return r;
}

Word concat_words(const Word &a, const Word &b)
{
	std::vector<std::int16_t> raw = a.syllables;
	raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
	return reduce_word(std::max(a.rank, b.rank), raw);
}

Word convolve_words(const Word &w1, const Word &w2)
{
	Word r;
	r.rank = w1.rank + w2.rank;
	r.syllables = w1.syllables;
	for (std::int16_t s : w2.syllables)
	{
		int shifted = s > 0 ? s + w1.rank : s - w1.rank;
		r.syllables.push_back(static_cast<std::int16_t>(shifted));
	}
	// letters are disjoint, no cancellation at the seam
	assert(r.length() == w1.length() + w2.length());
	return r;
}

Word word_from_string(std::string_view text, int min_rank)
{
	std::vector<std::int16_t> raw;
	int rank = min_rank;
	raw.reserve(text.size());
	for (char ch : text)
	{
		int letter;
		if (ch >= 'a' && ch <= 'd')
			letter = ch - 'a' + 1;
		else if (ch >= 'A' && ch <= 'D')
			letter = -(ch - 'A' + 1);
		else
			throw BadLetter(std::string("word text: unexpected character '") + ch + "' (letters a-d, uppercase = inverse)");
		rank = std::max(rank, std::abs(letter));
		raw.push_back(static_cast<std::int16_t>(letter));
	}
	return reduce_word(rank, raw);
}

std::string word_to_string(const Word &w)
{
	std::string s;
	s.reserve(w.syllables.size());
	for (std::int16_t t : w.syllables)
	{
		if (t > 4 || t < -4)
			throw BadLetter("word text supports 4 letters (a-d)");
		s.push_back(t > 0 ? static_cast<char>('a' + t - 1) : static_cast<char>('A' - t - 1));
	}
	return s;
}

Mat evaluate(const Word &w, std::span<const Mat> tuple, const GroupTable &G)
{
	if (static_cast<int>(tuple.size()) < w.rank)
		throw ArityMismatch("word over " + std::to_string(w.rank) + " letters, tuple of " + std::to_string(tuple.size()));
	const PrimeField &F = G.field();
	// invert each needed letter once, not per occurrence
	std::vector<Mat> invs(tuple.size());
	std::vector<char> have_inv(tuple.size(), 0);
	Mat acc = mat_identity(tuple.empty() ? G.element(G.identity()).n : tuple[0].n);
	for (std::int16_t s : w.syllables)
	{
		size_t idx = static_cast<size_t>(std::abs(static_cast<int>(s)) - 1);
		if (s > 0)
			acc = mat_mul(F, acc, tuple[idx]);
		else
		{
			if (!have_inv[idx])
			{
				invs[idx] = mat_inv(F, tuple[idx]);
				have_inv[idx] = 1;
			}
			acc = mat_mul(F, acc, invs[idx]);
		}
	}
	return G.canon(acc);
}

SampleModel sample_model_from_name(const std::string &name)
{
	if (name == "nonreduced")
		return SampleModel::nonreduced;
	if (name == "reduced")
		return SampleModel::reduced;
	if (name == "interval")
		return SampleModel::interval;
	throw std::invalid_argument("unknown sampling model: " + name);
}

const char *sample_model_name(SampleModel m)
{
	switch (m)
	{
	case SampleModel::nonreduced:
		return "nonreduced";
	case SampleModel::reduced:
		return "reduced";
	case SampleModel::interval:
		return "interval";
	}
	return "?";
}

namespace {

// signed letter from an ordinal in [0, 2r): 0..r-1 -> +1..+r, r..2r-1 -> -1..-r
std::int16_t letter_from_ordinal(int rank, u64 ord)
{
	int v = static_cast<int>(ord);
	return static_cast<std::int16_t>(v < rank ? v + 1 : -(v - rank + 1));
}

Word sample_reduced(int rank, int len, SplitMix64 &rng)
{
	std::vector<std::int16_t> raw;
	raw.reserve(static_cast<size_t>(len));
	for (int i = 0; i < len; ++i)
	{
		if (i == 0)
		{
			raw.push_back(letter_from_ordinal(rank, rng.below(2u * rank)));
			continue;
		}
		// uniform over the 2r-1 letters that do not cancel the previous one
		std::int16_t forbidden = static_cast<std::int16_t>(-raw.back());
		u64 pick = rng.below(2u * rank - 1);
		std::int16_t cand = letter_from_ordinal(rank, pick);
		if (cand == forbidden)
			cand = letter_from_ordinal(rank, 2u * rank - 1);
		raw.push_back(cand);
	}
	return reduce_word(rank, raw);
}

} // namespace

Word sample_word(SampleModel model, int rank, int len, SplitMix64 &rng, double c1, double c2)
{
	if (rank < 2)
		throw std::invalid_argument("sampling needs rank >= 2");
	if (len < 1)
		throw std::invalid_argument("sampling needs len >= 1");
	switch (model)
	{
	case SampleModel::nonreduced:
	{
		std::vector<std::int16_t> raw;
		raw.reserve(static_cast<size_t>(len));
		for (int i = 0; i < len; ++i)
			raw.push_back(letter_from_ordinal(rank, rng.below(2u * rank)));
		return reduce_word(rank, raw);
	}
	case SampleModel::reduced:
		return sample_reduced(rank, len, rng);
	case SampleModel::interval:
	{
		if (!(c1 <= c2))
			throw std::invalid_argument("interval model needs c1 <= c2");
		long long lo = std::max(1ll, std::llround(c1 * len));
		long long hi = std::max(lo, std::llround(c2 * len));
		int n = static_cast<int>(rng.range(static_cast<u64>(lo), static_cast<u64>(hi)));
		return sample_reduced(rank, n, rng);
	}
	}
	throw std::logic_error("unreachable");
}

} // namespace wordlab
