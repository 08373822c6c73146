#pragma once

#include "wordlab/matgroup.hpp"
#include "wordlab/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

/// Freely reduced word over letters 1..rank; syllable s means letter |s|
/// with sign(s) as exponent. Always stored reduced, so length() is l(w).
struct Word {
	int rank = 0;
	std::vector<std::int16_t> syllables;

	int length() const { return static_cast<int>(syllables.size()); }
	bool empty() const { return syllables.empty(); }
	bool operator==(const Word &o) const = default;
};

/// Free reduction of a raw signed-letter sequence. Throws BadLetter for
/// indices outside [1, rank].
Word reduce_word(int rank, std::span<const std::int16_t> raw);

Word inverse_word(const Word &w);

/// Concatenation in the same letters, freely reduced.
Word concat_words(const Word &a, const Word &b);

/// Convolution w1 * w2: letters of w2 shifted past those of w1, so the
/// result has rank r1 + r2 and length l(w1) + l(w2).
Word convolve_words(const Word &w1, const Word &w2);

/// Text form: letters a..d, uppercase = inverse; rank = largest letter used
/// (empty string gives the empty word of rank min_rank). The library itself
/// allows any rank; only the text surface is capped at 4 letters.
Word word_from_string(std::string_view text, int min_rank = 1);
std::string word_to_string(const Word &w);

/// w(g_1,...,g_r) evaluated left to right; the empty word gives identity.
/// Throws ArityMismatch when the tuple is shorter than the rank.
Mat evaluate(const Word &w, std::span<const Mat> tuple, const GroupTable &G);

enum class SampleModel { nonreduced, reduced, interval };

SampleModel sample_model_from_name(const std::string &name);
const char *sample_model_name(SampleModel m);

/// Random word under the given model, freely reduced on return:
///  - nonreduced: len letters, each uniform over the 2r signed letters
///  - reduced: uniform over the 2r(2r-1)^(len-1) reduced words of length len
///  - interval: reduced model with length uniform in [c1*len, c2*len]
Word sample_word(SampleModel model, int rank, int len, SplitMix64 &rng, double c1 = 0.5, double c2 = 1.5);

} // namespace wordlab
