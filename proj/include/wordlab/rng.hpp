#pragma once

#include <cstdint>

namespace wordlab {

/// Counter-based 64-bit generator (splitmix64): state advances by a fixed
/// odd constant and the output is a bijective hash of the counter. Streams
/// for parallel shards use seed + shard ordinal. The identifier below is
/// embedded in every experiment artifact.
inline constexpr const char *kRngAlgorithm = "splitmix64-v1";

class SplitMix64 {
  public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next()
	{
		std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}

	/// Uniform in [0, n). Rejection sampling, no modulo bias.
	std::uint64_t below(std::uint64_t n)
	{
		// threshold = 2^64 mod n
		std::uint64_t threshold = (0 - n) % n;
		for (;;)
		{
			std::uint64_t v = next();
			if (v >= threshold)
				return v % n;
		}
	}

	/// Uniform in [lo, hi] inclusive.
	std::uint64_t range(std::uint64_t lo, std::uint64_t hi)
	{
		return lo + below(hi - lo + 1);
	}

	/// Uniform in [0, 1).
	double unit()
	{
		return static_cast<double>(next() >> 11) * 0x1.0p-53;
	}

	/// Uniform in [-1, 1].
	double symmetric()
	{
		return 2.0 * unit() - 1.0;
	}

  private:
	std::uint64_t state_;
};

} // namespace wordlab
