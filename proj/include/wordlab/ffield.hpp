#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace wordlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Deterministic primality test (Miller-Rabin with a fixed witness set,
/// exact for the full 64-bit range).
bool is_prime_u64(u64 n);

/// Exact arithmetic in F_p for an odd prime p. All values are canonical
/// residues in [0, p); every operation returns a canonical residue.
/// Immutable and pure, safe to share across threads.
class PrimeField {
  public:
	/// Throws std::invalid_argument unless p is an odd prime.
	explicit PrimeField(u64 p);

	u64 p() const { return p_; }

	u64 add(u64 a, u64 b) const
	{
		u64 s = a + b;
		return s >= p_ ? s - p_ : s;
	}
	u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
	u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
	u64 mul(u64 a, u64 b) const
	{
		return static_cast<u64>((static_cast<u128>(a) * b) % p_);
	}
	u64 pow(u64 a, u64 e) const;

	/// Throws DivisionByZero on inv(0).
	u64 inv(u64 a) const;
	u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

	/// Canonical residue of a signed integer.
	u64 from_int(long long v) const
	{
		long long m = v % static_cast<long long>(p_);
		return static_cast<u64>(m < 0 ? m + static_cast<long long>(p_) : m);
	}

	/// Euler criterion: 0 for a = 0, +1 for residues, -1 for non-residues.
	int legendre(u64 a) const;

	/// Square roots {r, p-r} (r <= p-r) when a is a residue or 0; empty
	/// otherwise. Tonelli-Shanks with deterministic non-residue search.
	std::optional<std::pair<u64, u64>> sqrt(u64 a) const;

  private:
	u64 p_;
};

} // namespace wordlab
