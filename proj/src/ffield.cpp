#include "wordlab/ffield.hpp"

#include "wordlab/errors.hpp"

#include <stdexcept>

namespace wordlab {

namespace {

u64 mulmod(u64 a, u64 b, u64 m)
{
	return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m)
{
	u64 r = 1 % m;
	a %= m;
	while (e)
	{
		if (e & 1)
			r = mulmod(r, a, m);
		a = mulmod(a, a, m);
		e >>= 1;
	}
	return r;
}

} // namespace

bool is_prime_u64(u64 n)
{
	if (n < 2)
		return false;
	for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
	{
		if (n % q == 0)
			return n == q;
	}
	u64 d = n - 1;
	int s = 0;
	while ((d & 1) == 0)
	{
		d >>= 1;
		++s;
	}
	// Sinclair's base set, deterministic for n < 2^64.
	for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
	{
		u64 x = powmod(a % n, d, n);
		if (x == 0 || x == 1 || x == n - 1)
			continue;
		bool witness = true;
		for (int i = 1; i < s; ++i)
		{
			x = mulmod(x, x, n);
			if (x == n - 1)
			{
				witness = false;
				break;
			}
		}
		if (witness)
			return false;
	}
	return true;
}

PrimeField::PrimeField(u64 p) : p_(p)
{
	if (p == 2)
		throw std::invalid_argument("PrimeField: p = 2 is not supported (odd primes only)");
	if (!is_prime_u64(p))
		throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
	if (p >= (1ull << 63))
		throw std::invalid_argument("PrimeField: modulus exceeds 2^63");
}

u64 PrimeField::pow(u64 a, u64 e) const
{
	return powmod(a, e, p_);
}

u64 PrimeField::inv(u64 a) const
{
	if (a == 0)
		throw DivisionByZero("PrimeField::inv(0) mod " + std::to_string(p_));
	return powmod(a, p_ - 2, p_);
}

int PrimeField::legendre(u64 a) const
{
	if (a == 0)
		return 0;
	u64 e = pow(a, (p_ - 1) / 2);
	return e == 1 ? 1 : -1;
}

std::optional<std::pair<u64, u64>> PrimeField::sqrt(u64 a) const
{
	if (a == 0)
		return std::pair<u64, u64>{0, 0};
	if (legendre(a) != 1)
		return std::nullopt;

	u64 r;
	if (p_ % 4 == 3)
	{
		r = pow(a, (p_ + 1) / 4);
	}
	else
	{
		// Tonelli-Shanks. Smallest non-residue keeps the result deterministic.
		u64 q = p_ - 1;
		int s = 0;
		while ((q & 1) == 0)
		{
			q >>= 1;
			++s;
		}
		u64 z = 2;
		while (legendre(z) != -1)
			++z;
		u64 m = s;
		u64 c = pow(z, q);
		u64 t = pow(a, q);
		r = pow(a, (q + 1) / 2);
		while (t != 1)
		{
			u64 t2 = t;
			u64 i = 0;
			while (t2 != 1)
			{
				t2 = mul(t2, t2);
				++i;
			}
			u64 b = c;
			for (u64 j = 0; j + i + 1 < m; ++j)
				b = mul(b, b);
			m = i;
			c = mul(b, b);
			t = mul(t, c);
			r = mul(r, b);
		}
	}
	u64 other = p_ - r;
	if (r > other)
		std::swap(r, other);
	return std::pair<u64, u64>{r, other};
}

} // namespace wordlab
