#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace wordlab {

/// Worker pool size: explicit argument > WORDLAB_THREADS env var > hardware.
inline int resolve_workers(int requested)
{
	if (requested > 0)
		return requested;
	if (const char *env = std::getenv("WORDLAB_THREADS"))
	{
		int n = std::atoi(env);
		if (n > 0)
			return n;
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(shard_id) for shard_id in [0, num_shards) on a pool of workers.
/// Shards are claimed dynamically but results must be keyed by shard_id so
/// that merges stay deterministic regardless of the thread count.
inline void parallel_shards(int num_shards, int workers, const std::function<void(int)> &fn)
{
	workers = resolve_workers(workers);
	if (workers <= 1 || num_shards <= 1)
	{
		for (int s = 0; s < num_shards; ++s)
			fn(s);
		return;
	}
	std::atomic<int> next{0};
	auto run = [&]() {
		for (;;)
		{
			int s = next.fetch_add(1);
			if (s >= num_shards)
				return;
			fn(s);
		}
	};
	std::vector<std::thread> pool;
	int n = std::min(workers, num_shards);
	pool.reserve(n);
	for (int i = 0; i < n; ++i)
		pool.emplace_back(run);
	for (auto &t : pool)
		t.join();
}

/// Splits [0, total) into count half-open chunks of near-equal size.
inline std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t total, int count, int id)
{
	std::uint64_t base = total / count, rem = total % count;
	std::uint64_t lo = base * id + std::min<std::uint64_t>(id, rem);
	std::uint64_t hi = lo + base + (static_cast<std::uint64_t>(id) < rem ? 1 : 0);
	return {lo, hi};
}

} // namespace wordlab
