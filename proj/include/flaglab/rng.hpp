#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace flaglab {

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream for sample `index` under `seed`; identical on every platform.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

// Uniform in [lo, hi] by rejection. std::uniform_int_distribution is not
// portable across standard libraries, so it is not used.
long uniform_int(std::mt19937_64& g, long lo, long hi);

// Worker count: hardware concurrency, capped by FLAGLAB_THREADS if set.
unsigned worker_count();

// Calls f(i) for i in [0, n). Each i runs exactly once; order is unspecified.
// The first exception thrown by any f is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace flaglab
