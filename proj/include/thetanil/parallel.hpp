#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace thetanil {

/// Thread count from THETANIL_THREADS, else the hardware concurrency.
int default_threads();

/// Runs f(0..n-1) on up to `threads` workers. The first exception thrown by
/// any task is rethrown after all workers stop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

std::uint64_t splitmix64(std::uint64_t x);
/// Seed for task `key` derived from the run seed.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t key);

}  // namespace thetanil
