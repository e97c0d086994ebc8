#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace lcfpost {

// Pairwise (tree) sum with a Neumaier-compensated base block. The split
// pattern depends only on the length, so the result is bitwise identical
// for any worker count, and summing a list concatenated with itself gives
// exactly twice the single-list sum.
double pairwise_sum(std::span<const double> values);

// Runs fn(begin, end) over disjoint index chunks on up to `workers` threads
// (0 means hardware concurrency). Chunk boundaries depend only on n, never
// on the worker count; callers write results into per-index slots, which
// keeps parallel runs bitwise reproducible.
void parallel_for_chunks(std::size_t n, int workers,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace lcfpost
