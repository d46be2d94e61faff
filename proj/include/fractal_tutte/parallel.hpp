#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fractal_tutte {

/// Worker budget. FRACTAL_TUTTE_THREADS (a positive integer) bounds it;
/// otherwise the hardware concurrency is used. Always at least one.
std::size_t worker_count();

/// Runs every task and returns once all have finished. With a budget of one
/// worker, tasks run inline in order. The first exception thrown by a task is
/// rethrown after all tasks have completed.
void run_tasks(std::vector<std::function<void()>> tasks);

/// Splits [0, total) into at most worker_count() contiguous chunks and calls
/// body(chunk_index, begin, end) for each; returns the number of chunks.
std::size_t parallel_chunks(std::size_t total,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace fractal_tutte
