#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fkwalk {

/// Samples are accumulated in fixed leaf blocks of this many samples; leaves
/// are merged pairwise in a tree that depends only on the leaf count. Workers
/// process whole leaves, so results are byte-identical for any worker count.
constexpr long kLeafSize = 1024;

template <class T, class Merge>
T pairwise_merge(std::vector<T> parts, Merge&& merge) {
  while (parts.size() > 1) {
    std::vector<T> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(merge(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.empty() ? T{} : parts[0];
}

/// Calls fn(leaf_index, first_sample, last_sample_exclusive) for every leaf
/// covering [0, samples), distributing leaves over `workers` threads.
/// The result vector is ordered by leaf index regardless of scheduling.
template <class T, class Fn>
std::vector<T> map_leaves(long samples, int workers, Fn&& fn) {
  const long leaves = (samples + kLeafSize - 1) / kLeafSize;
  std::vector<T> out(static_cast<std::size_t>(leaves));
  if (workers <= 1) {
    for (long leaf = 0; leaf < leaves; ++leaf)
      out[static_cast<std::size_t>(leaf)] =
          fn(leaf, leaf * kLeafSize, std::min(samples, (leaf + 1) * kLeafSize));
    return out;
  }
  std::atomic<long> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (;;) {
      const long leaf = next.fetch_add(1);
      if (leaf >= leaves) return;
      try {
        out[static_cast<std::size_t>(leaf)] =
            fn(leaf, leaf * kLeafSize, std::min(samples, (leaf + 1) * kLeafSize));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Running sum / sum of squares over one leaf; merges exactly.
struct MomentSums {
  double sum = 0;
  double sum_sq = 0;
  long count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  static MomentSums merged(const MomentSums& a, const MomentSums& b) {
    return {a.sum + b.sum, a.sum_sq + b.sum_sq, a.count + b.count};
  }
  double mean() const { return count ? sum / count : 0.0; }
  /// Standard error of the mean; 0 for fewer than 2 observations.
  double std_error() const {
    if (count < 2) return 0.0;
    const double var = (sum_sq - sum * sum / count) / (count - 1);
    return var > 0 ? std::sqrt(var / count) : 0.0;
  }
};

}  // namespace fkwalk
