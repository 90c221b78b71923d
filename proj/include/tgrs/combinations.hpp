#pragma once

// Lexicographic k-subset enumeration with an optional worker pool. The
// parallel search always returns the lexicographically first match, whatever
// the scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tgrs {

using Subset = std::vector<int>;

// Advance `s` (a k-subset of {0..n-1}, ascending) to its lexicographic
// successor; false after the last one.
inline auto next_combination(Subset &s, int n) -> bool
{
  int const k = static_cast<int>(s.size());
  int       i = k - 1;
  while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) { --i; }
  if (i < 0) { return false; }
  ++s[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) { s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1; }
  return true;
}

inline auto first_combination(int k) -> Subset
{
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) { s[static_cast<std::size_t>(i)] = i; }
  return s;
}

inline auto binomial(int n, int k) -> std::uint64_t
{
  if (k < 0 || k > n) { return 0; }
  k                 = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) { acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i); }
  return acc;
}

template <typename Fn> void for_each_combination(int n, int k, Fn &&fn)
{
  if (k < 0 || k > n) { return; }
  auto s = first_combination(k);
  do { fn(static_cast<Subset const &>(s)); } while (next_combination(s, n));
}

// First k-subset (lexicographic) satisfying `pred`. With workers > 1 the
// subsets are dealt round-robin; each worker stops once it passes the best
// index found so far.
template <typename Pred> auto find_first_combination(int n, int k, Pred const &pred, unsigned workers = 1) -> std::optional<Subset>
{
  if (k < 0 || k > n) { return std::nullopt; }
  if (workers <= 1) {
    auto s = first_combination(k);
    do {
      if (pred(static_cast<Subset const &>(s))) { return s; }
    } while (next_combination(s, n));
    return std::nullopt;
  }

  constexpr auto             none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  std::optional<Subset>      found;
  std::mutex                 mutex;
  std::vector<std::thread>   pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      auto          s     = first_combination(k);
      std::uint64_t index = 0;
      do {
        if (index >= best.load(std::memory_order_relaxed)) { return; }
        if (index % workers == w && pred(static_cast<Subset const &>(s))) {
          std::lock_guard const lock(mutex);
          if (index < best.load()) {
            best  = index;
            found = s;
          }
          return;
        }
        ++index;
      } while (next_combination(s, n));
    });
  }
  for (auto &t : pool) { t.join(); }
  return found;
}

} // namespace tgrs
