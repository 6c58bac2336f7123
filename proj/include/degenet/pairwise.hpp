#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace degenet {

/// Selects between the OpenMP kernels and the plain serial loops. The serial
/// path is the reference the parallel one is tested against.
enum class Execution { serial, parallel };

inline constexpr Execution kDefaultExecution = Execution::parallel;

namespace detail {

// Row-partitioned sum over ordered pairs i != j. Each row is summed by one
// thread and rows are combined in index order, so the parallel result does
// not depend on the thread count.
template <typename Term>
double ordered_pair_sum_parallel(std::size_t n, const Term& term) {
  std::vector<double> rows(n, 0.0);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != static_cast<std::size_t>(i)) acc += term(static_cast<std::size_t>(i), j);
    }
    rows[static_cast<std::size_t>(i)] = acc;
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

template <typename Term>
double ordered_pair_sum_serial(std::size_t n, const Term& term) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) total += term(i, j);
    }
  }
  return total;
}

}  // namespace detail

/// Σ_{i != j} term(i, j) over ordered pairs of [0, n).
template <typename Term>
double ordered_pair_sum(std::size_t n, const Term& term, Execution exec = kDefaultExecution) {
  return exec == Execution::parallel ? detail::ordered_pair_sum_parallel(n, term)
                                     : detail::ordered_pair_sum_serial(n, term);
}

/// Number of unordered pairs {i, j}, i < j, for which pred(i, j) holds.
template <typename Pred>
std::size_t unordered_pair_count(std::size_t n, const Pred& pred,
                                 Execution exec = kDefaultExecution) {
  std::size_t total = 0;
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (std::int64_t i = 0; i < count; ++i) {
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
        if (pred(static_cast<std::size_t>(i), j)) ++total;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pred(i, j)) ++total;
      }
    }
  }
  return total;
}

}  // namespace degenet
