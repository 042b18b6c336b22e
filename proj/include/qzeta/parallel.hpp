#pragma once

#include <exception>
#include <optional>
#include <vector>

#include "qzeta/context.hpp"

namespace qzeta {

// Evaluates fn(0..n-1) into a vector, optionally fanning the independent
// cells out across OpenMP threads. Results land at their index, so output
// assembly is ordered and identical for both Exec modes; each cell's own
// computation is sequential. The first cell exception, in index order, is
// rethrown after the loop completes.
template <class R, class Fn>
std::vector<R> parallel_map(long n, Fn&& fn, Exec exec = Exec::Parallel) {
  std::vector<std::optional<R>> tmp(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long i = 0; i < n; ++i) {
    try {
      tmp[static_cast<std::size_t>(i)].emplace(fn(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(n));
  for (auto& t : tmp) out.push_back(std::move(*t));
  return out;
}

} // namespace qzeta
