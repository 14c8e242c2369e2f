#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bergman/errors.hpp"

namespace bergman::detail {

/// Pairwise reduction whose tree shape depends only on n, so the result is
/// identical no matter how the inputs were produced.
template <typename T>
T pairwise_sum(const T* v, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < n; ++i) s = s + v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

/// Captures the first exception thrown inside a parallel fill so it can be
/// rethrown (by kind) after the region joins.
struct CapturedError {
  bool set = false;
  std::string kind;
  std::string detail;

  void capture(const Error& e) {
    if (set) return;
    set = true;
    kind = e.kind();
    detail = std::string(e.what());
  }
  void capture_other(const char* what) {
    if (set) return;
    set = true;
    kind = "Error";
    detail = what;
  }
  void rethrow_if_set() const {
    if (set) rethrow_by_kind(kind, detail);
  }
};

/// out[k] = fn(k) for k in [0, n). The OpenMP build distributes iterations
/// across threads; the buffer contents do not depend on the thread count.
template <typename T, typename Fn>
void fill_indexed(std::vector<T>& out, std::size_t n, Fn&& fn, bool parallel) {
  out.assign(n, T{});
  CapturedError err;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      try {
        out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
      } catch (const Error& e) {
#pragma omp critical(bergman_fill_err)
        err.capture(e);
      } catch (const std::exception& e) {
#pragma omp critical(bergman_fill_err)
        err.capture_other(e.what());
      }
    }
    err.rethrow_if_set();
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t k = 0; k < n; ++k) {
    try {
      out[k] = fn(k);
    } catch (const Error& e) {
      err.capture(e);
      break;
    }
  }
  err.rethrow_if_set();
}

}  // namespace bergman::detail
