#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace hecke_atlas {

enum class Exec { Serial, Parallel };

/// HECKE_ATLAS_THREADS if set to a positive integer, else the OpenMP default.
int thread_count();

/// out[i] = f(i); results land in index order whatever the schedule, so the
/// output never depends on the thread count. The first exception (by index)
/// is rethrown after the loop.
template <class T, class F>
std::vector<T> map_indexed(Exec exec, std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) out[i] = f(static_cast<std::size_t>(i));
    return out;
  }
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hecke_atlas
