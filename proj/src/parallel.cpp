#include "hecke_atlas/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace hecke_atlas {

int thread_count() {
  if (const char* env = std::getenv("HECKE_ATLAS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace hecke_atlas
