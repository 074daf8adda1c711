#include "rlpart/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rlpart::par {

namespace {
std::atomic<int> g_threads{1};
}

int threads() { return g_threads.load(); }

void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

int configure_from_env() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_num_procs();
#endif
  if (const char* env = std::getenv("RLPART_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
      if (cap >= 1 && n < 1) n = cap;
    } catch (...) {
    }
  }
  set_threads(n);
  return threads();
}

bool serial_now() {
#ifdef _OPENMP
  return threads() <= 1 || omp_in_parallel();
#else
  return true;
#endif
}

}  // namespace rlpart::par
