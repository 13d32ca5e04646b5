#ifndef POLYPROD_EXEC_HPP
#define POLYPROD_EXEC_HPP

#if defined(_OPENMP)
#include <omp.h>
#define POLYPROD_PRAGMA_HELPER(x) _Pragma(#x)
#define POLYPROD_OMP(x) POLYPROD_PRAGMA_HELPER(omp x)
#else
#define POLYPROD_OMP(x)
#endif

namespace polyprod {

// Every data-parallel kernel takes one of these. `serial` is the reference
// path the tests compare against; both paths produce identical output.
enum class Exec { serial, parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace polyprod

#endif  // POLYPROD_EXEC_HPP
