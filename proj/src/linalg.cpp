#include "weylspin/linalg.hpp"

namespace weylspin {

int hardware_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace weylspin
