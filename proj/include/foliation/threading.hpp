#ifndef FOLIATION_THREADING_HPP
#define FOLIATION_THREADING_HPP

namespace foliation {

// Worker cap for all parallel regions: min(omp_get_max_threads(),
// FOLIATION_LAB_THREADS) with the env var read once. Values < 1 are ignored.
int max_threads();

}  // namespace foliation

#endif
