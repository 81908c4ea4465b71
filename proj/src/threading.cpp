#include "foliation/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace foliation {

int max_threads() {
    static const int cached = [] {
        int hw = 1;
#ifdef _OPENMP
        hw = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("FOLIATION_LAB_THREADS")) {
            try {
                int k = std::stoi(env);
                if (k >= 1 && k < hw) hw = k;
            } catch (...) {
                // unparsable value: ignore, keep the OpenMP default
            }
        }
        return hw;
    }();
    return cached;
}

}  // namespace foliation
