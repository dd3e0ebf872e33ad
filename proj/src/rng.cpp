#include "kaluza/rng.hpp"

namespace kaluza {

KaluzaNumber random_integer_number(Mcg64& rng, std::int64_t bound) {
    KaluzaNumber x;
    for (std::size_t k = 0; k < kDim; ++k) {
        x[k] = static_cast<double>(rng.uniform_int(-bound, bound));
    }
    return x;
}

KaluzaNumber random_real_number(Mcg64& rng) {
    KaluzaNumber x;
    for (std::size_t k = 0; k < kDim; ++k) {
        x[k] = rng.symmetric();
    }
    return x;
}

}  // namespace kaluza
