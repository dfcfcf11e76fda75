#pragma once

#include "h4/quaternion.hpp"

#include <random>

namespace h4::testing {

// Small random field elements with components in [-range, range] / den.
inline GoldenScalar random_scalar(std::mt19937& rng, int range = 9, int den_max = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, den_max);
    auto q = [&] { return mpq_class(num(rng), den(rng)); };
    return GoldenScalar(q(), q(), q(), q());
}

inline Quaternion random_quaternion(std::mt19937& rng) {
    return {random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

}  // namespace h4::testing
