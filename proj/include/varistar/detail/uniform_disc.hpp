#pragma once

#include <random>

namespace varistar {

template <class Rng>
cplx uniform_in_disc(Rng& rng, double radius) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (;;) {
        const double x = unit(rng);
        const double y = unit(rng);
        if (x * x + y * y <= 1.0) {
            return radius * cplx{x, y};
        }
    }
}

} // namespace varistar
