#pragma once
// Complex log-gamma (principal branch) and helpers.

#include "heegner/arith.hpp"

namespace heegner {

// Principal branch, relative error ~1e-13 for |z| <= 1e6, poles excluded.
cdbl log_gamma(cdbl z);
cdbl gamma_fn(cdbl z);

// |Gamma(1+it)| = sqrt(pi t / sinh(pi t)), computed stably (t real).
long double abs_gamma_one_plus_it(long double t);

} // namespace heegner
