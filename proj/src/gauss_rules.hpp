#pragma once

#include <vector>

namespace rtoa::detail {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]. Results are cached per order; the cache is
// immutable after insert and safe for concurrent readers.
const GaussRule& gauss_legendre(int n);

// Gauss-Laguerre rule for weight e^-y on [0, inf), via the Golub-Welsch
// eigenvalue method. Cached like the Legendre rules.
const GaussRule& gauss_laguerre(int n);

}  // namespace rtoa::detail
