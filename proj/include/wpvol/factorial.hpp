#ifndef WPVOL_FACTORIAL_HPP
#define WPVOL_FACTORIAL_HPP

#include "wpvol/rational.hpp"

namespace wpvol {

/// n! for n >= 0, memoized process-wide.
Integer factorial(int n);

/// (2k-1)!! for k >= 0, with (-1)!! = 1. Memoized process-wide.
Integer odd_double_factorial(int k);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(int n, int k);

}  // namespace wpvol

#endif  // WPVOL_FACTORIAL_HPP
