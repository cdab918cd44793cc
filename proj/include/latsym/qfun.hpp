#pragma once

#include "latsym/ring_elem.hpp"

namespace latsym {

// q^e as a ring element; negative exponents give 1/q^|e|.
RingElem q_power(int e);

// (a; q)_k = prod_{j=0}^{k-1} (1 - a q^j); k = 0 gives 1. Requires k >= 0.
RingElem q_pochhammer(const RingElem& a, int k);

// Gaussian binomial (a choose b)_q = (q;q)_a / ((q;q)_{a-b} (q;q)_b) as a
// polynomial in q; 0 when b < 0 or b > a. Requires a >= 0. Cached.
RingElem q_binomial(int a, int b);

// (q; q)_k.
RingElem q_factorial(int k);

// Degree-`degree` truncation of 1/(z;q)_infinity = sum_k z^k/(q;q)_k.
// Exact coefficients, rational in q.
RingElem q_exp_inverse_series(const RingElem& z, int degree);

} // namespace latsym
