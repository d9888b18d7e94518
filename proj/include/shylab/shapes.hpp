#ifndef SHYLAB_SHAPES_HPP
#define SHYLAB_SHAPES_HPP

#include "shylab/digital_core.hpp"

namespace shylab {

// Digital interval [a, b] in Z under c_1: the digital line segment.
DigitalImage make_interval(int a, int b);

// Path on n points, the interval [0, n-1].
DigitalImage make_path(int n);

// Cycle on n >= 3 points as an explicit cycle graph with 1-D labels
// 0..n-1 and edges i ~ i+1 mod n.
DigitalImage make_cycle(int n);

// Star with `rays` rays of `len` points each hanging off a center; point 0
// is the center.
DigitalImage make_star(int rays, int len);

}  // namespace shylab

#endif
