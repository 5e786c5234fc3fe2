#pragma once

#include <cstdint>

#include "pcc/graph.hpp"

namespace pcc {

// The sharp instance: a rainbow complete graph X of size delta, an
// independent set Y of size n-delta, and for each x_i in X one fresh colour
// on all edges from x_i into Y. Every vertex has colour degree exactly delta,
// yet vertex-disjoint properly coloured cycles span at most 3*delta/2
// vertices. Rainbow colours are 0..C(delta,2)-1; the star colour of x_i is
// C(delta,2)+i. Requires delta >= 1 and 3*delta < 2n (strict).
EdgeColouredGraph gen_extremal(int n, int delta);

struct GenSpec {
    enum class Kind { Extremal, RandomComplete, RandomGnp };
    Kind kind = Kind::RandomComplete;
    int n = 0;
    int delta = 0;        // Extremal
    int colours = 0;      // RandomComplete: colour pool size; 0 = n-1
    int mono_cap = 1;     // RandomComplete: max same-coloured edges per vertex
    double p = 0.5;       // RandomGnp
    int gnp_colours = 0;  // RandomGnp: 0 = rainbow, else uniform over pool
    std::uint64_t seed = 0;
};

// Deterministic under spec.seed. RandomComplete colours every K_n edge
// subject to the per-vertex monochromatic cap (which bounds max_mono_degree
// from above, hence delta1 from below: delta1 >= n-1-mono_cap). Throws
// std::invalid_argument when the cap and pool cannot colour K_n.
EdgeColouredGraph gen_random(const GenSpec& spec);

}  // namespace pcc
