#pragma once

#include <cstdint>

#include "lab/poly_map.hpp"

namespace covdim::lab {

// Maximum Jacobian rank over `trials` random integer points. This equals the
// dimension of the image closure unless every sample hits a proper subvariety.
std::size_t image_dimension(const PolyMap& phi, std::uint64_t seed = 1, unsigned trials = 3);

// Dimension of the image in the product of the projective spaces of the
// codomain blocks, via one affine chart per block at each sampled point.
// Throws ChartDegenerate when every sample makes some block vanish.
std::size_t projective_image_dimension(const PolyMap& phi, std::uint64_t seed = 1, unsigned trials = 3);

}  // namespace covdim::lab
