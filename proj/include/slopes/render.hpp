#ifndef SLOPES_RENDER_HPP
#define SLOPES_RENDER_HPP

#include <string>

#include "slopes/fraction.hpp"

namespace slopes {

enum class RenderPaths { all, extremes, even };

// Upper half-plane picture of the quadrilateral chain: vertices on the real
// axis at their rational values, edges as semicircles (vertical rays for
// edges through 1/0), quads shaded, requested paths overlaid.  Output is
// deterministic for fixed inputs.
std::string render_svg(const Fraction& target, RenderPaths mode = RenderPaths::extremes);

}  // namespace slopes

#endif
