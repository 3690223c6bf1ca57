#ifndef SLOPES_CHECKERBOARD_HPP
#define SLOPES_CHECKERBOARD_HPP

#include <utility>
#include <vector>

#include "slopes/fraction.hpp"

namespace slopes {

// One crossing of a link diagram.  Components are 1-based.  The sign matters
// to the slope formulas only at self-crossings; for mixed crossings it is
// recorded but unused.
struct Crossing {
    int over = 1;
    int under = 1;
    int sign = 1;
};

struct LinkDiagram {
    int n_components = 1;
    std::vector<Crossing> crossings;
    // Asserted by whoever built the diagram, not verified here: the crossing
    // list carries no planarity data.
    bool reduced_alternating = true;
};

// Boundary slopes of the two checkerboard surfaces, per component.  S is the
// surface with right-twisted bands, T the one with left-twisted bands.
struct CheckerboardSlopes {
    std::vector<Int> s;
    std::vector<Int> t;
};

struct bad_diagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// s_i = a_i + 2 P_i and t_i = -a_i - 2 N_i, where a_i counts crossings where
// component i passes over a different component and P_i / N_i count its
// positive / negative self-crossings.
CheckerboardSlopes checkerboard_slopes(const LinkDiagram& d);

// (all s_i equal, all t_i equal): whether each surface meets every boundary
// component in the same slope.
std::pair<bool, bool> is_diagonal(const CheckerboardSlopes& cs);

// |sum(s_i - t_i)| == 2 * crossing count; definitional, so a failure flags a
// malformed hand-entered diagram.
bool slope_sum_identity(const LinkDiagram& d);

// Mirror image: swaps the two surfaces and negates the slopes.
CheckerboardSlopes mirrored(const CheckerboardSlopes& cs);
LinkDiagram mirrored(const LinkDiagram& d);

// Standard alternating 4-plat closure of the braid read off the
// alternating-sign turning path of the target.
LinkDiagram four_plat_diagram(const Fraction& target);

// Pretzel diagram with the given vertical twist counts, all of one sign.
LinkDiagram pretzel_diagram(const std::vector<int>& twists);

}  // namespace slopes

#endif
