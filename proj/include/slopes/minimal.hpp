#ifndef SLOPES_MINIMAL_HPP
#define SLOPES_MINIMAL_HPP

#include <array>
#include <cstdint>

#include "slopes/chain.hpp"
#include "slopes/path.hpp"

namespace slopes {

// Perimeter walk of the quad chain with the even-denominator fix-up applied:
// wherever two consecutive perimeter edges of one quad meet in a vertex of
// even denominator, they are replaced by that quad's diagonal.
EdgePath lower_minimal_path(const Fraction& target);
EdgePath upper_minimal_path(const Fraction& target);
EdgePath lower_minimal_path(const QuadChain& chain);
EdgePath upper_minimal_path(const QuadChain& chain);

enum class Side { left, right };

// Side of apex w relative to the directed edge x -> y, in the upper
// half-plane picture (vertices on the real axis, 1/0 at infinity).
Side apex_side(const Fraction& x, const Fraction& y, const Fraction& w);

// Replaces one path edge of the triangle by the other two (or two by one),
// for a triangle of the chain adjacent to the path on the given side.
// A left move raises m by exactly 1, a right move lowers it by 1.
EdgePath triangle_move(const EdgePath& path, const std::array<Fraction, 3>& triangle,
                       Side side, const QuadChain& chain);
EdgePath triangle_move(const EdgePath& path, const std::array<Fraction, 3>& triangle,
                       Side side);

struct enumeration_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All minimal paths from 1/0 to the target, in lexicographic (r, turns)
// order.  Throws enumeration_cap_exceeded when more than cap paths exist.
std::vector<EdgePath> enumerate_minimal_paths(const Fraction& target,
                                              std::uint64_t cap = 1000000);
std::vector<EdgePath> enumerate_minimal_paths(const QuadChain& chain,
                                              std::uint64_t cap = 1000000);

// Path count without materializing paths.
Int count_minimal_paths(const Fraction& target);

// The path whose turning numbers alternate in sign, read off the positive
// continued-fraction expansion; its |b_i| sum to the crossing number and it
// encodes the standard alternating 4-plat diagram.
EdgePath alternating_turning_path(const Fraction& target);

}  // namespace slopes

#endif
