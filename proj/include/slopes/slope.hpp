#ifndef SLOPES_SLOPE_HPP
#define SLOPES_SLOPE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "slopes/even_path.hpp"
#include "slopes/minimal.hpp"
#include "slopes/path.hpp"

namespace slopes {

// Raised when the boundary-slope formulas that must agree do not; always an
// implementation bug, never user error.
struct internal_inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// epsilon_i(p/q) = (-1)^floor(i p / q), for 0 < i < q.
int epsilon(const Fraction& f, const Int& i);

// Sums of the even- and odd-index epsilons.
Int sigma0(const Fraction& f);
Int sigma1(const Fraction& f);

// Boundary slope of the surface carried by a minimal path, evaluated through
// all three formulas (turning-number form, m-form with even-path correction,
// m-form with sigma0 correction), which must agree exactly.  Knot slopes are
// even integers; link slopes are integers.
Int slope_of_path(const EdgePath& path, const Fraction& target, EvenPathCache& cache);
Int slope_of_path(const EdgePath& path, const Fraction& target);

// Crossing number computed two independent ways (extreme-path m difference
// and the alternating-sign turning numbers), asserted equal.
Int crossing_number(const Fraction& target);

// sigma1; only the absolute value is orientation-convention free.
Int linking_number(const Fraction& target);

struct PathSlope {
    EdgePath path;
    Int slope;
};

struct SlopeReport {
    Fraction fraction;
    int components = 1;  // 1 knot, 2 link
    std::vector<PathSlope> slopes;
    Int slope_min, slope_max;
    Int diameter;
    Int crossing_number;
    std::optional<Int> linking_number;  // links only
    Int sigma0, sigma1;
    Int path_count;
    bool truncated = false;  // slopes limited to the extreme paths
};

SlopeReport slope_report(const Fraction& target, std::uint64_t cap = 1000000);
// Variant sharing a memoized even-path cache across many targets.
SlopeReport slope_report(const Fraction& target, std::uint64_t cap, EvenPathCache& cache);

}  // namespace slopes

#endif
