#ifndef SLOPES_VERIFY_HPP
#define SLOPES_VERIFY_HPP

#include <cstdint>
#include <string>

#include "slopes/fraction.hpp"

namespace slopes {

struct VerifyResult {
    bool ok = true;
    std::string counterexample;  // empty when ok
};

// Fault injection for testing the verifier itself: the offset is added to
// one side of the mediant sigma recursion check.
struct VerifyHooks {
    Int sigma0_offset = 0;
};

// Identities of the sign sums and extreme paths, exhaustive over reduced
// p/q with q <= max_q: extreme-path edge determinants, m against the count
// of positive and negative turns (minimal paths plus random non-minimal
// ones), the epsilon palindrome, the odd-q sigma relation, parent epsilon
// agreement, the mediant sigma recursions, and the even-path m values.
VerifyResult verify_lemmas(const Int& max_q, std::uint64_t random_paths = 10000,
                           std::uint64_t seed = 20260826,
                           const VerifyHooks& hooks = {});

// Slope-formula agreement on every minimal path, the diameter identity
// n * (slope_max - slope_min) = 2 * crossing number, and the two
// crossing-number computations, exhaustive over q <= max_q.
VerifyResult verify_theorems(const Int& max_q, std::uint64_t cap = 1000000);

// Random triangle moves: each applied move changes m by +1 (left) or -1
// (right).  Runs until `samples` moves have been applied.
VerifyResult verify_triangle_moves(std::uint64_t samples, const Int& max_q = 100,
                                   std::uint64_t seed = 20260826);

// Exactly one even minimal path per knot fraction and two per link
// fraction, with correct parent-parity labels and no diagonal edges.
VerifyResult verify_even_census(const Int& max_q);

// Checkerboard identities: |sum(s_i - t_i)| = 2 * crossings on every
// generated 4-plat with q <= max_q and every same-sign pretzel with at most
// max_pretzel_crossings crossings; knot 4-plats satisfy s - t = 2 * cr.
VerifyResult verify_checkerboard(const Int& max_q = 200, int max_pretzel_crossings = 12);

VerifyResult verify_all(const Int& max_q, const VerifyHooks& hooks = {});

}  // namespace slopes

#endif
