#include "slopes/slope.hpp"

#include <algorithm>

namespace slopes {

namespace {

void require_interior(const Fraction& f, const char* what) {
    if (f.is_infinity() || f.num() <= 0 || f.num() >= f.den())
        throw bad_fraction(std::string(what) + " needs a fraction strictly between 0 and 1, got " +
                           f.str());
}

}  // namespace

namespace {

// Denominators below 2^31 keep i * p inside 64 bits, so the sign sums can
// run on native integers instead of allocating big-integer temporaries.
constexpr std::int64_t kNativeLimit = std::int64_t(1) << 31;

bool native_ok(const Fraction& f) { return f.den() < kNativeLimit; }

int epsilon_native(std::int64_t p, std::int64_t q, std::int64_t i) {
    return (i * p / q) % 2 == 0 ? 1 : -1;
}

std::int64_t sigma_native(const Fraction& f, std::int64_t first) {
    std::int64_t p = f.num().convert_to<std::int64_t>();
    std::int64_t q = f.den().convert_to<std::int64_t>();
    std::int64_t s = 0;
    for (std::int64_t i = first; i < q; i += 2) s += epsilon_native(p, q, i);
    return s;
}

}  // namespace

int epsilon(const Fraction& f, const Int& i) {
    require_interior(f, "epsilon");
    if (i <= 0 || i >= f.den())
        throw std::invalid_argument("epsilon index out of range");
    if (native_ok(f))
        return epsilon_native(f.num().convert_to<std::int64_t>(),
                              f.den().convert_to<std::int64_t>(),
                              i.convert_to<std::int64_t>());
    return (i * f.num() / f.den()) % 2 == 0 ? 1 : -1;
}

Int sigma0(const Fraction& f) {
    require_interior(f, "sigma0");
    if (native_ok(f)) return sigma_native(f, 2);
    Int s = 0;
    for (Int i = 2; i < f.den(); i += 2) s += epsilon(f, i);
    return s;
}

Int sigma1(const Fraction& f) {
    require_interior(f, "sigma1");
    if (native_ok(f)) return sigma_native(f, 1);
    Int s = 0;
    for (Int i = 1; i < f.den(); i += 2) s += epsilon(f, i);
    return s;
}

Int slope_of_path(const EdgePath& path, const Fraction& target, EvenPathCache& cache) {
    require_interior(target, "slope_of_path");
    if (path.target() != target)
        throw bad_path("path does not end at " + target.str());
    if (!path.is_minimal())
        throw bad_path("slope is only defined for minimal paths");

    auto [np, nm] = path.n_plus_minus();
    Int d = Int(np) - nm;
    Int m = path.m();
    Int s0 = sigma0(target);

    // Each formula is evaluated doubled so the link case stays in integers.
    Int t1, t2, t3;
    if (target.is_knot()) {
        const EdgePath& e = cache.knot(target);
        auto [ep, em] = e.n_plus_minus();
        t1 = 4 * (d - (Int(ep) - em));
        t2 = -4 * (m - e.m());
        t3 = -4 * (m - 2 * s0);
    } else {
        const auto& [e0, e1] = cache.link(target);
        auto [p0, m0] = e0.n_plus_minus();
        auto [p1, m1] = e1.n_plus_minus();
        t1 = 2 * d - (Int(p0) - m0 + Int(p1) - m1);
        t2 = -(2 * m - (e0.m() + e1.m()));
        t3 = -2 * (m - s0);
    }
    if (t1 != t2 || t2 != t3)
        throw internal_inconsistency("slope formulas disagree at " + target.str());
    if (t1 % 2 != 0)
        throw internal_inconsistency("slope is not an integer at " + target.str());
    return t1 / 2;
}

Int slope_of_path(const EdgePath& path, const Fraction& target) {
    EvenPathCache cache;
    return slope_of_path(path, target, cache);
}

Int crossing_number(const Fraction& target) {
    require_interior(target, "crossing_number");
    QuadChain chain = quad_chain(target);
    Int via_extremes = upper_minimal_path(chain).m() - lower_minimal_path(chain).m();
    Int via_alternating = 0;
    EdgePath alt = alternating_turning_path(target);
    for (const Int& b : alt.turns()) via_alternating += abs(b);
    if (via_extremes != via_alternating)
        throw internal_inconsistency("crossing number computations disagree at " + target.str());
    return via_extremes;
}

Int linking_number(const Fraction& target) {
    require_interior(target, "linking_number");
    if (!target.is_link())
        throw bad_fraction("linking number needs a two-component (even denominator) fraction");
    return sigma1(target);
}

SlopeReport slope_report(const Fraction& target, std::uint64_t cap) {
    EvenPathCache cache;
    return slope_report(target, cap, cache);
}

SlopeReport slope_report(const Fraction& target, std::uint64_t cap, EvenPathCache& cache) {
    require_interior(target, "slope_report");
    SlopeReport rep;
    rep.fraction = target;
    rep.components = target.is_link() ? 2 : 1;
    rep.sigma0 = sigma0(target);
    rep.sigma1 = sigma1(target);
    rep.crossing_number = crossing_number(target);
    if (target.is_link()) rep.linking_number = rep.sigma1;

    std::vector<EdgePath> paths;
    try {
        paths = enumerate_minimal_paths(target, cap);
        rep.path_count = paths.size();
    } catch (const enumeration_cap_exceeded&) {
        // extreme paths alone still carry the exact slope range
        rep.truncated = true;
        rep.path_count = count_minimal_paths(target);
        paths.push_back(lower_minimal_path(target));
        paths.push_back(upper_minimal_path(target));
    }
    rep.slopes.reserve(paths.size());
    for (EdgePath& p : paths) {
        Int s = slope_of_path(p, target, cache);
        rep.slopes.push_back({std::move(p), std::move(s)});
    }
    rep.slope_min = rep.slopes.front().slope;
    rep.slope_max = rep.slopes.front().slope;
    for (const PathSlope& ps : rep.slopes) {
        rep.slope_min = std::min(rep.slope_min, ps.slope);
        rep.slope_max = std::max(rep.slope_max, ps.slope);
    }
    rep.diameter = rep.slope_max - rep.slope_min;
    if (rep.components * rep.diameter != 2 * rep.crossing_number)
        throw internal_inconsistency("slope diameter does not match the crossing number at " +
                                     target.str());
    return rep;
}

}  // namespace slopes
