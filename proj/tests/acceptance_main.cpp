// Acceptance checks: one pass/fail line per criterion, exact arithmetic
// throughout, with the wall-clock budget enforced where one applies.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "slopes/checkerboard.hpp"
#include "slopes/even_path.hpp"
#include "slopes/slope.hpp"
#include "slopes/verify.hpp"

using namespace slopes;

namespace {

Fraction fr(long n, long d) { return make_fraction(n, d); }

struct Outcome {
    bool ok;
    std::string detail;  // shown on failure
};

std::vector<Fraction> targets_up_to(long max_q) {
    std::vector<Fraction> out;
    for (long q = 2; q <= max_q; ++q)
        for (long p = 1; p < q; ++p)
            if (boost::multiprecision::gcd(Int(p), Int(q)) == 1) out.push_back(fr(p, q));
    return out;
}

// 1: the three slope formulas agree on every minimal path of every p/q
Outcome criterion1() {
    VerifyResult r = verify_theorems(300);
    return {r.ok, r.counterexample};
}

// 2: n * (slope_max - slope_min) = 2 * crossing number, via the extreme paths
Outcome criterion2() {
    EvenPathCache cache;
    for (const Fraction& f : targets_up_to(300)) {
        QuadChain chain = quad_chain(f);
        // slope falls as m rises, so the lower path carries the top slope
        Int top = slope_of_path(lower_minimal_path(chain), f, cache);
        Int bottom = slope_of_path(upper_minimal_path(chain), f, cache);
        Int n = f.is_link() ? 2 : 1;
        if (n * (top - bottom) != 2 * crossing_number(f))
            return {false, "diameter identity fails at " + f.str()};
    }
    return {true, ""};
}

// 3: the two crossing-number computations agree; 13/34 pins the expected path
Outcome criterion3() {
    for (const Fraction& f : targets_up_to(300)) {
        try {
            crossing_number(f);  // throws if the two computations disagree
        } catch (const internal_inconsistency& e) {
            return {false, e.what()};
        }
    }
    if (crossing_number(fr(13, 34)) != 8) return {false, "crossing number of 13/34 is not 8"};
    EdgePath alt = alternating_turning_path(fr(13, 34));
    std::vector<Int> want = {2, -1, 1, -1, 1, -2};
    if (alt.r() != 0 || alt.turns() != want)
        return {false, "alternating path of 13/34 has unexpected turns"};
    return {true, ""};
}

// 4: sign-sum and path identities, exhaustive q <= 500 plus random paths
Outcome criterion4() {
    VerifyResult r = verify_lemmas(500, 10000);
    return {r.ok, r.counterexample};
}

// 5: random triangle moves change m by +1 on the left, -1 on the right
Outcome criterion5() {
    VerifyResult r = verify_triangle_moves(100000);
    return {r.ok, r.counterexample};
}

// 6: spot checks against the named knots and links
Outcome criterion6() {
    auto slopes_of = [](const SlopeReport& rep) {
        std::vector<Int> out;
        for (const PathSlope& ps : rep.slopes) out.push_back(ps.slope);
        std::sort(out.begin(), out.end());
        return out;
    };

    SlopeReport hopf = slope_report(fr(1, 2));
    if (slopes_of(hopf) != std::vector<Int>{-1, 1} || hopf.diameter != 2 ||
        !hopf.linking_number || *hopf.linking_number != 1)
        return {false, "Hopf link report is wrong"};

    SlopeReport trefoil = slope_report(fr(1, 3));
    if (slopes_of(trefoil) != std::vector<Int>{0, 6} || trefoil.diameter != 6)
        return {false, "trefoil report is wrong"};

    SlopeReport fig8 = slope_report(fr(2, 5));
    if (slopes_of(fig8) != std::vector<Int>{-4, 0, 4} || fig8.diameter != 8 ||
        fig8.path_count != 3)
        return {false, "figure-eight report is wrong"};

    SlopeReport wh = slope_report(fr(3, 8));
    if (wh.diameter != 5 || wh.sigma1 != 0) return {false, "Whitehead link report is wrong"};
    return {true, ""};
}

// 7: checkerboard slopes on generated 4-plats and pretzels
Outcome criterion7() {
    VerifyResult r = verify_checkerboard(200, 12);
    if (!r.ok) return {false, r.counterexample};

    CheckerboardSlopes wh = checkerboard_slopes(four_plat_diagram(fr(3, 8)));
    auto matches = [](const CheckerboardSlopes& cs) {
        std::vector<Int> t = cs.t;
        std::sort(t.begin(), t.end());
        return t == std::vector<Int>{-4, -2};
    };
    if (!matches(wh) && !matches(mirrored(wh)))
        return {false, "Whitehead 4-plat checkerboard slopes are not {-4,-2} up to mirror"};

    CheckerboardSlopes pz = checkerboard_slopes(pretzel_diagram({3, 2, 3, 2, 3, 2}));
    auto [s_diag, t_diag] = is_diagonal(pz);
    if (!s_diag || !t_diag) return {false, "(3,2)^3 pretzel surfaces are not both diagonal"};
    std::vector<Int> pair = {pz.s.front(), pz.t.front()};
    std::sort(pair.begin(), pair.end());
    std::vector<Int> mir = {-pair[1], -pair[0]};
    std::vector<Int> want = {-2, 8};
    if (pair != want && mir != want)
        return {false, "(3,2)^3 pretzel slopes are not {-2,8} up to mirror"};
    if (3 * (pz.s.front() - pz.t.front()) != 2 * 15)
        return {false, "(3,2)^3 pretzel diameter identity fails"};
    return {true, ""};
}

// 8: even-path census with parity labels and no diagonal edges
Outcome criterion8() {
    VerifyResult r = verify_even_census(300);
    return {r.ok, r.counterexample};
}

}  // namespace

int main() {
    struct Crit {
        const char* name;
        std::function<Outcome()> run;
        double budget_s;  // 0 = no bound
    };
    const Crit criteria[] = {
        {"slope formulas agree on all minimal paths, q <= 300", criterion1, 60.0},
        {"n * diameter = 2 * crossing number, q <= 300", criterion2, 60.0},
        {"crossing-number computations agree, q <= 300", criterion3, 0.0},
        {"sign-sum and path identities, q <= 500 + random paths", criterion4, 120.0},
        {"100000 random triangle moves change m by exactly 1", criterion5, 0.0},
        {"named knot and link spot checks", criterion6, 0.0},
        {"checkerboard slopes on 4-plats and pretzels", criterion7, 0.0},
        {"even-path census with parity labels, q <= 300", criterion8, 0.0},
    };

    int failures = 0;
    int idx = 0;
    for (const Crit& c : criteria) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool in_budget = c.budget_s == 0.0 || secs < c.budget_s;
        bool ok = out.ok && in_budget;
        std::printf("%s  criterion %d: %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", idx, c.name,
                    secs, out.ok ? "" : (" -- " + out.detail).c_str(),
                    in_budget ? "" : " -- over time budget");
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
