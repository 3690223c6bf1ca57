#include "slopes/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "slopes/checkerboard.hpp"
#include "slopes/even_path.hpp"
#include "slopes/minimal.hpp"
#include "slopes/slope.hpp"
#include "slopes/survey.hpp"

namespace slopes {

namespace {

Int sigma0_or_zero(const Fraction& f) { return f.den() <= 1 ? Int(0) : sigma0(f); }
Int sigma1_or_zero(const Fraction& f) { return f.den() <= 1 ? Int(0) : sigma1(f); }

int pow_m1(const Int& e) { return e % 2 == 0 ? 1 : -1; }

// Fills the even-path cache for every target up front, so the parallel
// sweeps below only ever read it.
void warm_even_paths(EvenPathCache& cache, const std::vector<Fraction>& targets) {
    for (const Fraction& f : targets) {
        if (f.is_knot())
            cache.knot(f);
        else
            cache.link(f);
    }
}

// Per-fraction identity checks; returns a description of the first failure.
std::string check_fraction(const Fraction& f, const VerifyHooks& hooks,
                           EvenPathCache& cache) {
    std::ostringstream bad;
    const Int& p = f.num();
    const Int& q = f.den();

    QuadChain chain = quad_chain(f);
    EdgePath lower = lower_minimal_path(chain);
    EdgePath upper = upper_minimal_path(chain);
    for (std::size_t i = 1; i + 1 < lower.vertices().size(); ++i)
        if (det(lower.vertices()[i], lower.vertices()[i + 1]) != -1) {
            bad << "lower extreme path of " << f.str() << " has an edge of determinant != -1";
            return bad.str();
        }
    for (std::size_t i = 1; i + 1 < upper.vertices().size(); ++i)
        if (det(upper.vertices()[i], upper.vertices()[i + 1]) != 1) {
            bad << "upper extreme path of " << f.str() << " has an edge of determinant != +1";
            return bad.str();
        }

    for (const EdgePath& path : enumerate_minimal_paths(chain)) {
        auto [np, nm] = path.n_plus_minus();
        if (-path.m() != Int(np) - nm) {
            bad << "minimal path to " << f.str() << " violates -m = n+ - n-";
            return bad.str();
        }
    }

    for (Int i = 1; i < q - 1; ++i)
        if (epsilon(f, i) != pow_m1(p + 1) * epsilon(f, q - i)) {
            bad << "epsilon palindrome fails at " << f.str() << ", i=" << i;
            return bad.str();
        }

    if (q % 2 != 0 && sigma0(f) != pow_m1(p + 1) * sigma1(f)) {
        bad << "odd-q sigma relation fails at " << f.str();
        return bad.str();
    }

    auto [lo, hi] = parents(f);
    for (const Fraction* par : {&lo, &hi})
        for (Int i = 1; i < par->den(); ++i)
            if (epsilon(*par, i) != epsilon(f, i)) {
                bad << "parent epsilon agreement fails at " << f.str() << ", parent "
                    << par->str() << ", i=" << i;
                return bad.str();
            }

    // Mediant recursions for the sigma sums, child against parents.
    Int s0 = sigma0(f) + hooks.sigma0_offset;
    Int s1 = sigma1(f);
    bool recursion_ok;
    if (q % 2 == 0) {
        recursion_ok = s0 == sigma0_or_zero(lo) + sigma0_or_zero(hi) &&
                       s1 == sigma1_or_zero(lo) + sigma1_or_zero(hi) + pow_m1(lo.num());
    } else {
        const Fraction& odd_den = lo.den() % 2 != 0 ? lo : hi;
        const Fraction& other = lo.den() % 2 != 0 ? hi : lo;
        recursion_ok =
            s0 == sigma0_or_zero(odd_den) + pow_m1(p + 1) * sigma1_or_zero(other);
    }
    if (!recursion_ok) {
        bad << "mediant sigma recursion fails at " << f.str() << " with parents "
            << lo.str() << ", " << hi.str();
        return bad.str();
    }

    if (f.is_knot()) {
        if (cache.knot(f).m() != 2 * sigma0(f)) {
            bad << "even-path m identity m(e) = 2*sigma0 fails at " << f.str();
            return bad.str();
        }
    } else {
        const auto& [e0, e1] = cache.link(f);
        if (e0.m() != sigma0(f) - sigma1(f) || e1.m() != sigma0(f) + sigma1(f)) {
            bad << "even-path m identities fail at " << f.str();
            return bad.str();
        }
    }
    return {};
}

std::string sweep(const Int& max_q,
                  const std::function<std::string(const Fraction&)>& check) {
    std::vector<Fraction> targets = survey_targets(max_q < 2 ? Int(2) : max_q);
    if (max_q < 2) targets.clear();
    std::string failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(targets.size()); ++i) {
        bool skip;
#pragma omp critical
        skip = !failure.empty();
        if (skip) continue;
        std::string bad = check(targets[static_cast<std::size_t>(i)]);
        if (!bad.empty()) {
#pragma omp critical
            if (failure.empty()) failure = bad;
        }
    }
    return failure;
}

// Applies one random applicable triangle move; returns the side used, or
// nothing if no applicable move was found in a bounded number of attempts.
std::optional<Side> random_move(EdgePath& path,
                                const std::vector<std::array<Fraction, 3>>& tris,
                                const QuadChain& chain, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Side side = coin(rng) == 0 ? Side::left : Side::right;
        try {
            path = triangle_move(path, tris[pick(rng)], side, chain);
            return side;
        } catch (const bad_path&) {
        }
    }
    return std::nullopt;
}

Fraction random_target(const std::vector<Fraction>& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

}  // namespace

VerifyResult verify_lemmas(const Int& max_q, std::uint64_t random_paths,
                           std::uint64_t seed, const VerifyHooks& hooks) {
    EvenPathCache cache;
    if (max_q >= 2) warm_even_paths(cache, survey_targets(max_q));
    std::string failure = sweep(max_q, [&hooks, &cache](const Fraction& f) {
        return check_fraction(f, hooks, cache);
    });
    if (failure.empty() && max_q >= 2 && random_paths > 0) {
        // -m = n+ - n- also holds for non-minimal paths; probe with random
        // one-edge-to-two-edges insertions along the lower extreme path.
        std::mt19937_64 rng(seed);
        std::vector<Fraction> pool = survey_targets(max_q);
        std::uniform_int_distribution<int> walk_len(1, 8);
        std::uint64_t generated = 0;
        while (generated < random_paths && failure.empty()) {
            Fraction f = random_target(pool, rng);
            QuadChain chain = quad_chain(f);
            // apexes of the triangles over each chain edge
            std::map<std::pair<Fraction, Fraction>, std::vector<Fraction>> apexes;
            for (const auto& tri : chain.triangles())
                for (int e = 0; e < 3; ++e) {
                    const Fraction& a = tri[static_cast<std::size_t>(e)];
                    const Fraction& b = tri[static_cast<std::size_t>((e + 1) % 3)];
                    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
                    apexes[key].push_back(tri[static_cast<std::size_t>((e + 2) % 3)]);
                }
            std::vector<Fraction> base = lower_minimal_path(chain).vertices();
            for (int rep = 0; rep < 8 && generated < random_paths && failure.empty();
                 ++rep) {
                std::vector<Fraction> vs = base;
                int steps = walk_len(rng);
                for (int s = 0; s < steps; ++s) {
                    std::uniform_int_distribution<std::size_t> edge(0, vs.size() - 2);
                    std::size_t i = edge(rng);
                    auto key = vs[i] < vs[i + 1] ? std::make_pair(vs[i], vs[i + 1])
                                                 : std::make_pair(vs[i + 1], vs[i]);
                    auto it = apexes.find(key);
                    if (it == apexes.end()) continue;
                    std::uniform_int_distribution<std::size_t> pick(0, it->second.size() - 1);
                    const Fraction& apex = it->second[pick(rng)];
                    if (std::find(vs.begin(), vs.end(), apex) != vs.end()) continue;
                    vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, apex);
                }
                EdgePath path = EdgePath::from_vertices(vs);
                auto [np, nm] = path.n_plus_minus();
                if (-path.m() != Int(np) - nm)
                    failure = "a path to " + f.str() + " violates -m = n+ - n-";
                ++generated;
            }
        }
    }
    return {failure.empty(), failure};
}

VerifyResult verify_theorems(const Int& max_q, std::uint64_t cap) {
    EvenPathCache cache;
    if (max_q >= 2) warm_even_paths(cache, survey_targets(max_q));
    std::string failure = sweep(max_q, [cap, &cache](const Fraction& f) -> std::string {
        try {
            // slope_report already cross-checks the three slope formulas and
            // the two crossing-number computations internally.
            SlopeReport rep = slope_report(f, cap, cache);
            if (rep.components * (rep.slope_max - rep.slope_min) != 2 * rep.crossing_number)
                return "diameter identity fails at " + f.str();
            QuadChain chain = quad_chain(f);
            EdgePath lower = lower_minimal_path(chain);
            EdgePath upper = upper_minimal_path(chain);
            if (upper.m() != Int(upper.edge_count()) - 1 ||
                lower.m() != -(Int(lower.edge_count()) - 1))
                return "extreme path m values fail at " + f.str();
            if (upper.m() - lower.m() != rep.crossing_number)
                return "crossing number cross-check fails at " + f.str();
        } catch (const internal_inconsistency& e) {
            return std::string(e.what());
        }
        return {};
    });
    return {failure.empty(), failure};
}

VerifyResult verify_triangle_moves(std::uint64_t samples, const Int& max_q,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Fraction> pool = survey_targets(max_q);
    std::uint64_t done = 0;
    while (done < samples) {
        Fraction f = random_target(pool, rng);
        QuadChain chain = quad_chain(f);
        auto tris = chain.triangles();
        EdgePath path = lower_minimal_path(chain);
        // a handful of moves per chain before resampling the target
        for (int s = 0; s < 16 && done < samples; ++s) {
            Int before = path.m();
            auto side = random_move(path, tris, chain, rng);
            if (!side) break;
            Int delta = path.m() - before;
            if (delta != (*side == Side::left ? 1 : -1))
                return {false, "triangle move at " + f.str() + " changed m by " +
                                   delta.str() + " instead of " +
                                   (*side == Side::left ? "+1" : "-1")};
            ++done;
        }
    }
    return {true, {}};
}

VerifyResult verify_even_census(const Int& max_q) {
    EvenPathCache shared;
    if (max_q >= 2) warm_even_paths(shared, survey_targets(max_q));
    std::string failure = sweep(max_q, [&shared](const Fraction& f) -> std::string {
        std::vector<EdgePath> evens;
        for (const EdgePath& path : enumerate_minimal_paths(f))
            if (path.is_even()) evens.push_back(path);
        for (const EdgePath& path : evens)
            for (std::size_t i = 0; i + 1 < path.vertices().size(); ++i)
                if (edge_kind(path.vertices()[i], path.vertices()[i + 1]) == EdgeKind::C_type)
                    return "even path to " + f.str() + " contains a diagonal edge";
        EvenPathCache& cache = shared;
        auto [lo, hi] = parents(f);
        if (f.is_knot()) {
            if (evens.size() != 1) return "even path count at knot " + f.str() + " is not 1";
            if (!(evens.front() == cache.knot(f)))
                return "even path at " + f.str() + " does not match the construction";
        } else {
            if (evens.size() != 2) return "even path count at link " + f.str() + " is not 2";
            const auto& [e0, e1] = cache.link(f);
            bool found0 = evens[0] == e0 || evens[1] == e0;
            bool found1 = evens[0] == e1 || evens[1] == e1;
            if (!found0 || !found1)
                return "even paths at " + f.str() + " do not match the construction";
            const Fraction& via0 = e0.vertices()[e0.vertices().size() - 2];
            const Fraction& via1 = e1.vertices()[e1.vertices().size() - 2];
            const Fraction& even_num = lo.num() % 2 == 0 ? lo : hi;
            const Fraction& odd_num = lo.num() % 2 == 0 ? hi : lo;
            if (via0 != even_num || via1 != odd_num)
                return "even path parity labels at " + f.str() + " are wrong";
        }
        return {};
    });
    return {failure.empty(), failure};
}

namespace {

std::string check_diagram(const LinkDiagram& d, const std::string& what) {
    if (!slope_sum_identity(d))
        return "checkerboard slope sum identity fails for " + what;
    CheckerboardSlopes cs = checkerboard_slopes(d);
    auto [s_diag, t_diag] = is_diagonal(cs);
    if (s_diag && t_diag) {
        Int span = Int(d.n_components) * (cs.s.front() - cs.t.front());
        if (span < 2 * Int(d.crossings.size()))
            return "diagonal checkerboard span below twice the crossing count for " + what;
    }
    return {};
}

void pretzel_lists(int budget, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (int t = 1; t <= budget; ++t) {
        cur.push_back(t);
        pretzel_lists(budget - t, cur, out);
        cur.pop_back();
    }
}

}  // namespace

VerifyResult verify_checkerboard(const Int& max_q, int max_pretzel_crossings) {
    std::string failure = sweep(max_q, [](const Fraction& f) -> std::string {
        LinkDiagram d = four_plat_diagram(f);
        std::string bad = check_diagram(d, "4-plat of " + f.str());
        if (!bad.empty()) return bad;
        if ((f.den() % 2 == 0) != (d.n_components == 2))
            return "4-plat of " + f.str() + " has the wrong component count";
        CheckerboardSlopes cs = checkerboard_slopes(d);
        if (f.is_knot()) {
            if (cs.s.front() - cs.t.front() != 2 * Int(d.crossings.size()))
                return "knot 4-plat of " + f.str() + " misses s - t = 2 * crossings";
        } else {
            // the diagram and the minimal-path engine must agree on size
            if (Int(d.crossings.size()) != crossing_number(f))
                return "4-plat of " + f.str() + " has the wrong crossing count";
        }
        return {};
    });
    if (!failure.empty()) return {false, failure};

    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    pretzel_lists(max_pretzel_crossings, cur, lists);
    for (const std::vector<int>& twists : lists) {
        for (int sign : {1, -1}) {
            std::vector<int> signed_twists = twists;
            for (int& t : signed_twists) t *= sign;
            std::ostringstream what;
            what << "pretzel (";
            for (std::size_t i = 0; i < signed_twists.size(); ++i)
                what << (i ? "," : "") << signed_twists[i];
            what << ")";
            std::string bad = check_diagram(pretzel_diagram(signed_twists), what.str());
            if (!bad.empty()) return {false, bad};
        }
    }
    return {true, {}};
}

VerifyResult verify_all(const Int& max_q, const VerifyHooks& hooks) {
    VerifyResult r = verify_lemmas(max_q, 10000, 20260826, hooks);
    if (!r.ok) return r;
    r = verify_theorems(max_q);
    if (!r.ok) return r;
    r = verify_even_census(max_q);
    if (!r.ok) return r;
    r = verify_triangle_moves(10000, max_q < 100 ? max_q : Int(100));
    if (!r.ok) return r;
    Int cb_q = max_q < 50 ? max_q : Int(50);
    return verify_checkerboard(cb_q, 10);
}

}  // namespace slopes
