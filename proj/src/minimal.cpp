#include "slopes/minimal.hpp"

#include <algorithm>
#include <map>

namespace slopes {

namespace {

std::vector<Fraction> fix_perimeter(const QuadChain& chain, const std::vector<Fraction>& arc) {
    std::vector<Fraction> out;
    out.push_back(arc.front());
    for (std::size_t i = 1; i + 1 < arc.size(); ++i) {
        if (arc[i].has_even_den() && !arc[i].is_infinity()) {
            bool drop = false;
            for (const Quad& q : chain.quads) {
                if (q.has_perimeter_edge(arc[i - 1], arc[i]) &&
                    q.has_perimeter_edge(arc[i], arc[i + 1])) {
                    drop = true;
                    break;
                }
            }
            if (drop) continue;
        }
        out.push_back(arc[i]);
    }
    out.push_back(arc.back());
    return out;
}

}  // namespace

EdgePath lower_minimal_path(const QuadChain& chain) {
    return EdgePath::from_vertices(fix_perimeter(chain, lower_perimeter(chain)));
}

EdgePath upper_minimal_path(const QuadChain& chain) {
    return EdgePath::from_vertices(fix_perimeter(chain, upper_perimeter(chain)));
}

EdgePath lower_minimal_path(const Fraction& target) {
    return lower_minimal_path(quad_chain(target));
}

EdgePath upper_minimal_path(const Fraction& target) {
    return upper_minimal_path(quad_chain(target));
}

Side apex_side(const Fraction& x, const Fraction& y, const Fraction& w) {
    if (x.is_infinity()) {
        // travelling down the vertical line at y
        return (y < w) ? Side::left : Side::right;
    }
    if (y.is_infinity()) {
        // travelling up the vertical line at x
        return (w < x) ? Side::left : Side::right;
    }
    if (w.is_infinity()) return (x < y) ? Side::left : Side::right;
    if (x < y) {
        // along the semicircle left-to-right: the outside of the half-disk
        // is on the left
        return (w < x || y < w) ? Side::left : Side::right;
    }
    return (y < w && w < x) ? Side::left : Side::right;
}

namespace {

std::array<Fraction, 3> sorted_tri(std::array<Fraction, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

bool tri_in_chain(const std::array<Fraction, 3>& tri, const QuadChain& chain) {
    auto want = sorted_tri(tri);
    for (const auto& t : chain.triangles())
        if (sorted_tri(t) == want) return true;
    return false;
}

bool tri_has_edge(const std::array<Fraction, 3>& tri, const Fraction& a, const Fraction& b) {
    int hits = 0;
    for (const Fraction& v : tri) hits += (v == a) + (v == b);
    return hits == 2 && a != b;
}

}  // namespace

EdgePath triangle_move(const EdgePath& path, const std::array<Fraction, 3>& triangle,
                       Side side, const QuadChain& chain) {
    if (!tri_in_chain(triangle, chain))
        throw bad_path("triangle is not part of the chain");
    const auto& vs = path.vertices();
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (tri_has_edge(triangle, vs[i], vs[i + 1])) on.push_back(i);

    if (on.size() == 2 && on[1] == on[0] + 1) {
        // two edges -> one: remove the middle vertex
        std::size_t i = on[0];
        Side actual = apex_side(vs[i], vs[i + 2], vs[i + 1]) == Side::left ? Side::right
                                                                           : Side::left;
        if (actual != side) throw bad_path("triangle lies on the other side of the path");
        std::vector<Fraction> out;
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (k != i + 1) out.push_back(vs[k]);
        return EdgePath::from_vertices(std::move(out));
    }
    if (on.size() == 1) {
        // one edge -> two: insert the opposite vertex
        std::size_t i = on[0];
        Fraction apex = triangle[0];
        for (const Fraction& v : triangle)
            if (v != vs[i] && v != vs[i + 1]) apex = v;
        if (std::find(vs.begin(), vs.end(), apex) != vs.end())
            throw bad_path("move would revisit " + apex.str());
        if (apex_side(vs[i], vs[i + 1], apex) != side)
            throw bad_path("triangle lies on the other side of the path");
        std::vector<Fraction> out(vs.begin(), vs.begin() + i + 1);
        out.push_back(apex);
        out.insert(out.end(), vs.begin() + i + 1, vs.end());
        return EdgePath::from_vertices(std::move(out));
    }
    throw bad_path("triangle is not adjacent to the path as required");
}

EdgePath triangle_move(const EdgePath& path, const std::array<Fraction, 3>& triangle,
                       Side side) {
    return triangle_move(path, triangle, side, quad_chain(path.target()));
}

namespace {

using Adjacency = std::map<Fraction, std::vector<Fraction>>;

Adjacency chain_adjacency(const QuadChain& chain) {
    Adjacency adj;
    auto add = [&adj](const Fraction& a, const Fraction& b) {
        auto& v = adj[a];
        if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
    };
    for (const Quad& q : chain.quads) {
        for (int i = 0; i < 4; ++i) {
            add(q.corners[i], q.corners[(i + 1) % 4]);
            add(q.corners[(i + 1) % 4], q.corners[i]);
        }
        add(q.diag_a(), q.diag_b());
        add(q.diag_b(), q.diag_a());
    }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
    return adj;
}

void dfs_minimal(const Adjacency& adj, const Fraction& target, std::uint64_t cap,
                 std::vector<Fraction>& cur, std::vector<EdgePath>& out) {
    const Fraction v = cur.back();  // copy: push_back below may reallocate cur
    if (v == target) {
        if (out.size() >= cap)
            throw enumeration_cap_exceeded("more than " + std::to_string(cap) +
                                           " minimal paths");
        out.push_back(EdgePath::from_vertices(cur));
        return;
    }
    const bool has_prev = cur.size() >= 2;
    const Fraction prev = has_prev ? cur[cur.size() - 2] : Fraction();
    for (const Fraction& u : adj.at(v)) {
        if (std::find(cur.begin(), cur.end(), u) != cur.end()) continue;
        // consecutive edges must not lie in one ideal triangle
        if (has_prev && is_farey_neighbor(prev, u)) continue;
        cur.push_back(u);
        dfs_minimal(adj, target, cap, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<EdgePath> enumerate_minimal_paths(const Fraction& target, std::uint64_t cap) {
    if (target.den() == 1)
        return {EdgePath::from_vertices({Fraction::infinity(), target})};
    return enumerate_minimal_paths(quad_chain(target), cap);
}

std::vector<EdgePath> enumerate_minimal_paths(const QuadChain& chain, std::uint64_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    const Fraction& target = chain.target;
    if (target.den() == 1)
        return {EdgePath::from_vertices({Fraction::infinity(), target})};
    Adjacency adj = chain_adjacency(chain);
    std::vector<Fraction> cur = {Fraction::infinity()};
    std::vector<EdgePath> out;
    dfs_minimal(adj, target, cap, cur, out);
    std::sort(out.begin(), out.end(), [](const EdgePath& a, const EdgePath& b) {
        if (a.r() != b.r()) return a.r() < b.r();
        return a.turns() < b.turns();
    });
    return out;
}

Int count_minimal_paths(const Fraction& target) {
    if (target.den() == 1) return 1;
    QuadChain chain = quad_chain(target);
    Adjacency adj = chain_adjacency(chain);
    std::map<std::pair<Fraction, Fraction>, Int> memo;
    // completions of a path arriving at v from prev
    auto count = [&](auto&& self, const Fraction& prev, const Fraction& v) -> Int {
        if (v == target) return 1;
        auto key = std::make_pair(prev, v);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (const Fraction& u : adj.at(v)) {
            if (u == prev) continue;
            // The triangle rule also forbids stepping back toward smaller
            // denominators, so paths cannot revisit vertices.
            if (is_farey_neighbor(prev, u)) continue;
            total += self(self, v, u);
        }
        memo[key] = total;
        return total;
    };
    Int total = 0;
    for (const Fraction& u : adj.at(Fraction::infinity()))
        total += count(count, Fraction::infinity(), u);
    return total;
}

EdgePath alternating_turning_path(const Fraction& target) {
    if (target.is_infinity() || target.num() <= 0 || target.num() >= target.den())
        throw bad_fraction("alternating path needs a target in (0,1)");
    // positive continued fraction of q/p by the remainder algorithm
    Int num = target.den(), den = target.num();
    std::vector<Int> turns;
    bool positive = true;
    while (den > 0) {
        Int a = num / den;
        turns.push_back(positive ? a : -a);
        positive = !positive;
        Int r = num - a * den;
        num = den;
        den = r;
    }
    return EdgePath::from_turning(0, std::move(turns));
}

}  // namespace slopes
