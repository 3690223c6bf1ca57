#include "slopes/chain.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace slopes {

namespace {

const std::array<Fraction, 4> kFundCorners = {
    Fraction::infinity(), Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)};

bool in_fundamental(const Fraction& v) {
    return std::find(kFundCorners.begin(), kFundCorners.end(), v) != kFundCorners.end();
}

Quad fundamental_quad() {
    return Quad{{Fraction::infinity(), Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)}};
}

}  // namespace

EdgeKind edge_kind(const Fraction& a, const Fraction& b) {
    if (!is_farey_neighbor(a, b))
        throw bad_fraction("not a Farey edge: " + a.str() + ", " + b.str());
    return (a.is_knot() && b.is_knot()) ? EdgeKind::C_type : EdgeKind::A_type;
}

bool Quad::has_corner(const Fraction& v) const {
    return std::find(corners.begin(), corners.end(), v) != corners.end();
}

bool Quad::has_perimeter_edge(const Fraction& x, const Fraction& y) const {
    for (int i = 0; i < 4; ++i) {
        const Fraction& a = corners[i];
        const Fraction& b = corners[(i + 1) % 4];
        if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
}

bool Quad::has_edge(const Fraction& x, const Fraction& y) const {
    if (has_perimeter_edge(x, y)) return true;
    return (diag_a() == x && diag_b() == y) || (diag_a() == y && diag_b() == x);
}

std::array<std::array<Fraction, 3>, 2> Quad::triangles() const {
    return {{{corners[0], corners[1], corners[3]}, {corners[1], corners[2], corners[3]}}};
}

Quad Quad::from_attach_edge(const Fraction& odd_vertex, const Fraction& even_vertex) {
    if (!odd_vertex.is_knot() || !even_vertex.has_even_den())
        throw bad_fraction("attach edge must join odd and even denominators");
    Fraction r = mediant(odd_vertex, even_vertex);
    Fraction s = mediant(odd_vertex, r);
    return Quad{{even_vertex, odd_vertex, s, r}};
}

std::vector<Fraction> QuadChain::vertex_set() const {
    std::set<Fraction> vs;
    for (const Quad& q : quads)
        for (const Fraction& c : q.corners) vs.insert(c);
    return {vs.begin(), vs.end()};
}

bool QuadChain::contains_edge(const Fraction& x, const Fraction& y) const {
    for (const Quad& q : quads)
        if (q.has_edge(x, y)) return true;
    return false;
}

std::vector<std::array<Fraction, 3>> QuadChain::triangles() const {
    std::vector<std::array<Fraction, 3>> ts;
    for (const Quad& q : quads) {
        auto pair = q.triangles();
        ts.push_back(pair[0]);
        ts.push_back(pair[1]);
    }
    return ts;
}

QuadChain quad_chain(const Fraction& target) {
    if (target.is_infinity() || target.num() < 0 || target.num() > target.den())
        throw bad_fraction("chain target must lie in [0,1]: " + target.str());
    QuadChain chain;
    chain.target = target;
    if (target.den() == 1) return chain;  // 0/1 and 1/1: empty chain

    std::vector<Quad> rev;
    std::vector<std::pair<Fraction, Fraction>> rev_attach;
    Fraction v = target;
    while (!in_fundamental(v)) {
        Fraction p(0, 1), q_even(0, 1);
        if (v.is_knot()) {
            auto [lo, hi] = parents(v);
            p = lo.is_knot() ? lo : hi;
            q_even = lo.is_knot() ? hi : lo;
        } else {
            auto [lo, hi] = parents(v);  // both knots
            Fraction r = (lo.den() > hi.den()) ? lo : hi;
            p = (lo.den() > hi.den()) ? hi : lo;
            auto [rl, rh] = parents(r);
            q_even = (rl == p) ? rh : rl;
        }
        rev.push_back(Quad::from_attach_edge(p, q_even));
        rev_attach.emplace_back(p, q_even);
        if (in_fundamental(p) && in_fundamental(q_even)) break;
        v = (p.den() > q_even.den() || q_even.is_infinity()) ? p : q_even;
    }
    chain.quads.push_back(fundamental_quad());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) chain.quads.push_back(*it);
    for (auto it = rev_attach.rbegin(); it != rev_attach.rend(); ++it)
        chain.attach_edges.push_back(*it);
    return chain;
}

namespace {

// Splits the boundary cycle of the chain at 1/0 and the target; returns the
// two arcs, each running from 1/0 to the target.
std::pair<std::vector<Fraction>, std::vector<Fraction>> boundary_arcs(const QuadChain& chain) {
    if (chain.quads.empty()) {
        std::vector<Fraction> arc = {Fraction::infinity(), chain.target};
        return {arc, arc};
    }
    // Boundary edges appear in exactly one quad perimeter.
    std::map<Fraction, std::vector<Fraction>> adj;
    std::map<std::pair<Fraction, Fraction>, int> count;
    auto key = [](const Fraction& a, const Fraction& b) {
        return (a < b) ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const Quad& q : chain.quads)
        for (int i = 0; i < 4; ++i)
            ++count[key(q.corners[i], q.corners[(i + 1) % 4])];
    for (const auto& [e, c] : count) {
        if (c == 1) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    }
    for (const auto& [v, ns] : adj)
        if (ns.size() != 2)
            throw std::logic_error("chain boundary is not a cycle at " + v.str());

    std::vector<Fraction> cycle;
    Fraction start = Fraction::infinity();
    Fraction prev = start, cur = adj.at(start)[0];
    cycle.push_back(start);
    while (cur != start) {
        cycle.push_back(cur);
        const auto& ns = adj.at(cur);
        Fraction next = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = next;
    }
    auto tpos = std::find(cycle.begin(), cycle.end(), chain.target);
    if (tpos == cycle.end())
        throw std::logic_error("target not on chain boundary");
    std::vector<Fraction> arc1(cycle.begin(), tpos + 1);
    std::vector<Fraction> arc2;
    arc2.push_back(cycle.front());
    for (auto it = cycle.rbegin(); *it != chain.target; ++it) arc2.push_back(*it);
    arc2.push_back(chain.target);
    return {arc1, arc2};
}

bool contains(const std::vector<Fraction>& vs, const Fraction& f) {
    return std::find(vs.begin(), vs.end(), f) != vs.end();
}

}  // namespace

std::vector<Fraction> lower_perimeter(const QuadChain& chain) {
    auto [a, b] = boundary_arcs(chain);
    if (chain.quads.empty()) return a;
    return contains(a, Fraction(0, 1)) ? a : b;
}

std::vector<Fraction> upper_perimeter(const QuadChain& chain) {
    auto [a, b] = boundary_arcs(chain);
    if (chain.quads.empty()) return a;
    return contains(a, Fraction(1, 1)) ? a : b;
}

}  // namespace slopes
