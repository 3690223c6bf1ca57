#include <doctest.h>

#include <algorithm>

#include "slopes/chain.hpp"

using namespace slopes;

namespace {
Fraction fr(long n, long d) { return make_fraction(n, d); }
const Fraction inf = Fraction::infinity();
}

TEST_CASE("edge kinds: diagonals join two odd denominators") {
    CHECK(edge_kind(fr(0, 1), fr(1, 2)) == EdgeKind::A_type);
    CHECK(edge_kind(inf, fr(0, 1)) == EdgeKind::A_type);
    CHECK(edge_kind(fr(1, 3), fr(1, 2)) == EdgeKind::A_type);
    CHECK(edge_kind(fr(0, 1), fr(1, 1)) == EdgeKind::C_type);
    CHECK(edge_kind(fr(1, 3), fr(2, 5)) == EdgeKind::C_type);
}

TEST_CASE("quad built from an attach edge") {
    Quad q = Quad::from_attach_edge(fr(0, 1), fr(1, 2));
    CHECK(q.has_corner(fr(0, 1)));
    CHECK(q.has_corner(fr(1, 2)));
    CHECK(q.has_edge(q.diag_a(), q.diag_b()));
    CHECK_FALSE(q.has_perimeter_edge(q.diag_a(), q.diag_b()));
    CHECK(edge_kind(q.diag_a(), q.diag_b()) == EdgeKind::C_type);
    for (int i = 0; i < 4; ++i)
        CHECK(is_farey_neighbor(q.corners[i], q.corners[(i + 1) % 4]));
}

TEST_CASE("quad chain for 2/5") {
    QuadChain chain = quad_chain(fr(2, 5));
    REQUIRE(chain.quads.size() == 3);

    const Quad& fund = chain.quads[0];
    CHECK(fund.has_corner(inf));
    CHECK(fund.has_corner(fr(0, 1)));
    CHECK(fund.has_corner(fr(1, 2)));
    CHECK(fund.has_corner(fr(1, 1)));

    CHECK(chain.quads[1].has_corner(fr(1, 2)));
    CHECK(chain.quads[1].has_corner(fr(0, 1)));
    CHECK(chain.quads[1].has_corner(fr(1, 4)));
    CHECK(chain.quads[1].has_corner(fr(1, 3)));

    CHECK(chain.quads[2].has_corner(fr(1, 2)));
    CHECK(chain.quads[2].has_corner(fr(1, 3)));
    CHECK(chain.quads[2].has_corner(fr(3, 8)));
    CHECK(chain.quads[2].has_corner(fr(2, 5)));

    CHECK(chain.target == fr(2, 5));
    REQUIRE(chain.attach_edges.size() == 2);
    for (std::size_t i = 0; i + 1 < chain.quads.size(); ++i) {
        const auto& [a, b] = chain.attach_edges[i];
        CHECK(chain.quads[i].has_edge(a, b));
        CHECK(chain.quads[i + 1].has_edge(a, b));
    }
}

TEST_CASE("quad chain sizes and membership") {
    CHECK(quad_chain(fr(13, 34)).quads.size() == 5);
    CHECK(quad_chain(fr(1, 2)).quads.size() == 1);
    CHECK(quad_chain(fr(0, 1)).quads.empty());
    CHECK(quad_chain(fr(1, 1)).quads.empty());

    QuadChain chain = quad_chain(fr(3, 8));
    CHECK(chain.contains_edge(fr(1, 3), fr(3, 8)));
    CHECK(chain.contains_edge(fr(3, 8), fr(1, 3)));
    CHECK_FALSE(chain.contains_edge(fr(1, 4), fr(3, 8)));
    auto verts = chain.vertex_set();
    CHECK(std::find(verts.begin(), verts.end(), fr(3, 8)) != verts.end());
    CHECK(std::find(verts.begin(), verts.end(), inf) != verts.end());
    CHECK(chain.triangles().size() == 2 * chain.quads.size());
}

TEST_CASE("every chain quad contains the target only at the end") {
    QuadChain chain = quad_chain(fr(13, 34));
    CHECK(chain.quads.back().has_corner(fr(13, 34)));
    for (std::size_t i = 0; i + 1 < chain.quads.size(); ++i)
        CHECK_FALSE(chain.quads[i].has_corner(fr(13, 34)));
}

TEST_CASE("perimeter walks run from 1/0 to the target") {
    QuadChain chain = quad_chain(fr(2, 5));
    auto low = lower_perimeter(chain);
    auto up = upper_perimeter(chain);
    CHECK(low.front() == inf);
    CHECK(low.back() == fr(2, 5));
    CHECK(up.front() == inf);
    CHECK(up.back() == fr(2, 5));
    // both walks consist of chain edges
    for (std::size_t i = 0; i + 1 < low.size(); ++i)
        CHECK(chain.contains_edge(low[i], low[i + 1]));
    for (std::size_t i = 0; i + 1 < up.size(); ++i)
        CHECK(chain.contains_edge(up[i], up[i + 1]));
}
