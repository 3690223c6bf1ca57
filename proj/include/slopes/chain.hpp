#ifndef SLOPES_CHAIN_HPP
#define SLOPES_CHAIN_HPP

#include <array>
#include <optional>
#include <vector>

#include "slopes/fraction.hpp"

namespace slopes {

enum class EdgeKind { A_type, C_type };

// C-type edges are quadrilateral diagonals: both endpoint denominators odd.
EdgeKind edge_kind(const Fraction& a, const Fraction& b);

// One G-translate of the fundamental quadrilateral {1/0, 0/1, 1/2, 1/1}.
// Corners are kept in the counter-clockwise order (a/c, b/d, (a+2b)/(c+2d),
// (a+b)/(c+d)); the diagonal joins corners 1 and 3.
struct Quad {
    std::array<Fraction, 4> corners;

    const Fraction& diag_a() const { return corners[1]; }
    const Fraction& diag_b() const { return corners[3]; }
    bool has_corner(const Fraction& v) const;
    bool has_perimeter_edge(const Fraction& x, const Fraction& y) const;
    bool has_edge(const Fraction& x, const Fraction& y) const;  // perimeter or diagonal

    // The two ideal triangles separated by the diagonal.
    std::array<std::array<Fraction, 3>, 2> triangles() const;

    // Quad generated by the attach edge {odd-den vertex, even-den vertex}.
    static Quad from_attach_edge(const Fraction& odd_vertex, const Fraction& even_vertex);
};

struct QuadChain {
    Fraction target;
    std::vector<Quad> quads;
    // attach_edges[i] is the edge shared by quads[i] and quads[i+1].
    std::vector<std::pair<Fraction, Fraction>> attach_edges;

    std::vector<Fraction> vertex_set() const;
    bool contains_edge(const Fraction& x, const Fraction& y) const;
    // All ideal triangles of the chain (two per quad).
    std::vector<std::array<Fraction, 3>> triangles() const;
};

// Minimal chain of quadrilaterals from 1/0 to target, built by parent descent.
// Targets 0/1 and 1/1 yield an empty chain.
QuadChain quad_chain(const Fraction& target);

// Counter-clockwise (lower) and clockwise (upper) perimeter walks of the
// chain from 1/0 to target, before the minimality fix-up.
std::vector<Fraction> lower_perimeter(const QuadChain& chain);
std::vector<Fraction> upper_perimeter(const QuadChain& chain);

}  // namespace slopes

#endif
