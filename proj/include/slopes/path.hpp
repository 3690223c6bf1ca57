#ifndef SLOPES_PATH_HPP
#define SLOPES_PATH_HPP

#include <utility>
#include <vector>

#include "slopes/fraction.hpp"

namespace slopes {

struct bad_path : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An edge path in the Farey diagram from 1/0 to its last vertex.  The vertex
// list and the signed continued-fraction data (r, b_1..b_k) determine each
// other; both are kept.  Vertex i+1 is the partial sum r+[b_1,...,b_i].
class EdgePath {
public:
    static EdgePath from_vertices(std::vector<Fraction> vertices);
    static EdgePath from_turning(Int r, std::vector<Int> turns);

    const std::vector<Fraction>& vertices() const { return vertices_; }
    const Int& r() const { return r_; }
    const std::vector<Int>& turns() const { return turns_; }
    const Fraction& target() const { return vertices_.back(); }
    std::size_t edge_count() const { return vertices_.size() - 1; }

    // Sum of edge determinants, excluding edges containing 1/0.
    Int m() const;
    // Counts of positive and negative turning numbers.
    std::pair<int, int> n_plus_minus() const;
    bool is_minimal() const;  // all |b_i| >= 2
    bool is_even() const;     // all b_i even

    // Appends one vertex, extending the turning sequence by one entry.
    EdgePath extended(const Fraction& v) const;

    friend bool operator==(const EdgePath& a, const EdgePath& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    EdgePath() = default;
    std::vector<Fraction> vertices_;
    Int r_ = 0;
    std::vector<Int> turns_;
};

}  // namespace slopes

#endif
