#include "slopes/path.hpp"

#include <set>

namespace slopes {

namespace {

// Raw (sign-carrying) vertex used by the continued-fraction recurrence
// s_{i+1} = b_{i+1} s_i - s_{i-1} with s_{-1} = (-1,0), s_0 = (r,1).
struct Raw {
    Int p, q;
};

}  // namespace

EdgePath EdgePath::from_vertices(std::vector<Fraction> vertices) {
    if (vertices.size() < 2) throw bad_path("path needs at least two vertices");
    if (!vertices.front().is_infinity()) throw bad_path("path must start at 1/0");
    if (vertices[1].den() != 1)
        throw bad_path("second vertex must be an integer, got " + vertices[1].str());
    std::set<Fraction> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw bad_path("path revisits a vertex");

    EdgePath path;
    path.r_ = vertices[1].num();
    Raw prev2{-1, 0};
    Raw prev{path.r_, 1};
    for (std::size_t i = 2; i < vertices.size(); ++i) {
        const Fraction& v = vertices[i];
        // pick the sign with det(prev, raw) = -1
        Int d = prev.p * v.den() - v.num() * prev.q;
        Raw raw{v.num(), v.den()};
        if (d == 1) {
            raw.p = -raw.p;
            raw.q = -raw.q;
        } else if (d != -1) {
            throw bad_path("vertices " + vertices[i - 1].str() + ", " + v.str() +
                           " are not Farey neighbors");
        }
        Int b;
        if (prev.p != 0) {
            b = (raw.p + prev2.p) / prev.p;
        } else {
            b = (raw.q + prev2.q) / prev.q;
        }
        if (b * prev.p - prev2.p != raw.p || b * prev.q - prev2.q != raw.q)
            throw bad_path("no turning number fits at vertex " + v.str());
        if (b == 0) throw bad_path("zero turning number at vertex " + v.str());
        path.turns_.push_back(b);
        prev2 = prev;
        prev = raw;
    }
    path.vertices_ = std::move(vertices);
    return path;
}

EdgePath EdgePath::from_turning(Int r, std::vector<Int> turns) {
    std::vector<Fraction> vertices;
    vertices.push_back(Fraction::infinity());
    vertices.push_back(Fraction(r, 1));
    Raw prev2{-1, 0};
    Raw prev{r, 1};
    for (const Int& b : turns) {
        if (b == 0) throw bad_path("zero turning number");
        Raw next{b * prev.p - prev2.p, b * prev.q - prev2.q};
        if (next.q == 0) throw bad_path("degenerate partial sum (hits 1/0)");
        vertices.push_back(Fraction(next.p, next.q));
        prev2 = prev;
        prev = next;
    }
    // Re-validate through from_vertices (catches repeats) and keep the
    // canonical turning data it derives.
    EdgePath path = from_vertices(std::move(vertices));
    if (path.turns_ != turns)
        throw bad_path("turning sequence does not describe an edge path");
    return path;
}

Int EdgePath::m() const {
    Int sum = 0;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (vertices_[i].is_infinity() || vertices_[i + 1].is_infinity()) continue;
        sum += det(vertices_[i], vertices_[i + 1]);
    }
    return sum;
}

std::pair<int, int> EdgePath::n_plus_minus() const {
    int plus = 0, minus = 0;
    for (const Int& b : turns_) (b > 0 ? plus : minus)++;
    return {plus, minus};
}

bool EdgePath::is_minimal() const {
    for (const Int& b : turns_)
        if (b == 1 || b == -1) return false;
    return true;
}

bool EdgePath::is_even() const {
    for (const Int& b : turns_)
        if (b % 2 != 0) return false;
    return true;
}

EdgePath EdgePath::extended(const Fraction& v) const {
    std::vector<Fraction> vs = vertices_;
    vs.push_back(v);
    return from_vertices(std::move(vs));
}

}  // namespace slopes
