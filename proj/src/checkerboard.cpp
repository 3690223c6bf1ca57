#include "slopes/checkerboard.hpp"

#include <algorithm>
#include <numeric>

#include "slopes/minimal.hpp"

namespace slopes {

namespace {

void validate(const LinkDiagram& d) {
    if (d.n_components < 1) throw bad_diagram("diagram needs at least one component");
    if (d.crossings.empty()) throw bad_diagram("diagram has no crossings");
    std::vector<bool> seen(static_cast<std::size_t>(d.n_components), false);
    for (const Crossing& c : d.crossings) {
        if (c.over < 1 || c.over > d.n_components || c.under < 1 || c.under > d.n_components)
            throw bad_diagram("crossing component index out of range");
        if (c.sign != 1 && c.sign != -1) throw bad_diagram("crossing sign must be +1 or -1");
        seen[static_cast<std::size_t>(c.over - 1)] = true;
        seen[static_cast<std::size_t>(c.under - 1)] = true;
    }
    if (d.n_components >= 2 &&
        !std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw bad_diagram("some component appears in no crossing");
}

}  // namespace

CheckerboardSlopes checkerboard_slopes(const LinkDiagram& d) {
    validate(d);
    std::size_t n = static_cast<std::size_t>(d.n_components);
    std::vector<Int> alpha(n, 0), pos(n, 0), neg(n, 0);
    for (const Crossing& c : d.crossings) {
        std::size_t i = static_cast<std::size_t>(c.over - 1);
        if (c.over != c.under) {
            ++alpha[i];
        } else if (c.sign > 0) {
            ++pos[i];
        } else {
            ++neg[i];
        }
    }
    CheckerboardSlopes cs;
    cs.s.reserve(n);
    cs.t.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        cs.s.push_back(alpha[i] + 2 * pos[i]);
        cs.t.push_back(-alpha[i] - 2 * neg[i]);
    }
    return cs;
}

std::pair<bool, bool> is_diagonal(const CheckerboardSlopes& cs) {
    auto constant = [](const std::vector<Int>& v) {
        return std::all_of(v.begin(), v.end(), [&v](const Int& x) { return x == v.front(); });
    };
    return {constant(cs.s), constant(cs.t)};
}

bool slope_sum_identity(const LinkDiagram& d) {
    CheckerboardSlopes cs = checkerboard_slopes(d);
    Int sum = 0;
    for (std::size_t i = 0; i < cs.s.size(); ++i) sum += cs.s[i] - cs.t[i];
    return abs(sum) == 2 * Int(d.crossings.size());
}

CheckerboardSlopes mirrored(const CheckerboardSlopes& cs) {
    CheckerboardSlopes out;
    out.s.reserve(cs.t.size());
    out.t.reserve(cs.s.size());
    for (const Int& t : cs.t) out.s.push_back(-t);
    for (const Int& s : cs.s) out.t.push_back(-s);
    return out;
}

LinkDiagram mirrored(const LinkDiagram& d) {
    LinkDiagram out = d;
    for (Crossing& c : out.crossings) {
        std::swap(c.over, c.under);
        c.sign = -c.sign;
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Crossing between the strands of two adjacent vertical lanes.  The sign is
// read from the two tangent directions (down-moving left strand heads
// right-down, etc.); it is orientation-dependent only at mixed crossings.
int crossing_sign(bool left_is_over, bool left_down, bool right_down) {
    int lx = left_down ? 1 : -1, ly = left_down ? -1 : 1;
    int rx = right_down ? -1 : 1, ry = right_down ? -1 : 1;
    int ox = left_is_over ? lx : rx, oy = left_is_over ? ly : ry;
    int ux = left_is_over ? rx : lx, uy = left_is_over ? ry : ly;
    return (ox * uy - oy * ux) > 0 ? 1 : -1;
}

struct RawCrossing {
    int left_strand, right_strand;
    bool left_over;
};

// Assigns 1-based component ids in order of first strand appearance.
std::vector<int> component_ids(UnionFind& uf, int n_strands, int* n_components) {
    std::vector<int> comp(static_cast<std::size_t>(n_strands), 0);
    std::vector<int> root_id;
    for (int s = 0; s < n_strands; ++s) {
        int r = uf.find(s);
        auto it = std::find(root_id.begin(), root_id.end(), r);
        if (it == root_id.end()) {
            root_id.push_back(r);
            comp[static_cast<std::size_t>(s)] = static_cast<int>(root_id.size());
        } else {
            comp[static_cast<std::size_t>(s)] =
                static_cast<int>(it - root_id.begin()) + 1;
        }
    }
    *n_components = static_cast<int>(root_id.size());
    return comp;
}

LinkDiagram assemble(const std::vector<RawCrossing>& raw, const std::vector<int>& comp,
                     const std::vector<bool>& down, int n_components) {
    LinkDiagram d;
    d.n_components = n_components;
    d.reduced_alternating = true;
    d.crossings.reserve(raw.size());
    for (const RawCrossing& rc : raw) {
        Crossing c;
        int over_strand = rc.left_over ? rc.left_strand : rc.right_strand;
        int under_strand = rc.left_over ? rc.right_strand : rc.left_strand;
        c.over = comp[static_cast<std::size_t>(over_strand)];
        c.under = comp[static_cast<std::size_t>(under_strand)];
        c.sign = crossing_sign(rc.left_over, down[static_cast<std::size_t>(rc.left_strand)],
                               down[static_cast<std::size_t>(rc.right_strand)]);
        d.crossings.push_back(c);
    }
    return d;
}

}  // namespace

LinkDiagram four_plat_diagram(const Fraction& target) {
    EdgePath alt = alternating_turning_path(target);
    std::vector<Int> region_counts;
    for (const Int& b : alt.turns()) region_counts.push_back(abs(b));
    // The plat closure below caps columns (0,1) and (2,3) at both ends, which
    // is correct only when the twist regions start and end on the middle
    // columns.  An even-length expansion is padded by splitting the last
    // region; the crossing count is unchanged.
    if (region_counts.size() % 2 == 0) {
        region_counts.back() -= 1;
        region_counts.push_back(1);
    }

    // Plat closure of a 4-strand braid: strand ids persist through crossings,
    // only their columns change.  Twist region r uses columns (1,2) when r is
    // odd, (0,1) when even; the left strand is the over strand in odd regions.
    std::array<int, 4> at_col = {0, 1, 2, 3};
    std::vector<RawCrossing> raw;
    for (std::size_t r = 0; r < region_counts.size(); ++r) {
        int c = (r % 2 == 0) ? 1 : 0;
        bool left_over = (r % 2 == 0);
        const Int& count = region_counts[r];
        for (Int k = 0; k < count; ++k) {
            raw.push_back({at_col[static_cast<std::size_t>(c)],
                           at_col[static_cast<std::size_t>(c + 1)], left_over});
            std::swap(at_col[static_cast<std::size_t>(c)],
                      at_col[static_cast<std::size_t>(c + 1)]);
        }
    }

    // Caps join columns (0,1) and (2,3) at both ends.
    std::array<int, 4> final_col_of;
    for (int c = 0; c < 4; ++c) final_col_of[static_cast<std::size_t>(at_col[static_cast<std::size_t>(c)])] = c;

    UnionFind uf(4);
    uf.unite(0, 1);
    uf.unite(2, 3);
    uf.unite(at_col[0], at_col[1]);
    uf.unite(at_col[2], at_col[3]);

    // Walk each component to orient its strands; crossing a cap reverses the
    // vertical direction.
    std::vector<bool> down(4, false), visited(4, false);
    for (int start = 0; start < 4; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int s = start;
        bool dir_down = true;
        while (!visited[static_cast<std::size_t>(s)]) {
            visited[static_cast<std::size_t>(s)] = true;
            down[static_cast<std::size_t>(s)] = dir_down;
            int next;
            if (dir_down) {
                int fc = final_col_of[static_cast<std::size_t>(s)];
                next = at_col[static_cast<std::size_t>(fc ^ 1)];
            } else {
                next = s ^ 1;  // top caps pair strands (0,1) and (2,3)
            }
            s = next;
            dir_down = !dir_down;
        }
    }

    int n_components = 0;
    std::vector<int> comp = component_ids(uf, 4, &n_components);
    return assemble(raw, comp, down, n_components);
}

LinkDiagram pretzel_diagram(const std::vector<int>& twists) {
    if (twists.empty()) throw bad_diagram("pretzel needs at least one twist region");
    bool positive = twists.front() > 0;
    for (int t : twists) {
        if (t == 0) throw bad_diagram("pretzel twist counts must be nonzero");
        if ((t > 0) != positive)
            throw bad_diagram("pretzel twist counts must all have the same sign");
    }

    // Region r holds strands 2r (entering top-left) and 2r+1 (top-right).
    // A region with an odd twist count swaps which strand exits at which
    // bottom corner.  Top arcs join TR_r to TL_{r+1}, bottom arcs BR_r to
    // BL_{r+1}, cyclically.
    int m = static_cast<int>(twists.size());
    auto exit_bl = [&](int r) {
        return twists[static_cast<std::size_t>(r)] % 2 == 0 ? 2 * r : 2 * r + 1;
    };
    auto exit_br = [&](int r) {
        return twists[static_cast<std::size_t>(r)] % 2 == 0 ? 2 * r + 1 : 2 * r;
    };

    std::vector<RawCrossing> raw;
    for (int r = 0; r < m; ++r) {
        int left = 2 * r, right = 2 * r + 1;
        int count = std::abs(twists[static_cast<std::size_t>(r)]);
        for (int k = 0; k < count; ++k) {
            raw.push_back({left, right, positive});
            std::swap(left, right);
        }
    }

    UnionFind uf(2 * m);
    for (int r = 0; r < m; ++r) {
        int nr = (r + 1) % m;
        uf.unite(2 * r + 1, 2 * nr);          // TR_r ~ TL_{r+1}
        uf.unite(exit_br(r), exit_bl(nr));    // BR_r ~ BL_{r+1}
    }

    std::vector<bool> down(static_cast<std::size_t>(2 * m), false);
    std::vector<bool> visited(static_cast<std::size_t>(2 * m), false);
    auto bottom_partner = [&](int s) {
        int r = s / 2;
        if (s == exit_bl(r)) return exit_br((r - 1 + m) % m);
        return exit_bl((r + 1) % m);
    };
    auto top_partner = [&](int s) {
        int r = s / 2;
        if (s % 2 == 0) return 2 * ((r - 1 + m) % m) + 1;  // TL_r ~ TR_{r-1}
        return 2 * ((r + 1) % m);                          // TR_r ~ TL_{r+1}
    };
    for (int start = 0; start < 2 * m; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int s = start;
        bool dir_down = true;
        while (!visited[static_cast<std::size_t>(s)]) {
            visited[static_cast<std::size_t>(s)] = true;
            down[static_cast<std::size_t>(s)] = dir_down;
            s = dir_down ? bottom_partner(s) : top_partner(s);
            dir_down = !dir_down;
        }
    }

    int n_components = 0;
    std::vector<int> comp = component_ids(uf, 2 * m, &n_components);
    return assemble(raw, comp, down, n_components);
}

}  // namespace slopes
