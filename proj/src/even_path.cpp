#include "slopes/even_path.hpp"

namespace slopes {

const EdgePath& EvenPathCache::knot(const Fraction& f) {
    if (!f.is_knot() || f.is_infinity())
        throw bad_fraction("even_path_knot needs an odd denominator, got " + f.str());
    auto it = knots_.find(f);
    if (it != knots_.end()) return it->second;

    if (f.den() == 1) {
        if (f.num() != 0 && f.num() != 1)
            throw bad_fraction("knot fraction out of range: " + f.str());
        return knots_.emplace(f, EdgePath::from_vertices({Fraction::infinity(), f}))
            .first->second;
    }
    auto [lo, hi] = parents(f);
    const Fraction& link_parent = lo.is_link() ? lo : hi;
    const auto& [e0, e1] = link(link_parent);
    EdgePath cand0 = e0.extended(f);
    EdgePath cand1 = e1.extended(f);
    bool even0 = cand0.turns().back() % 2 == 0;
    bool even1 = cand1.turns().back() % 2 == 0;
    if (even0 == even1)
        throw std::logic_error("even-path extension is not unique at " + f.str());
    return knots_.emplace(f, even0 ? cand0 : cand1).first->second;
}

const std::pair<EdgePath, EdgePath>& EvenPathCache::link(const Fraction& f) {
    if (!f.is_link())
        throw bad_fraction("even_paths_link needs an even denominator, got " + f.str());
    auto it = links_.find(f);
    if (it != links_.end()) return it->second;

    auto [lo, hi] = parents(f);  // both parents are knots, of opposite numerator parity
    const Fraction& even_num = (lo.num() % 2 == 0) ? lo : hi;
    const Fraction& odd_num = (lo.num() % 2 == 0) ? hi : lo;
    EdgePath e0 = knot(even_num).extended(f);
    EdgePath e1 = knot(odd_num).extended(f);
    if (!e0.is_even() || !e1.is_even())
        throw std::logic_error("even-path extension lost evenness at " + f.str());
    return links_.emplace(f, std::make_pair(std::move(e0), std::move(e1))).first->second;
}

EdgePath even_path_knot(const Fraction& f) {
    EvenPathCache cache;
    return cache.knot(f);
}

std::pair<EdgePath, EdgePath> even_paths_link(const Fraction& f) {
    EvenPathCache cache;
    return cache.link(f);
}

}  // namespace slopes
