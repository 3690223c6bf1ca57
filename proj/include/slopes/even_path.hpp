#ifndef SLOPES_EVEN_PATH_HPP
#define SLOPES_EVEN_PATH_HPP

#include <map>
#include <utility>

#include "slopes/path.hpp"

namespace slopes {

// Memoized even-path construction by parent recursion.  A knot fraction has
// one even path e(p/q); a link fraction has two, e0 arriving through the
// even-numerator parent and e1 through the odd-numerator parent.
class EvenPathCache {
public:
    const EdgePath& knot(const Fraction& f);                        // odd denominator
    const std::pair<EdgePath, EdgePath>& link(const Fraction& f);   // even denominator

private:
    std::map<Fraction, EdgePath> knots_;
    std::map<Fraction, std::pair<EdgePath, EdgePath>> links_;
};

EdgePath even_path_knot(const Fraction& f);
std::pair<EdgePath, EdgePath> even_paths_link(const Fraction& f);

}  // namespace slopes

#endif
