#ifndef SLOPES_FRACTION_HPP
#define SLOPES_FRACTION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace slopes {

using Int = boost::multiprecision::cpp_int;

struct bad_fraction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reduced rational p/q with q >= 0.  The only value with q = 0 is 1/0,
// the point at infinity of the Farey diagram.  Sign lives in the numerator.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int n, Int d);

    static Fraction infinity() { return Fraction(unchecked{}, 1, 0); }
    static Fraction parse(const std::string& s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    bool has_even_den() const { return den_ % 2 == 0; }  // 1/0 counts as even
    bool is_link() const { return den_ != 0 && den_ % 2 == 0; }
    bool is_knot() const { return den_ % 2 != 0; }

    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    // Numeric order with 1/0 treated as +infinity.
    friend bool operator<(const Fraction& a, const Fraction& b) {
        if (a.is_infinity()) return false;
        if (b.is_infinity()) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }

private:
    struct unchecked {};
    Fraction(unchecked, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}
    Int num_;
    Int den_;
};

inline Fraction make_fraction(Int n, Int d) { return Fraction(std::move(n), std::move(d)); }

// num(f)*den(g) - num(g)*den(f); antisymmetric.
Int det(const Fraction& f, const Fraction& g);

bool is_farey_neighbor(const Fraction& f, const Fraction& g);

// (num(f)+num(g)) / (den(f)+den(g)); inputs must be Farey neighbors.
Fraction mediant(const Fraction& f, const Fraction& g);

// The unique Farey-neighbor pair (lo, hi) with lo < f < hi and mediant = f.
// Defined for f in (0,1) and for 1/1 (whose parents are 0/1 and 1/0).
std::pair<Fraction, Fraction> parents(const Fraction& f);

}  // namespace slopes

#endif
