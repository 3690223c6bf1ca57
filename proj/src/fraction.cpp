#include "slopes/fraction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace slopes {

using boost::multiprecision::gcd;

Fraction::Fraction(Int n, Int d) {
    if (n == 0 && d == 0) throw bad_fraction("fraction 0/0 is undefined");
    if (d == 0) {
        if (n < 0) throw bad_fraction("negative infinity is not a vertex");
        num_ = 1;
        den_ = 0;
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = gcd(abs(n), d);
    num_ = n / g;
    den_ = d / g;
}

Fraction Fraction::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Fraction(Int(s), 1);
        return Fraction(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw bad_fraction("cannot parse fraction: " + s);
    }
}

std::string Fraction::str() const {
    return num_.str() + "/" + den_.str();
}

Int det(const Fraction& f, const Fraction& g) {
    return f.num() * g.den() - g.num() * f.den();
}

bool is_farey_neighbor(const Fraction& f, const Fraction& g) {
    Int d = det(f, g);
    return d == 1 || d == -1;
}

Fraction mediant(const Fraction& f, const Fraction& g) {
    if (!is_farey_neighbor(f, g))
        throw bad_fraction("mediant requires Farey neighbors: " + f.str() + ", " + g.str());
    return Fraction(f.num() + g.num(), f.den() + g.den());
}

std::pair<Fraction, Fraction> parents(const Fraction& f) {
    if (f == Fraction(1, 1)) return {Fraction(0, 1), Fraction::infinity()};
    const Int& p = f.num();
    const Int& q = f.den();
    if (q < 2 || p <= 0 || p >= q)
        throw bad_fraction("parents defined only on (0,1) and 1/1, got " + f.str());
    // Left parent a/c satisfies a*q - p*c = -1, i.e. p*c = 1 (mod q), 0 < c < q.
    Int c = 0, c_prev = 1, r = q, r_prev = p;
    // extended Euclid for p^{-1} mod q
    while (r != 0) {
        Int k = r_prev / r;
        Int tmp = r_prev - k * r;
        r_prev = r;
        r = tmp;
        tmp = c_prev - k * c;
        c_prev = c;
        c = tmp;
    }
    c = c_prev % q;
    if (c < 0) c += q;
    Int a = (p * c - 1) / q;
    Fraction lo(a, c);
    Fraction hi(p - a, q - c);
    return {lo, hi};
}

}  // namespace slopes
