#ifndef LOCALH_POLY2_HPP
#define LOCALH_POLY2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "localh/util.hpp"

namespace localh {

/*
 * Sparse multivariate polynomials over F_2.  A monomial is its exponent
 * vector with trailing zeros trimmed, so the representation is independent
 * of the ambient variable count; with trimming, std::vector's lexicographic
 * order coincides with zero-padded lex order, a genuine monomial order.  A
 * polynomial is the sorted list of its monomials (coefficients are 1).
 */
using Mono2 = std::vector<std::uint16_t>;

Mono2 mono_mul(const Mono2& a, const Mono2& b);
bool mono_divides(const Mono2& a, const Mono2& b);  // a | b
Mono2 mono_div(const Mono2& b, const Mono2& a);     // b / a, exact

struct Poly2 {
    std::vector<Mono2> t;  // sorted ascending, duplicate-free

    static Poly2 zero() { return {}; }
    static Poly2 one() { return Poly2{{Mono2{}}}; }
    static Poly2 variable(int v);
    static Poly2 monomial(Mono2 m) { return Poly2{{std::move(m)}}; }

    bool is_zero() const { return t.empty(); }
    bool is_one() const { return t.size() == 1 && t[0].empty(); }
    bool operator==(const Poly2& o) const { return t == o.t; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }
    int total_degree() const;
    std::size_t terms() const { return t.size(); }
};

Poly2 p2_add(const Poly2& a, const Poly2& b);  // symmetric difference
Poly2 p2_mul(const Poly2& a, const Poly2& b);
Poly2 p2_divexact(const Poly2& a, const Poly2& b);  // throws if not exact
Poly2 p2_derivative(const Poly2& a, int v);
std::string p2_to_string(const Poly2& a, const std::vector<std::string>& names);

// Ring object for the generic fraction-free elimination code.
class Poly2Ring {
public:
    using Element = Poly2;
    Element zero() const { return Poly2::zero(); }
    Element one() const { return Poly2::one(); }
    Element add(const Element& a, const Element& b) const { return p2_add(a, b); }
    Element sub(const Element& a, const Element& b) const { return p2_add(a, b); }
    Element neg(const Element& a) const { return a; }
    Element mul(const Element& a, const Element& b) const { return p2_mul(a, b); }
    Element divexact(const Element& a, const Element& b) const { return p2_divexact(a, b); }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool eq(const Element& a, const Element& b) const { return a == b; }
};

}  // namespace localh

#endif
