#include "localh/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace localh {

namespace {
void trim(Mono2& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}
}  // namespace

Mono2 mono_mul(const Mono2& a, const Mono2& b) {
    Mono2 r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;  // no trailing zero can appear: the longer input ends nonzero
}

bool mono_divides(const Mono2& a, const Mono2& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono2 mono_div(const Mono2& b, const Mono2& a) {
    if (!mono_divides(a, b)) throw internal_error("monomial division not exact");
    Mono2 r = b;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    trim(r);
    return r;
}

Poly2 Poly2::variable(int v) {
    Mono2 m(v + 1, 0);
    m[v] = 1;
    return monomial(std::move(m));
}

int Poly2::total_degree() const {
    int d = -1;
    for (const Mono2& m : t) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Poly2 p2_add(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.t.reserve(a.t.size() + b.t.size());
    std::set_symmetric_difference(a.t.begin(), a.t.end(), b.t.begin(), b.t.end(),
                                  std::back_inserter(r.t));
    return r;
}

Poly2 p2_mul(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2::zero();
    std::vector<Mono2> prods;
    prods.reserve(a.t.size() * b.t.size());
    for (const Mono2& ma : a.t)
        for (const Mono2& mb : b.t) prods.push_back(mono_mul(ma, mb));
    std::sort(prods.begin(), prods.end());
    Poly2 r;
    // Cancel pairs mod 2.
    for (std::size_t i = 0; i < prods.size();) {
        std::size_t j = i;
        while (j < prods.size() && prods[j] == prods[i]) ++j;
        if ((j - i) % 2 == 1) r.t.push_back(prods[i]);
        i = j;
    }
    return r;
}

Poly2 p2_divexact(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw internal_error("division by zero polynomial");
    if (b.is_one()) return a;
    Poly2 rem = a, quot;
    const Mono2& blead = b.t.back();
    std::vector<Mono2> qterms;
    while (!rem.is_zero()) {
        const Mono2& rlead = rem.t.back();
        if (!mono_divides(blead, rlead)) throw internal_error("polynomial division not exact");
        Mono2 q = mono_div(rlead, blead);
        qterms.push_back(q);
        rem = p2_add(rem, p2_mul(Poly2::monomial(q), b));
    }
    std::sort(qterms.begin(), qterms.end());
    quot.t = std::move(qterms);
    return quot;
}

Poly2 p2_derivative(const Poly2& a, int v) {
    std::vector<Mono2> terms;
    for (const Mono2& m : a.t) {
        if (static_cast<int>(m.size()) <= v || m[v] % 2 == 0) continue;
        Mono2 r = m;
        r[v] -= 1;
        while (!r.empty() && r.back() == 0) r.pop_back();
        terms.push_back(std::move(r));
    }
    std::sort(terms.begin(), terms.end());
    Poly2 r;
    r.t = std::move(terms);
    return r;
}

std::string p2_to_string(const Poly2& a, const std::vector<std::string>& names) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
        if (!first_term) os << " + ";
        first_term = false;
        const Mono2& m = *it;
        bool printed = false;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (!m[v]) continue;
            if (printed) os << "*";
            printed = true;
            os << (v < names.size() ? names[v] : "x" + std::to_string(v));
            if (m[v] > 1) os << "^" << m[v];
        }
        if (!printed) os << "1";
    }
    return os.str();
}

}  // namespace localh
