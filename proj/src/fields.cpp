#include "localh/fields.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace localh {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; static_cast<long>(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<int>;  // ascending coefficients over F_p, no trailing zeros

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b over F_p; b monic-normalized internally.
Poly pmod(Poly a, const Poly& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    int lead_inv = 1;
    for (int v = 1; v < p; ++v)
        if (v * b[db] % p == 1) { lead_inv = v; break; }
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        long q = static_cast<long>(a[da]) * lead_inv % p;
        if (q != 0)
            for (int k = 0; k <= db; ++k) {
                long t = a[da - db + k] - q * b[k] % p;
                a[da - db + k] = static_cast<int>(((t % p) + p) % p);
            }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

bool divides(const Poly& g, const Poly& f, int p) { return pmod(f, g, p).empty(); }

// Monic polynomials of degree deg over F_p in numeral order of the
// non-leading coefficient vector.
Poly monic_from_numeral(std::uint64_t k, int deg, int p) {
    Poly f(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        f[i] = static_cast<int>(k % p);
        k /= p;
    }
    f[deg] = 1;
    return f;
}

// All monic irreducibles of degree <= maxdeg over F_p, sieved by trial
// division against previously found irreducibles.
std::vector<Poly> irreducibles_upto(int p, int maxdeg) {
    std::vector<Poly> irr;
    for (int deg = 1; deg <= maxdeg; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly f = monic_from_numeral(k, deg, p);
            bool red = false;
            for (const Poly& g : irr) {
                if (2 * (static_cast<int>(g.size()) - 1) > deg) break;
                if (divides(g, f, p)) { red = true; break; }
            }
            if (!red) irr.push_back(f);
        }
    }
    // Sorted by (degree, numeral) already: generation order.
    return irr;
}

}  // namespace

std::vector<int> least_irreducible(int p, int m) {
    if (!is_prime(p)) throw input_error("field characteristic must be prime: " + std::to_string(p));
    if (m < 1) throw input_error("extension degree must be >= 1");
    static std::map<std::pair<int, int>, std::vector<int>> cache;
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;
    std::vector<Poly> divisors = irreducibles_upto(p, m / 2);
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) {
        if (count > (1ULL << 62) / p) throw input_error("extension field too large");
        count *= p;
    }
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly f = monic_from_numeral(k, m, p);
        bool red = false;
        for (const Poly& g : divisors)
            if (divides(g, f, p)) { red = true; break; }
        if (!red) {
            cache[{p, m}] = f;
            return f;
        }
    }
    throw internal_error("no irreducible polynomial found");  // unreachable
}

FieldSpec FieldSpec::gf(int p, int m) {
    FieldSpec fs;
    fs.characteristic = p;
    fs.ext_degree = m;
    fs.modulus = least_irreducible(p, m);
    return fs;
}

double FieldSpec::order() const {
    if (characteristic == 0) return std::numeric_limits<double>::infinity();
    return std::pow(static_cast<double>(characteristic), ext_degree);
}

GF2Ext::GF2Ext(int m) : m_(m) {
    if (m < 1 || m > 32) throw input_error("GF(2^m) supports 1 <= m <= 32");
    spec_ = FieldSpec::gf(2, m);
    mod_ = 0;
    for (int i = 0; i <= m; ++i)
        if (spec_.modulus[i]) mod_ |= (1ULL << i);
    mask_ = (m == 64) ? ~0ULL : ((1ULL << m) - 1);
}

GF2Ext::Element GF2Ext::inv(Element a) const {
    if (a == 0) throw internal_error("division by zero in GF(2^m)");
    // a^(2^m - 2) by square and multiply.
    Element result = 1, base = a;
    std::uint64_t e = (m_ == 64 ? ~0ULL : (1ULL << m_)) - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string GF2Ext::to_string(Element a) const {
    std::ostringstream os;
    os << "0x" << std::hex << a;
    return os.str();
}

GFPrimeExt::GFPrimeExt(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p) || p == 2) throw input_error("GFPrimeExt requires an odd prime");
    if (p >= (1 << 15)) throw input_error("prime too large");
    if (m < 1 || m > kMaxDeg) throw input_error("extension degree out of range");
    spec_ = FieldSpec::gf(p, m);
    mod_.assign(spec_.modulus.begin(), spec_.modulus.end());
    double bits = m * std::log2(static_cast<double>(p));
    if (bits > 61) throw input_error("extension field too large");
    std::uint64_t order = 1;
    for (int i = 0; i < m; ++i) order *= p;
    order_minus_2_ = order - 2;
}

GFPrimeExt::Element GFPrimeExt::from_int(long v) const {
    Element e{};
    long r = v % p_;
    if (r < 0) r += p_;
    e.c[0] = static_cast<std::uint16_t>(r);
    return e;
}

GFPrimeExt::Element GFPrimeExt::add(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < m_; ++i) {
        int s = a.c[i] + b.c[i];
        r.c[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

GFPrimeExt::Element GFPrimeExt::sub(const Element& a, const Element& b) const {
    Element r{};
    for (int i = 0; i < m_; ++i) {
        int s = a.c[i] - b.c[i];
        r.c[i] = static_cast<std::uint16_t>(s < 0 ? s + p_ : s);
    }
    return r;
}

GFPrimeExt::Element GFPrimeExt::neg(const Element& a) const { return sub(Element{}, a); }

GFPrimeExt::Element GFPrimeExt::mul(const Element& a, const Element& b) const {
    std::array<std::uint64_t, 2 * kMaxDeg> acc{};
    for (int i = 0; i < m_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < m_; ++j) acc[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
    }
    for (int i = 0; i < 2 * m_ - 1; ++i) acc[i] %= p_;
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t t = acc[i] % p_;
        if (!t) continue;
        std::uint64_t tneg = p_ - t;
        for (int k = 0; k < m_; ++k) acc[i - m_ + k] = (acc[i - m_ + k] + tneg * mod_[k]) % p_;
        acc[i] = 0;
    }
    Element r{};
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint16_t>(acc[i] % p_);
    return r;
}

GFPrimeExt::Element GFPrimeExt::inv(const Element& a) const {
    if (is_zero(a)) throw internal_error("division by zero in GF(p^m)");
    Element result = one(), base = a;
    std::uint64_t e = order_minus_2_;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GFPrimeExt::Element GFPrimeExt::sample(Rng& rng) const {
    Element e{};
    for (int i = 0; i < m_; ++i) e.c[i] = static_cast<std::uint16_t>(rng() % p_);
    return e;
}

std::string GFPrimeExt::to_string(const Element& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m_; ++i) {
        if (!a.c[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i >= 1) {
            if (a.c[i] != 1) os << "*";
            os << "g";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace localh
