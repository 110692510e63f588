#ifndef LOCALH_FIELDS_HPP
#define LOCALH_FIELDS_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "localh/util.hpp"

namespace localh {

/*
 * Runtime description of a coefficient field: the rationals
 * (characteristic 0) or GF(p^m).  The modulus of an extension field is the
 * monic irreducible polynomial of degree m over F_p whose non-leading
 * coefficient vector (c_0, c_1, ...) has the least value as a base-p numeral;
 * the choice is deterministic so identical runs pick identical fields.
 * Irreducibility is established by trial division against all monic
 * irreducibles of degree <= m/2.
 */
struct FieldSpec {
    int characteristic = 0;          // 0 or a prime
    int ext_degree = 1;              // m, ignored for characteristic 0
    std::vector<int> modulus;        // ascending, length m+1, monic; empty for Q

    static FieldSpec rational() { return FieldSpec{}; }
    static FieldSpec gf(int p, int m);

    bool is_rational() const { return characteristic == 0; }
    // Field order as a double (for >= 2^16 genericity checks and reports).
    double order() const;
};

// Least-numeral monic irreducible of degree m over F_p (ascending coeffs).
std::vector<int> least_irreducible(int p, int m);
bool is_prime(int p);

using Rng = std::mt19937_64;

/*
 * The three concrete fields share one interface: Element is
 * default-constructed to zero, and all arithmetic goes through the field
 * object so extension moduli travel with the computation.
 */

class RationalField {
public:
    using Element = mpq_class;

    FieldSpec spec() const { return FieldSpec::rational(); }
    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) throw internal_error("division by zero in Q");
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    // Nonzero integers up to 2^16 in absolute value; plenty generic for
    // Schwartz-Zippel style sampling at these problem sizes.
    Element sample_nonzero(Rng& rng) const {
        long v = static_cast<long>(rng() % 65536) + 1;
        return Element(v);
    }
    Element sample(Rng& rng) const { return Element(static_cast<long>(rng() % 65537) - 32768); }
    std::string to_string(const Element& a) const { return a.get_str(); }
};

// GF(2^m), m <= 32; elements are bit-packed coefficient vectors.
class GF2Ext {
public:
    using Element = std::uint64_t;

    GF2Ext() : GF2Ext(1) {}  // prime field; aggregates need a default state
    explicit GF2Ext(int m);

    FieldSpec spec() const { return spec_; }
    int m() const { return m_; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const { return static_cast<Element>(((v % 2) + 2) % 2); }
    Element add(Element a, Element b) const { return a ^ b; }
    Element sub(Element a, Element b) const { return a ^ b; }
    Element neg(Element a) const { return a; }
    Element mul(Element a, Element b) const {
        std::uint64_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            a <<= 1;
            b >>= 1;
        }
        for (int bit = 2 * m_ - 2; bit >= m_; --bit)
            if ((r >> bit) & 1) r ^= mod_ << (bit - m_);
        return r;
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }
    Element sample(Rng& rng) const { return rng() & mask_; }
    Element sample_nonzero(Rng& rng) const {
        Element e = sample(rng);
        while (e == 0) e = sample(rng);
        return e;
    }
    std::string to_string(Element a) const;

private:
    int m_ = 1;
    std::uint64_t mod_ = 0;  // full modulus bits, bit m set
    std::uint64_t mask_ = 0;
    FieldSpec spec_;
};

// GF(p^m) for odd primes p < 2^15 and p^m < 2^62; elements are fixed-size
// digit vectors, multiplication is schoolbook plus reduction by the modulus.
class GFPrimeExt {
public:
    static constexpr int kMaxDeg = 24;
    struct Element {
        std::array<std::uint16_t, kMaxDeg> c{};
        bool operator==(const Element& o) const { return c == o.c; }
        bool operator!=(const Element& o) const { return !(*this == o); }
    };

    GFPrimeExt() : GFPrimeExt(3, 1) {}  // aggregates need a default state
    GFPrimeExt(int p, int m);

    FieldSpec spec() const { return spec_; }
    int p() const { return p_; }
    int m() const { return m_; }
    Element zero() const { return Element{}; }
    Element one() const { return from_int(1); }
    Element from_int(long v) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return a == Element{}; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    Element sample(Rng& rng) const;
    Element sample_nonzero(Rng& rng) const {
        Element e = sample(rng);
        while (is_zero(e)) e = sample(rng);
        return e;
    }
    std::string to_string(const Element& a) const;

private:
    int p_ = 3;
    int m_ = 1;
    std::uint64_t order_minus_2_ = 1;
    std::vector<std::uint32_t> mod_;  // ascending, length m+1, monic
    FieldSpec spec_;
};

// Runs fn with the concrete field object selected by the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.characteristic == 0) return fn(RationalField{});
    if (fs.characteristic == 2) return fn(GF2Ext(fs.ext_degree));
    return fn(GFPrimeExt(fs.characteristic, fs.ext_degree));
}

}  // namespace localh

#endif
