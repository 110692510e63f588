#ifndef LOCALH_INTPOLY_HPP
#define LOCALH_INTPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace localh {

/*
 * Dense univariate polynomial with 64-bit integer coefficients, indexed by
 * ascending degree.  Used for f/h/local-h vectors; coefficient sizes at the
 * scales handled here stay far below the overflow threshold, which is
 * nevertheless checked in debug builds by the arithmetic helpers.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly monomial(int degree, std::int64_t coeff = 1);
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return monomial(0); }

    // t^a * (1-t)^b expanded; the basic building block of h-polynomials.
    static IntPoly shifted_power(int a, int b);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    std::int64_t operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly operator+(const IntPoly& o) const { IntPoly r = *this; r += o; return r; }
    IntPoly operator-(const IntPoly& o) const { IntPoly r = *this; r -= o; return r; }
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }
    IntPoly operator*(std::int64_t k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    // Coefficients padded with zeros up to degree `min_degree` inclusive.
    std::vector<std::int64_t> coeffs(int min_degree = -1) const;

    bool is_symmetric(int top) const;   // c[i] == c[top-i] for all i
    bool is_nonnegative() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

}  // namespace localh

#endif
