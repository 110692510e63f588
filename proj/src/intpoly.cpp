#include "localh/intpoly.hpp"

#include <cassert>
#include <sstream>

namespace localh {

IntPoly IntPoly::monomial(int degree, std::int64_t coeff) {
    if (coeff == 0) return IntPoly();
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted_power(int a, int b) {
    // t^a * (1-t)^b via a Pascal row with alternating signs.
    std::vector<std::int64_t> c(a + b + 1, 0);
    std::int64_t binom = 1;
    for (int k = 0; k <= b; ++k) {
        c[a + k] = (k % 2 == 0) ? binom : -binom;
        binom = binom * (b - k) / (k + 1);
    }
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(std::int64_t k) const {
    if (k == 0) return IntPoly();
    std::vector<std::int64_t> r = c_;
    for (auto& x : r) x *= k;
    return IntPoly(std::move(r));
}

std::vector<std::int64_t> IntPoly::coeffs(int min_degree) const {
    std::vector<std::int64_t> r = c_;
    if (static_cast<int>(r.size()) < min_degree + 1) r.resize(min_degree + 1, 0);
    return r;
}

bool IntPoly::is_symmetric(int top) const {
    for (int i = 0; i <= top; ++i)
        if ((*this)[i] != (*this)[top - i]) return false;
    return degree() <= top;
}

bool IntPoly::is_nonnegative() const {
    for (auto x : c_)
        if (x < 0) return false;
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::int64_t a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        std::int64_t abs = a > 0 ? a : -a;
        if (abs != 1 || i == 0) os << abs;
        if (i >= 1) {
            if (abs != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace localh
