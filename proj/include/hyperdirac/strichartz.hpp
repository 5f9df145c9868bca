#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hyperdirac/geometry.hpp"

namespace hyperdirac {

// Exact rational with normalized sign and gcd-reduced terms; comparisons and
// arithmetic go through 128-bit intermediates so boundary predicates carry no
// floating error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den = 1) : num_(num), den_(den) {
        if (den_ == 0)
            throw invalid_argument_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw invalid_argument_error("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational make(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr i128 lim = 0x7fffffffffffffff;
        if (num > lim || num < -lim || den > lim)
            throw numerics_error("Rational: overflow");
        return Rational(static_cast<long long>(num), static_cast<long long>(den), 0);
    }

    Rational(long long num, long long den, int) : num_(num), den_(den) {}

    long long num_;
    long long den_;
};

// A point (1/p, 1/q) in the exponent square [0, 1/2] x [0, 1/2].
struct ExponentPair {
    Rational inv_p;
    Rational inv_q;

    ExponentPair(Rational ip, Rational iq) : inv_p(ip), inv_q(iq) {
        const Rational zero(0), half(1, 2);
        if (inv_p < zero || inv_p > half || inv_q < zero || inv_q > half)
            throw invalid_argument_error("ExponentPair: 1/p, 1/q must lie in [0, 1/2]");
    }
};

// (0,1/2)x(0,1/2) with 1/p >= (n-1)/2 (1/2 - 1/q), plus the point (0, 1/2).
bool is_admissible_triangle(const Geometry& g, const ExponentPair& e);

// [0,1/2) x (0,1/2), plus the point (0, 1/2). The right edge is excluded.
bool is_admissible_square(const Geometry& g, const ExponentPair& e);

// theta(p,q) = (n+1)/2 (1/2 - 1/q) + max{0, (n-1)/2 (1/2 - 1/q) - 1/p},
// exact; requires square admissibility. The equivalent two-branch form is
// asserted internally.
Rational regularity_exponent(const Geometry& g, const ExponentPair& e);

struct TTStarFeasibility {
    bool long_time_ok = false;  // p > 2
    bool short_time_ok = false; // 0 <= 1/p' - 1/p <= 1 - (n-1)(1/2 - 1/q)
};

TTStarFeasibility ttstar_feasible(const Geometry& g, const ExponentPair& e);

// s1 - s2 == n (1/q1 - 1/q2) with 1 < q1 <= q2 < inf and s1 >= s2 >= 0,
// arguments as (s1, 1/q1, s2, 1/q2).
bool sobolev_embedding_ok(const Geometry& g, const Rational& s1, const Rational& inv_q1,
                          const Rational& s2, const Rational& inv_q2);

} // namespace hyperdirac
