#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2 {

using Int = mpz_class;
using Rat = mpq_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int isqrt(const Int& n);
bool isPerfectSquare(const Int& n, Int* root = nullptr);

/// Exact element of Q(sqrt(D)): value = (a + b*sqrt(D)) / den.
///
/// Canonical form: den > 0, gcd(a, b, den) = 1, and if D is 0 or a perfect
/// square the irrational part is folded away (b = 0, disc = 0). Purely
/// rational values always carry disc = 0, so elements of different real
/// quadratic fields can never compare equal by accident.
class FE {
  public:
    FE() : a_(0), b_(0), den_(1), disc_(0) {}
    FE(long v) : a_(v), b_(0), den_(1), disc_(0) {}
    FE(const Int& v) : a_(v), b_(0), den_(1), disc_(0) {}
    FE(const Rat& v) : a_(v.get_num()), b_(0), den_(v.get_den()), disc_(0) {}

    static FE make(Int a, Int b, Int den, long disc);
    static FE sqrtDisc(long disc);  // sqrt(D) as a field element

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& den() const { return den_; }
    long disc() const { return disc_; }

    bool isZero() const { return a_ == 0 && b_ == 0; }
    bool isRational() const { return b_ == 0; }
    Rat rational() const;  // requires isRational()

    FE operator+(const FE& o) const;
    FE operator-(const FE& o) const;
    FE operator-() const;
    FE operator*(const FE& o) const;
    FE operator/(const FE& o) const;
    FE& operator+=(const FE& o) { return *this = *this + o; }
    FE& operator-=(const FE& o) { return *this = *this - o; }
    FE& operator*=(const FE& o) { return *this = *this * o; }
    FE& operator/=(const FE& o) { return *this = *this / o; }

    FE conj() const { return make(a_, -b_, den_, disc_); }
    FE abs() const { return sign() < 0 ? -*this : *this; }

    int sign() const;  // exact sign of the real value
    bool operator==(const FE& o) const;
    bool operator!=(const FE& o) const { return !(*this == o); }
    bool operator<(const FE& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FE& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const FE& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const FE& o) const { return (*this - o).sign() >= 0; }

    /// Exact square root within the same field, if one exists.
    std::optional<FE> fieldSqrt() const;

    /// Certified rational bounds: lo <= value <= hi with hi - lo <= 2^-bits.
    void bounds(int bits, Rat& lo, Rat& hi) const;
    double approx() const;

    std::string str() const;  // canonical "(a+b√D)/den" style string

    /// Total order usable as a container key (componentwise, not numeric).
    static int keyCompare(const FE& x, const FE& y);

  private:
    Int a_, b_, den_;
    long disc_;
};

FE operator*(long s, const FE& x);

/// Compare x (in Q(sqrt(Dx))) with y (in Q(sqrt(Dy))) exactly even when the
/// fields differ, by refining certified rational bounds. Equality across
/// distinct irrational fields only happens for rational values.
int crossFieldCompare(const FE& x, const FE& y);

struct Vec2 {
    FE x, y;
    Vec2() = default;
    Vec2(FE px, FE py) : x(std::move(px)), y(std::move(py)) {}
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const FE& s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool isZero() const { return x.isZero() && y.isZero(); }
    FE normSq() const { return x * x + y * y; }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline FE wedge(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline FE dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline Vec2 rot90ccw(const Vec2& v) { return {-v.y, v.x}; }

/// Direction: nonzero vector canonicalized up to positive scaling.
/// Convention: y > 0 scaled to y = 1, or y = 0 and x = 1.
struct Direction {
    Vec2 v;
    Direction() = default;
    explicit Direction(const Vec2& raw);
    bool operator==(const Direction& o) const { return v == o.v; }
    bool operator!=(const Direction& o) const { return !(*this == o); }
    bool parallelTo(const Vec2& u) const { return wedge(v, u).isZero(); }
    std::string str() const { return v.str(); }
    static int keyCompare(const Direction& p, const Direction& q);
};

struct Mat2 {
    FE a, b, c, d;  // [[a, b], [c, d]]
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    FE det() const { return a * d - b * c; }
    Mat2 inverse() const;
    static Mat2 identity() { return {FE(1), FE(0), FE(0), FE(1)}; }
    /// Matrix with det > 0 sending dir(c0) to horizontal and dir(d0) to vertical.
    static Mat2 normalizing(const Vec2& c0, const Vec2& d0);
};

int vecKeyCompare(const Vec2& u, const Vec2& v);

}  // namespace g2
