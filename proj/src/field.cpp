#include "g2cyl/field.hpp"

#include <cmath>
#include <sstream>

namespace g2 {

Int isqrt(const Int& n) {
    if (n < 0) throw FieldError("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool isPerfectSquare(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

FE FE::make(Int a, Int b, Int den, long disc) {
    if (den == 0) throw FieldError("zero denominator");
    if (disc < 0) throw FieldError("negative discriminant");
    if (b != 0) {
        Int root;
        if (disc == 0) throw FieldError("irrational part with disc 0");
        if (isPerfectSquare(Int(disc), &root)) {
            a += b * root;
            b = 0;
        }
    }
    if (b == 0) disc = 0;
    if (den < 0) {
        den = -den;
        a = -a;
        b = -b;
    }
    Int g = gcd(gcd(a, b), den);
    if (g > 1) {
        a /= g;
        b /= g;
        den /= g;
    }
    FE r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.den_ = std::move(den);
    r.disc_ = disc;
    return r;
}

FE FE::sqrtDisc(long disc) { return make(0, 1, 1, disc); }

Rat FE::rational() const {
    if (!isRational()) throw FieldError("not rational: " + str());
    Rat q(a_, den_);
    q.canonicalize();
    return q;
}

namespace {
long commonDisc(const FE& x, const FE& y) {
    if (x.disc() == 0) return y.disc();
    if (y.disc() == 0 || x.disc() == y.disc()) return x.disc();
    throw FieldError("incompatible discriminants " + std::to_string(x.disc()) + " vs " +
                     std::to_string(y.disc()));
}
}  // namespace

FE FE::operator+(const FE& o) const {
    long d = commonDisc(*this, o);
    return make(a_ * o.den_ + o.a_ * den_, b_ * o.den_ + o.b_ * den_, den_ * o.den_, d);
}

FE FE::operator-(const FE& o) const { return *this + (-o); }

FE FE::operator-() const { return make(-a_, -b_, den_, disc_); }

FE FE::operator*(const FE& o) const {
    long d = commonDisc(*this, o);
    Int na = a_ * o.a_ + b_ * o.b_ * d;
    Int nb = a_ * o.b_ + b_ * o.a_;
    return make(std::move(na), std::move(nb), den_ * o.den_, d);
}

FE FE::operator/(const FE& o) const {
    if (o.isZero()) throw FieldError("division by zero");
    long d = commonDisc(*this, o);
    // 1/((a+b√D)/den) = den*(a-b√D)/(a²-b²D)
    Int nrm = o.a_ * o.a_ - o.b_ * o.b_ * d;
    if (nrm == 0) throw FieldError("division by zero (norm)");
    FE inv = make(o.den_ * o.a_, -o.den_ * o.b_, std::move(nrm), d);
    return *this * inv;
}

int FE::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a² against b²·D
    Int lhs = a_ * a_;
    Int rhs = b_ * b_ * Int(disc_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // only for square D, excluded by canonical form
    return c > 0 ? sa : sb;
}

bool FE::operator==(const FE& o) const {
    return a_ == o.a_ && b_ == o.b_ && den_ == o.den_ && disc_ == o.disc_;
}

std::optional<FE> FE::fieldSqrt() const {
    if (sign() < 0) return std::nullopt;
    if (isZero()) return FE(0);
    // rational case first: (p/q) square iff p*q square over the reduced form
    if (isRational()) {
        Int p = a_, q = den_, rp, rq;
        if (p > 0 && isPerfectSquare(p, &rp) && isPerfectSquare(q, &rq))
            return make(rp, 0, rq, 0);
        // maybe the√ lives in Q(√D) with p/q = D*square: x = r√D/s
        if (disc_ == 0) {
            // try all-purpose: value*den² = p*den: look for p*q = D'*square is
            // out of scope without knowing the ambient field; give up here.
        }
        return std::nullopt;
    }
    // want ((x+y√D)/s)² = (a+b√D)/den with s = den:
    //   x² + y²D = a*den, 2xy = b*den
    // => x² satisfies 4t² - 4(a*den)t + (b*den)²D = 0
    //    t = (a*den ± den*sqrt(a²-b²D))/2
    Int n2 = a_ * a_ - b_ * b_ * Int(disc_);
    Int rn;
    if (n2 < 0 || !isPerfectSquare(n2, &rn)) return std::nullopt;
    for (int pm = 0; pm < 2; ++pm) {
        Int twoT = a_ * den_ + (pm ? Int(-den_ * rn) : Int(den_ * rn));  // = 2x²
        if (twoT <= 0) continue;
        Int x2num = twoT;  // x² = twoT/2
        Int x;
        // x rational: x = u/w with x² = twoT/2: need twoT/2 perfect square of rational
        Int num = x2num, w(2);
        Int g = gcd(num, w);
        num /= g;
        w /= g;
        Int ru, rw;
        if (!isPerfectSquare(num, &ru) || !isPerfectSquare(w, &rw)) continue;
        // x = ru/rw; y = b*den/(2x)
        // candidate = (x + y√D)/den with x, y rationals — clear denominators
        // x = ru/rw -> numerator scaled by rw: X = ru, denominator den*rw
        // y = b*den*rw/(2*ru)
        Int X = ru * 2 * ru;            // numerators over common den: den*rw*2*ru
        Int Y = b_ * den_ * rw * rw;    // y*den*rw*2*ru = b*den*rw²  ... /(2ru)*2ru
        Int S = den_ * rw * 2 * ru;
        FE cand = make(std::move(X), std::move(Y), std::move(S), disc_);
        if (cand * cand == *this && cand.sign() >= 0) return cand;
        FE neg = -cand;
        if (neg * neg == *this && neg.sign() >= 0) return neg;
    }
    return std::nullopt;
}

void FE::bounds(int bits, Rat& lo, Rat& hi) const {
    Rat ra(a_, den_);
    ra.canonicalize();
    if (b_ == 0) {
        lo = hi = ra;
        return;
    }
    // sqrt(D) in [s/2^k, (s+1)/2^k]
    int k = bits + 8;
    Int scaled = Int(disc_) << (2 * k);
    Int s = isqrt(scaled);
    Rat rlo(s, Int(1) << k), rhi(s + 1, Int(1) << k);
    rlo.canonicalize();
    rhi.canonicalize();
    Rat bb(b_, den_);
    bb.canonicalize();
    Rat t1 = bb * rlo, t2 = bb * rhi;
    if (t1 > t2) std::swap(t1, t2);
    lo = ra + t1;
    hi = ra + t2;
}

double FE::approx() const {
    double av = mpq_get_d(Rat(a_, den_).get_mpq_t());
    if (b_ == 0) return av;
    double bv = mpq_get_d(Rat(b_, den_).get_mpq_t());
    return av + bv * std::sqrt(double(disc_));
}

std::string FE::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        if (den_ != 1) os << "/" << den_;
        return os.str();
    }
    os << "(" << a_;
    if (b_ > 0)
        os << "+";
    os << b_ << "√" << disc_ << ")";
    std::string s = os.str();
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
}

int FE::keyCompare(const FE& x, const FE& y) {
    if (long dd = x.disc_ - y.disc_; dd != 0) return dd < 0 ? -1 : 1;
    if (int c = cmp(x.den_, y.den_); c != 0) return c;
    if (int c = cmp(x.a_, y.a_); c != 0) return c;
    return cmp(x.b_, y.b_);
}

FE operator*(long s, const FE& x) { return FE(s) * x; }

int crossFieldCompare(const FE& x, const FE& y) {
    if (x.disc() == 0 || y.disc() == 0 || x.disc() == y.disc()) return (x - y).sign();
    if (x.isRational() && y.isRational()) return (x.rational() - y.rational() > 0) ? 1 : -1;
    for (int bits = 64;; bits *= 2) {
        Rat xl, xh, yl, yh;
        x.bounds(bits, xl, xh);
        y.bounds(bits, yl, yh);
        if (xh < yl) return -1;
        if (yh < xl) return 1;
        if (bits > 4096) {
            // equality across distinct quadratic fields forces both rational
            if (x.isRational() && y.isRational() && x.rational() == y.rational()) return 0;
            if (bits > 65536) throw FieldError("crossFieldCompare failed to separate");
        }
    }
}

Direction::Direction(const Vec2& raw) {
    // unoriented: raw and -raw canonicalize identically
    if (raw.isZero()) throw FieldError("zero direction");
    if (raw.y.isZero())
        v = Vec2(FE(1), FE(0));
    else
        v = Vec2(raw.x / raw.y, FE(1));
}

int Direction::keyCompare(const Direction& p, const Direction& q) {
    if (int c = FE::keyCompare(p.v.y, q.v.y); c != 0) return c;
    return FE::keyCompare(p.v.x, q.v.x);
}

int vecKeyCompare(const Vec2& u, const Vec2& v) {
    if (int c = FE::keyCompare(u.x, v.x); c != 0) return c;
    return FE::keyCompare(u.y, v.y);
}

Mat2 Mat2::inverse() const {
    FE dt = det();
    if (dt.isZero()) throw FieldError("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 Mat2::normalizing(const Vec2& c0, const Vec2& d0) {
    FE w = wedge(c0, d0);
    if (w.isZero()) throw FieldError("parallel directions cannot be normalized");
    Vec2 dd = d0;
    if (w.sign() < 0) dd = -dd;
    // inverse of the column matrix [c0 | dd]
    Mat2 cols{c0.x, dd.x, c0.y, dd.y};
    return cols.inverse();
}

}  // namespace g2
