#pragma once

// Rank-2 lattice arithmetic: vectors, exact slope comparisons, cones, and
// integer minimization over a cone cut by one half-plane.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vgit/error.hpp"

namespace vgit {

using i64 = std::int64_t;
using i128 = __int128;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct LatticeVector {
    i64 x = 0;
    i64 y = 0;

    constexpr bool isZero() const { return x == 0 && y == 0; }
    friend constexpr bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
    constexpr LatticeVector operator-() const { return {-x, -y}; }
    constexpr LatticeVector operator+(const LatticeVector& o) const { return {x + o.x, y + o.y}; }
    constexpr LatticeVector operator-(const LatticeVector& o) const { return {x - o.x, y - o.y}; }
    friend constexpr LatticeVector operator*(i64 k, const LatticeVector& v) { return {k * v.x, k * v.y}; }
};

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << "(" << v.x << "," << v.y << ")";
}

inline std::string toString(const LatticeVector& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// the pairing between X^*(T) and X_*(T) in the standard bases
constexpr i64 dot(const LatticeVector& a, const LatticeVector& b) { return a.x * b.x + a.y * b.y; }
constexpr i64 cross(const LatticeVector& a, const LatticeVector& b) { return a.x * b.y - a.y * b.x; }
constexpr i64 norm2(const LatticeVector& v) { return v.x * v.x + v.y * v.y; }
constexpr LatticeVector rotCcw(const LatticeVector& v) { return {-v.y, v.x}; }
constexpr LatticeVector rotCw(const LatticeVector& v) { return {v.y, -v.x}; }

constexpr bool sameRay(const LatticeVector& a, const LatticeVector& b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}
constexpr bool parallelLine(const LatticeVector& a, const LatticeVector& b) { return cross(a, b) == 0; }

struct Primitive {
    LatticeVector direction;
    i64 multiplier = 0;
};

inline Primitive primitive(const LatticeVector& v) {
    if (v.isZero())
        throw Error(ErrorKind::ZeroVector, "primitive of the zero vector");
    i64 g = std::gcd(v.x, v.y);
    return {{v.x / g, v.y / g}, g};
}

// mu = (chi,lambda)/|lambda| kept as sign and exact square
struct MuValue {
    int sign = 0;
    Rational squaredMagnitude{0};
};

inline MuValue muValue(const LatticeVector& chi, const LatticeVector& lambda) {
    if (lambda.isZero())
        throw Error(ErrorKind::ZeroVector, "mu of the zero cocharacter");
    i64 p = dot(chi, lambda);
    MuValue m;
    m.sign = (p > 0) - (p < 0);
    m.squaredMagnitude = Rational(BigInt(p) * p) / Rational(norm2(lambda));
    return m;
}

inline std::weak_ordering compareMu(const MuValue& a, const MuValue& b) {
    if (a.sign != b.sign)
        return a.sign < b.sign ? std::weak_ordering::less : std::weak_ordering::greater;
    if (a.squaredMagnitude == b.squaredMagnitude)
        return std::weak_ordering::equivalent;
    bool bigger = a.squaredMagnitude > b.squaredMagnitude;
    if (a.sign < 0)
        bigger = !bigger;
    return bigger ? std::weak_ordering::greater : std::weak_ordering::less;
}

inline std::weak_ordering muCompare(const LatticeVector& chi, const LatticeVector& l1,
                                    const LatticeVector& l2) {
    return compareMu(muValue(chi, l1), muValue(chi, l2));
}

// angular order from the positive x-axis; parallel vectors are equivalent
inline int angleHalf(const LatticeVector& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

inline bool ccwLess(const LatticeVector& a, const LatticeVector& b) {
    int ha = angleHalf(a), hb = angleHalf(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

class Cone2 {
public:
    Cone2() = default;
    Cone2(LatticeVector a, LatticeVector b) : a_(a), b_(b) {
        if (a.isZero() || b.isZero())
            throw Error(ErrorKind::ZeroVector, "cone generator is zero");
        if (primitive(a).multiplier != 1 || primitive(b).multiplier != 1)
            throw Error(ErrorKind::InvalidInput, "cone generators must be primitive");
        if (cross(a, b) <= 0)
            throw Error(ErrorKind::InvalidInput,
                        "cone " + toString(a) + "," + toString(b) + " is not strictly convex counterclockwise");
    }

    const LatticeVector& generatorA() const { return a_; }
    const LatticeVector& generatorB() const { return b_; }

    bool contains(const LatticeVector& v) const { return cross(a_, v) >= 0 && cross(v, b_) >= 0; }
    bool containsInterior(const LatticeVector& v) const { return cross(a_, v) > 0 && cross(v, b_) > 0; }

    friend bool operator==(const Cone2&, const Cone2&) = default;

private:
    LatticeVector a_{1, 0};
    LatticeVector b_{0, 1};
};

enum class PairingSide { Character, Cocharacter };

// The pairing is the coordinate dot product, so the dual cone is the same on
// either side; the side argument only documents which lattice the result lives in.
inline Cone2 dualCone(const Cone2& c, PairingSide = PairingSide::Cocharacter) {
    return Cone2(rotCw(c.generatorB()), rotCcw(c.generatorA()));
}

struct HalfPlane {
    LatticeVector normal;
    i64 bound = 0;

    bool contains(const LatticeVector& v) const { return dot(normal, v) <= bound; }
};

struct MinimizeResult {
    bool unbounded = false;
    i64 value = 0;
    LatticeVector argmin{};

    bool operator==(const MinimizeResult&) const = default;
};

namespace detail {

inline i128 floorDiv(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}
inline i128 ceilDiv(i128 a, i128 b) { return -floorDiv(-a, b); }

// returns g >= 0 with a*u + b*v = g
inline i64 extGcd(i64 a, i64 b, i64& u, i64& v) {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r; old_s = -old_s; old_t = -old_t;
    }
    u = old_s;
    v = old_t;
    return old_r;
}

// integer s with alpha + beta*s >= 0 for every constraint, if any
inline std::optional<i128> integerInInterval(const std::vector<std::pair<i128, i128>>& cons) {
    std::optional<i128> lo, hi;
    for (auto [alpha, beta] : cons) {
        if (beta == 0) {
            if (alpha < 0)
                return std::nullopt;
        } else if (beta > 0) {
            i128 l = ceilDiv(-alpha, beta);
            if (!lo || l > *lo) lo = l;
        } else {
            i128 h = floorDiv(alpha, -beta);
            if (!hi || h < *hi) hi = h;
        }
    }
    if (lo && hi && *lo > *hi)
        return std::nullopt;
    if (lo) return *lo;
    if (hi) return *hi;
    return i128(0);
}

inline Rational ceilRational(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    BigInt f = n / d;
    if (f * d != n && n > 0)
        f += 1;
    return Rational(f);
}

} // namespace detail

// min (objective, lambda) over integer lambda in cone with (normal, lambda) <= bound
inline MinimizeResult latticeMinimize(const LatticeVector& c, const Cone2& cone, const HalfPlane& hp) {
    const LatticeVector A = cone.generatorA(), B = cone.generatorB();
    const i64 nA = dot(hp.normal, A), nB = dot(hp.normal, B);
    const i64 b = hp.bound;

    if (b < 0 && nA >= 0 && nB >= 0)
        throw Error(ErrorKind::EmptyFeasibleRegion, "no lattice point in cone with " +
                                                        toString(hp.normal) + ".x <= " + std::to_string(b));

    // a known feasible point
    LatticeVector q{0, 0};
    if (b < 0) {
        bool have = false;
        for (const auto& g : {A, B}) {
            i64 ng = dot(hp.normal, g);
            if (ng >= 0)
                continue;
            i64 k = static_cast<i64>(detail::ceilDiv(b, ng));
            LatticeVector cand = k * g;
            if (!have || dot(c, cand) < dot(c, q)) {
                q = cand;
                have = true;
            }
        }
    }
    if (c.isZero())
        return {false, 0, q};

    // recession cone generators
    std::vector<LatticeVector> rec;
    if (nA <= 0) rec.push_back(A);
    if (nB <= 0) rec.push_back(B);
    if ((nA < 0 && nB > 0) || (nA > 0 && nB < 0)) {
        LatticeVector d = primitive(rotCcw(hp.normal)).direction;
        if (!cone.contains(d))
            d = -d;
        rec.push_back(d);
    }
    for (const auto& r : rec)
        if (dot(c, r) < 0)
            return {true, 0, {}};

    // rational relaxation by vertex enumeration
    std::optional<Rational> best;
    auto offer = [&](const Rational& v) {
        if (!best || v < *best) best = v;
    };
    if (b >= 0)
        offer(Rational(0));
    for (const auto& g : {A, B}) {
        i64 ng = dot(hp.normal, g);
        if (ng == 0)
            continue;
        Rational t = Rational(b) / Rational(ng);
        if (t < 0)
            continue;
        offer(t * dot(c, g));
    }
    const i64 upper = dot(c, q);
    i64 lower = best ? static_cast<i64>(detail::ceilRational(*best)) : upper;

    i64 u = 0, v = 0;
    const i64 g = detail::extGcd(c.x, c.y, u, v);
    const LatticeVector dir{-c.y / g, c.x / g};
    for (i64 t = lower; t <= upper; ++t) {
        if (t % g != 0)
            continue;
        const i128 k = t / g;
        const i128 l0x = k * u, l0y = k * v;
        auto crossW = [](i128 ax, i128 ay, i128 bx, i128 by) { return ax * by - ay * bx; };
        std::vector<std::pair<i128, i128>> cons = {
            {crossW(A.x, A.y, l0x, l0y), crossW(A.x, A.y, dir.x, dir.y)},
            {crossW(l0x, l0y, B.x, B.y), crossW(dir.x, dir.y, B.x, B.y)},
            {i128(b) - (i128(hp.normal.x) * l0x + i128(hp.normal.y) * l0y),
             -(i128(hp.normal.x) * dir.x + i128(hp.normal.y) * dir.y)},
        };
        if (auto s = detail::integerInInterval(cons)) {
            LatticeVector arg{static_cast<i64>(l0x + *s * dir.x), static_cast<i64>(l0y + *s * dir.y)};
            return {false, t, arg};
        }
    }
    throw Error(ErrorKind::Internal, "latticeMinimize search exhausted without a feasible point");
}

// Enumeration oracle over the box |x|,|y| <= radius. Only meaningful for
// bounded instances whose minimizer lies in the box.
inline std::optional<MinimizeResult> latticeMinimizeBrute(const LatticeVector& c, const Cone2& cone,
                                                          const HalfPlane& hp, i64 radius = 25) {
    std::optional<MinimizeResult> best;
    for (i64 x = -radius; x <= radius; ++x)
        for (i64 y = -radius; y <= radius; ++y) {
            LatticeVector l{x, y};
            if (!cone.contains(l) || !hp.contains(l))
                continue;
            i64 val = dot(c, l);
            if (!best || val < best->value)
                best = MinimizeResult{false, val, l};
        }
    return best;
}

} // namespace vgit
