#pragma once

// Horn uniformization of the reduced discriminant and its intersection
// lengths with the wall curves of the GKZ fan.

#include <optional>
#include <string>
#include <vector>

#include "vgit/kn_strat.hpp"

namespace vgit {

// coefficient * prod chi_i(u,v)^exponent_i, chi(u,v) = x*u + y*v
struct FactoredRational {
    struct Factor {
        std::size_t ray = 0;
        LatticeVector form;
        i64 exponent = 0;
    };
    Rational coefficient{1};
    std::vector<Factor> factors;
};

inline Rational ratPow(i64 base, i64 e) {
    BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline FactoredRational hornPullback(const GKZFan& fan, const LatticeVector& lambda) {
    FactoredRational fr;
    for (std::size_t i = 0; i < fan.rayGroups.size(); ++i) {
        const auto& g = fan.rayGroups[i];
        const i64 p = dot(g.chi, lambda);
        for (auto d : g.multipliers)
            fr.coefficient *= ratPow(d, -d * p);
        if (p != 0)
            fr.factors.push_back({i, g.chi, -g.total * p});
    }
    return fr;
}

inline FactoredRational multiply(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational out;
    out.coefficient = a.coefficient * b.coefficient;
    out.factors = a.factors;
    for (const auto& f : b.factors) {
        auto it = std::find_if(out.factors.begin(), out.factors.end(),
                               [&](const auto& o) { return o.ray == f.ray; });
        if (it == out.factors.end())
            out.factors.push_back(f);
        else
            it->exponent += f.exponent;
    }
    std::erase_if(out.factors, [](const auto& f) { return f.exponent == 0; });
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) { return x.ray < y.ray; });
    return out;
}

inline i64 degree(const FactoredRational& fr) {
    i64 s = 0;
    for (const auto& f : fr.factors) s += f.exponent;
    return s;
}

// each form scaled to a positive leading coefficient, equal forms merged
struct NormalizedRational {
    Rational coefficient{1};
    std::vector<std::pair<LatticeVector, i64>> factors;
};

inline NormalizedRational normalize(const FactoredRational& fr) {
    NormalizedRational n;
    n.coefficient = fr.coefficient;
    for (const auto& f : fr.factors) {
        LatticeVector form = f.form;
        if (form.x < 0 || (form.x == 0 && form.y < 0)) {
            form = -form;
            if (f.exponent % 2 != 0)
                n.coefficient = -n.coefficient;
        }
        auto it = std::find_if(n.factors.begin(), n.factors.end(), [&](const auto& o) { return o.first == form; });
        if (it == n.factors.end())
            n.factors.emplace_back(form, f.exponent);
        else
            it->second += f.exponent;
    }
    std::erase_if(n.factors, [](const auto& f) { return f.second == 0; });
    return n;
}

inline std::string formatLinearForm(const LatticeVector& f) {
    auto term = [](i64 c, const char* var) {
        std::string s = c == 1 ? "" : c == -1 ? "-" : std::to_string(c);
        return s + var;
    };
    if (f.x != 0 && f.y != 0) {
        std::string s = term(f.x, "u");
        s += f.y > 0 ? "+" : "-";
        i64 a = f.y > 0 ? f.y : -f.y;
        if (a != 1) s += std::to_string(a);
        return "(" + s + "v)";
    }
    return f.x != 0 ? term(f.x, "u") : term(f.y, "v");
}

inline std::string formatRational(const NormalizedRational& n) {
    std::vector<std::string> num, den;
    for (const auto& [form, e] : n.factors) {
        i64 a = e < 0 ? -e : e;
        std::string s = formatLinearForm(form) + (a > 1 ? "^" + std::to_string(a) : "");
        (e > 0 ? num : den).push_back(s);
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
        return s;
    };
    std::string out;
    if (num.empty())
        out = n.coefficient.str();
    else if (n.coefficient == 1)
        out = join(num);
    else if (n.coefficient == -1)
        out = "-" + join(num);
    else
        out = n.coefficient.str() + "*" + join(num);
    if (den.size() == 1)
        out += "/" + den[0];
    else if (den.size() > 1)
        out += "/(" + join(den) + ")";
    return out;
}

inline std::string formatRational(const FactoredRational& fr) { return formatRational(normalize(fr)); }

// -- wall intersections -------------------------------------------------------

struct RayPoint {
    LatticeVector direction;          // chi of the first ray on this line
    std::vector<std::size_t> rays;    // ray groups vanishing at the point
    LatticeVector valuation;          // lambda -> order of f^*(x^lambda) at the point
    bool inChart[2] = {false, false};
    std::optional<i64> chartLength[2];
    i64 length = 0;
    bool chartsAgree = true;
};

struct WallIntersection {
    std::size_t wallIdx = 0;
    bool applicable = false;
    std::optional<i64> dFormula;
    std::size_t charts[2] = {0, 0}; // chambers before / after the wall
    std::vector<RayPoint> points;
    std::vector<std::size_t> supportPoints;
    i64 total = 0;
    bool chartsAgree = true;
};

inline std::vector<RayPoint> rayPoints(const GKZFan& fan) {
    std::vector<RayPoint> pts;
    for (std::size_t i = 0; i < fan.rayGroups.size(); ++i) {
        const auto& g = fan.rayGroups[i];
        auto it = std::find_if(pts.begin(), pts.end(),
                               [&](const RayPoint& p) { return parallelLine(p.direction, g.chi); });
        if (it == pts.end()) {
            pts.push_back({});
            it = std::prev(pts.end());
            it->direction = g.chi;
        }
        it->rays.push_back(i);
        it->valuation = it->valuation - g.total * g.chi;
    }
    return pts;
}

inline WallIntersection wallIntersectionLength(const GKZFan& fan, std::size_t wallIdx) {
    if (wallIdx >= fan.wallCount())
        throw Error(ErrorKind::IndexOutOfRange, "wall index " + std::to_string(wallIdx));
    WallIntersection wi;
    wi.wallIdx = wallIdx;
    const RayGroup& src = fan.source(wallIdx);
    const LatticeVector wallRay = fan.walls[wallIdx].ray;
    wi.applicable = std::none_of(fan.rayGroups.begin(), fan.rayGroups.end(),
                                 [&](const RayGroup& g) { return g.chi == wallRay; });
    if (wi.applicable)
        wi.dFormula = src.total;
    wi.charts[0] = fan.chamberBefore(wallIdx);
    wi.charts[1] = fan.chamberAfter(wallIdx);
    // monomials in the ideal of the wall curve
    const HalfPlane ideal{src.chi, -1};

    wi.points = rayPoints(fan);
    for (std::size_t k = 0; k < wi.points.size(); ++k) {
        auto& pt = wi.points[k];
        for (int c = 0; c < 2; ++c) {
            const Cone2 dual = dualCone(fan.chambers[wi.charts[c]]);
            pt.inChart[c] = dot(pt.valuation, dual.generatorA()) >= 0 && dot(pt.valuation, dual.generatorB()) >= 0;
            if (!pt.inChart[c])
                continue;
            MinimizeResult r = latticeMinimize(pt.valuation, dual, ideal);
            if (r.unbounded)
                throw Error(ErrorKind::Internal, "valuation unbounded below on a chart it belongs to");
            pt.chartLength[c] = r.value;
        }
        if (pt.chartLength[0] && pt.chartLength[1])
            pt.chartsAgree = *pt.chartLength[0] == *pt.chartLength[1];
        pt.length = pt.chartLength[0] ? *pt.chartLength[0] : pt.chartLength[1].value_or(0);
        if (pt.length > 0) {
            wi.total += pt.length;
            wi.supportPoints.push_back(k);
        }
        wi.chartsAgree = wi.chartsAgree && pt.chartsAgree;
    }
    return wi;
}

// index of the point carrying a given ray group
inline std::size_t pointOfRay(const WallIntersection& wi, std::size_t ray) {
    for (std::size_t k = 0; k < wi.points.size(); ++k)
        for (auto r : wi.points[k].rays)
            if (r == ray)
                return k;
    throw Error(ErrorKind::Internal, "ray has no point");
}

struct ExpectedCountReport {
    std::size_t wallIdx = 0;
    i64 discriminantLength = 0;
    i64 collectionLength = 0;
    std::optional<bool> agree; // unset when the proposition does not apply
    std::string note;
};

inline ExpectedCountReport expectedAutoequivalences(const GKZFan& fan, std::size_t wallIdx,
                                                    const WeightedProjectiveData& data) {
    WallIntersection wi = wallIntersectionLength(fan, wallIdx);
    ExpectedCountReport r;
    r.wallIdx = wallIdx;
    r.discriminantLength = wi.total;
    r.collectionLength = data.collectionLength;
    if (wi.applicable) {
        r.agree = wi.total == data.collectionLength;
        r.note = *r.agree ? "agree" : "disagree";
    } else {
        r.note = "proposition inapplicable";
    }
    return r;
}

} // namespace vgit
