#pragma once

// Weight matrices of a rank-2 torus, ray grouping, and the GKZ wall/chamber fan.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "vgit/lattice.hpp"

namespace vgit {

inline constexpr std::size_t kMaxColumns = 64;

struct WeightMatrix {
    std::vector<LatticeVector> columns;
    std::vector<std::string> labels;

    std::size_t size() const { return columns.size(); }
};

inline std::vector<std::string> defaultLabels(std::size_t m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

inline WeightMatrix parseAndValidate(const std::vector<std::vector<i64>>& raw,
                                     std::vector<std::string> labels = {}) {
    if (raw.size() != 2)
        throw Error(ErrorKind::InvalidInput, "weight table must have exactly 2 rows");
    if (raw[0].size() != raw[1].size())
        throw Error(ErrorKind::InvalidInput, "weight table rows differ in length");
    const std::size_t m = raw[0].size();
    if (m == 0)
        throw Error(ErrorKind::InvalidInput, "weight table is empty");
    if (m > kMaxColumns)
        throw Error(ErrorKind::InvalidInput, "at most 64 columns are supported");

    WeightMatrix w;
    for (std::size_t i = 0; i < m; ++i) {
        LatticeVector c{raw[0][i], raw[1][i]};
        if (c.isZero())
            throw Error(ErrorKind::ZeroColumn, "column " + std::to_string(i) + " is zero");
        w.columns.push_back(c);
    }
    for (int r = 0; r < 2; ++r) {
        i64 s = 0;
        for (auto v : raw[r]) s += v;
        if (s != 0)
            throw Error(ErrorKind::NotCalabiYau, "row " + std::to_string(r) + " sums to " + std::to_string(s));
    }
    bool spans = false;
    for (std::size_t i = 1; i < m && !spans; ++i)
        spans = cross(w.columns[0], w.columns[i]) != 0;
    if (!spans)
        throw Error(ErrorKind::RankDeficient, "columns do not span the plane");

    if (labels.empty())
        labels = defaultLabels(m);
    if (labels.size() != m)
        throw Error(ErrorKind::InvalidInput, "label count does not match column count");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty() || !seen.insert(l).second)
            throw Error(ErrorKind::InvalidInput, "labels must be nonempty and distinct");
    }
    w.labels = std::move(labels);
    return w;
}

struct RayGroup {
    LatticeVector chi;
    std::vector<i64> multipliers;
    i64 total = 0;
    std::vector<std::size_t> memberColumns;
};

inline std::vector<RayGroup> groupRays(const WeightMatrix& w) {
    std::vector<RayGroup> groups;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Primitive p = primitive(w.columns[i]);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const RayGroup& g) { return g.chi == p.direction; });
        if (it == groups.end()) {
            groups.push_back({p.direction, {}, 0, {}});
            it = std::prev(groups.end());
        }
        it->multipliers.push_back(p.multiplier);
        it->total += p.multiplier;
        it->memberColumns.push_back(i);
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](const RayGroup& a, const RayGroup& b) { return ccwLess(a.chi, b.chi); });
    return groups;
}

struct Wall {
    LatticeVector ray;
    std::vector<std::size_t> sources; // ray groups i with -chi_i on this ray
};

struct GKZFan {
    std::vector<RayGroup> rayGroups;
    std::vector<Wall> walls;
    std::vector<Cone2> chambers;

    std::size_t wallCount() const { return walls.size(); }
    std::size_t chamberCount() const { return chambers.size(); }
    // primary ray group of a wall
    const RayGroup& source(std::size_t wallIdx) const { return rayGroups[walls.at(wallIdx).sources.front()]; }
    std::size_t sourceIndex(std::size_t wallIdx) const { return walls.at(wallIdx).sources.front(); }
    // chambers on either side of a wall, counterclockwise before / after
    std::size_t chamberBefore(std::size_t wallIdx) const;
    std::size_t chamberAfter(std::size_t wallIdx) const;
};

inline GKZFan buildFan(std::vector<RayGroup> groups) {
    GKZFan fan;
    fan.rayGroups = std::move(groups);
    for (std::size_t i = 0; i < fan.rayGroups.size(); ++i) {
        LatticeVector r = -fan.rayGroups[i].chi;
        auto it = std::find_if(fan.walls.begin(), fan.walls.end(),
                               [&](const Wall& wl) { return wl.ray == r; });
        if (it == fan.walls.end())
            fan.walls.push_back({r, {i}});
        else
            it->sources.push_back(i);
    }
    if (fan.walls.size() < 3)
        throw Error(ErrorKind::DegenerateFan, "fewer than three wall directions");
    std::stable_sort(fan.walls.begin(), fan.walls.end(),
                     [](const Wall& a, const Wall& b) { return ccwLess(a.ray, b.ray); });

    const std::size_t r = fan.walls.size();
    // chamber 0 is the one entered first when sweeping counterclockwise from +x
    const bool startsOnAxis = fan.walls[0].ray.y == 0 && fan.walls[0].ray.x > 0;
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t lo = startsOnAxis ? k : (k + r - 1) % r;
        std::size_t hi = (lo + 1) % r;
        if (cross(fan.walls[lo].ray, fan.walls[hi].ray) <= 0)
            throw Error(ErrorKind::DegenerateFan, "consecutive walls span a non-convex sector");
        fan.chambers.emplace_back(fan.walls[lo].ray, fan.walls[hi].ray);
    }
    return fan;
}

inline GKZFan buildFan(const WeightMatrix& w) { return buildFan(groupRays(w)); }

inline std::size_t GKZFan::chamberAfter(std::size_t wallIdx) const {
    const auto& r = walls.at(wallIdx).ray;
    for (std::size_t k = 0; k < chambers.size(); ++k)
        if (chambers[k].generatorA() == r)
            return k;
    throw Error(ErrorKind::Internal, "wall has no chamber after it");
}

inline std::size_t GKZFan::chamberBefore(std::size_t wallIdx) const {
    const auto& r = walls.at(wallIdx).ray;
    for (std::size_t k = 0; k < chambers.size(); ++k)
        if (chambers[k].generatorB() == r)
            return k;
    throw Error(ErrorKind::Internal, "wall has no chamber before it");
}

struct Location {
    enum class Kind { Chamber, Wall, Origin } kind = Kind::Origin;
    std::size_t index = 0;

    bool operator==(const Location&) const = default;
};

inline Location locate(const GKZFan& fan, const LatticeVector& chi) {
    if (chi.isZero())
        return {Location::Kind::Origin, 0};
    for (std::size_t i = 0; i < fan.walls.size(); ++i)
        if (sameRay(fan.walls[i].ray, chi))
            return {Location::Kind::Wall, i};
    for (std::size_t k = 0; k < fan.chambers.size(); ++k)
        if (fan.chambers[k].containsInterior(chi))
            return {Location::Kind::Chamber, k};
    throw Error(ErrorKind::Internal, "chambers do not cover " + toString(chi));
}

inline std::string romanNumeral(std::size_t n) {
    static const std::pair<std::size_t, const char*> table[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
        {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"}, {1, "I"}};
    std::string out;
    for (auto [v, s] : table)
        while (n >= v) {
            out += s;
            n -= v;
        }
    return out;
}

// chamber labels are 1-based Roman numerals over 0-based indices
inline std::string chamberLabel(std::size_t idx) { return romanNumeral(idx + 1); }

} // namespace vgit
