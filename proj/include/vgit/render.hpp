#pragma once

// Static pictures of the GKZ fan: an ASCII grid and plain SVG 1.1.
// Walls are drawn through their exact lattice points.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vgit/gkz.hpp"

namespace vgit {

inline constexpr i64 kRenderRadius = 10;

// the lattice point used to anchor a chamber label
inline LatticeVector chamberAnchor(const Cone2& c, i64 radius) {
    LatticeVector p = primitive(c.generatorA() + c.generatorB()).direction;
    i64 m = std::max(std::abs(p.x), std::abs(p.y));
    i64 t = std::max<i64>(1, (radius * 3 / 5) / m);
    return t * p;
}

inline i64 rayReach(const LatticeVector& r, i64 radius) {
    return radius / std::max(std::abs(r.x), std::abs(r.y));
}

inline std::string renderAscii(const GKZFan& fan, const std::vector<std::string>& annotations = {}) {
    const i64 R = kRenderRadius;
    const i64 W = 4 * R + 4, H = 2 * R + 1; // room for a label at the right edge
    std::vector<std::string> grid(static_cast<std::size_t>(H), std::string(static_cast<std::size_t>(W), ' '));
    auto put = [&](i64 x, i64 y, char ch) {
        i64 col = 2 * (x + R), row = R - y;
        if (col >= 0 && col < W && row >= 0 && row < H)
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = ch;
    };
    auto putText = [&](i64 x, i64 y, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            i64 col = 2 * (x + R) + static_cast<i64>(i), row = R - y;
            if (col >= 0 && col < W && row >= 0 && row < H)
                grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = s[i];
        }
    };
    // cells whose centre lies within half a cell of a wall ray, found with integer tests
    for (std::size_t k = 0; k < fan.walls.size(); ++k) {
        const auto& r = fan.walls[k].ray;
        const i64 m = std::max(std::abs(r.x), std::abs(r.y));
        for (i64 x = -R; x <= R; ++x)
            for (i64 y = -R; y <= R; ++y) {
                LatticeVector p{x, y};
                if (p.isZero() || dot(p, r) <= 0)
                    continue;
                if (2 * std::abs(cross(r, p)) <= m)
                    put(x, y, '.');
            }
        for (i64 t = 1; t <= rayReach(r, R); ++t)
            put(t * r.x, t * r.y, '*');
    }
    for (std::size_t k = 0; k < fan.walls.size(); ++k) {
        const auto& r = fan.walls[k].ray;
        i64 t = rayReach(r, R);
        putText(t * r.x, t * r.y, "w" + std::to_string(k));
    }
    for (std::size_t k = 0; k < fan.chambers.size(); ++k) {
        LatticeVector a = chamberAnchor(fan.chambers[k], R);
        putText(a.x, a.y, chamberLabel(k));
    }
    put(0, 0, 'O');

    std::ostringstream os;
    for (auto& line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    os << "\n";
    for (std::size_t k = 0; k < fan.walls.size(); ++k)
        os << "w" << k << ": ray " << fan.walls[k].ray << "\n";
    for (std::size_t k = 0; k < fan.chambers.size(); ++k) {
        os << chamberLabel(k) << ": cone" << fan.chambers[k].generatorA() << fan.chambers[k].generatorB();
        if (k < annotations.size() && !annotations[k].empty())
            os << "  " << annotations[k];
        os << "\n";
    }
    return os.str();
}

inline std::string renderSvg(const GKZFan& fan, const std::vector<std::string>& annotations = {}) {
    const i64 R = kRenderRadius, S = 20, C = R * S + 20, size = 2 * C;
    auto X = [&](i64 x) { return C + S * x; };
    auto Y = [&](i64 y) { return C - S * y; };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n"
       << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (i64 v = -R; v <= R; ++v) {
        os << "<line x1=\"" << X(v) << "\" y1=\"" << Y(-R) << "\" x2=\"" << X(v) << "\" y2=\"" << Y(R) << "\"/>\n";
        os << "<line x1=\"" << X(-R) << "\" y1=\"" << Y(v) << "\" x2=\"" << X(R) << "\" y2=\"" << Y(v) << "\"/>\n";
    }
    os << "</g>\n<g stroke=\"black\" stroke-width=\"2\">\n";
    for (std::size_t k = 0; k < fan.walls.size(); ++k) {
        const auto& r = fan.walls[k].ray;
        i64 t = rayReach(r, R);
        os << "<line id=\"wall" << k << "\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(t * r.x)
           << "\" y2=\"" << Y(t * r.y) << "\"/>\n";
    }
    os << "</g>\n<g fill=\"black\">\n";
    for (std::size_t k = 0; k < fan.walls.size(); ++k) {
        const auto& r = fan.walls[k].ray;
        for (i64 t = 1; t <= rayReach(r, R); ++t)
            os << "<circle cx=\"" << X(t * r.x) << "\" cy=\"" << Y(t * r.y) << "\" r=\"3\"/>\n";
    }
    os << "</g>\n<g font-family=\"monospace\" font-size=\"14\">\n";
    for (std::size_t k = 0; k < fan.walls.size(); ++k) {
        const auto& r = fan.walls[k].ray;
        i64 t = rayReach(r, R);
        os << "<text x=\"" << X(t * r.x) + 4 << "\" y=\"" << Y(t * r.y) - 4 << "\">w" << k << " " << toString(r)
           << "</text>\n";
    }
    for (std::size_t k = 0; k < fan.chambers.size(); ++k) {
        LatticeVector a = chamberAnchor(fan.chambers[k], R);
        os << "<text x=\"" << X(a.x) << "\" y=\"" << Y(a.y) << "\" font-weight=\"bold\">" << chamberLabel(k);
        if (k < annotations.size() && !annotations[k].empty())
            os << "<title>" << annotations[k] << "</title>";
        os << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace vgit
