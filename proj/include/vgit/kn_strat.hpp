#pragma once

// Kirwan-Ness stratifications, window bookkeeping and balanced wall crossings.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vgit/gkz.hpp"

namespace vgit {

// coordinate index sets, bit i = column i
using Support = std::uint64_t;

inline bool isSubset(Support a, Support b) { return (a & ~b) == 0; }
inline Support allColumns(std::size_t m) { return m >= 64 ? ~Support(0) : ((Support(1) << m) - 1); }

// Span(ambient) minus the union of Span(B) over the excluded supports
struct ConstructibleCoordSet {
    Support ambient = 0;
    std::vector<Support> excluded;
};

inline ConstructibleCoordSet canonical(const ConstructibleCoordSet& s) {
    ConstructibleCoordSet out{s.ambient, {}};
    std::vector<Support> bs;
    for (Support b : s.excluded) {
        Support c = b & s.ambient;
        if (c == s.ambient)
            return {0, {0}}; // the empty set
        bs.push_back(c);
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    for (Support b : bs) {
        bool maximal = std::none_of(bs.begin(), bs.end(), [&](Support o) { return o != b && isSubset(b, o); });
        if (maximal)
            out.excluded.push_back(b);
    }
    return out;
}

inline bool isEmptySet(const ConstructibleCoordSet& s) {
    auto c = canonical(s);
    return c.ambient == 0 && c.excluded.size() == 1 && c.excluded[0] == 0;
}

inline bool coordSetEquals(const ConstructibleCoordSet& a, const ConstructibleCoordSet& b) {
    auto ca = canonical(a), cb = canonical(b);
    return ca.ambient == cb.ambient && ca.excluded == cb.excluded;
}

inline bool containsSupport(const ConstructibleCoordSet& s, Support pointSupport) {
    if (!isSubset(pointSupport, s.ambient))
        return false;
    return std::none_of(s.excluded.begin(), s.excluded.end(),
                        [&](Support b) { return isSubset(pointSupport, b); });
}

// -- V-notation -------------------------------------------------------------
// V_S is the locus where the variables in S vanish. A letter group is a label
// with its trailing digits removed, so "x" names x0, x1, x2.

inline std::string letterGroup(const std::string& label) {
    std::size_t e = label.size();
    while (e > 0 && std::isdigit(static_cast<unsigned char>(label[e - 1])))
        --e;
    return e == 0 ? label : label.substr(0, e);
}

struct LabelIndex {
    std::vector<std::string> groupNames;                 // in first-appearance order
    std::map<std::string, Support> groups;
    std::map<std::string, Support> singles;

    explicit LabelIndex(const WeightMatrix& w) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::string g = letterGroup(w.labels[i]);
            if (!groups.count(g))
                groupNames.push_back(g);
            groups[g] |= Support(1) << i;
            singles[w.labels[i]] = Support(1) << i;
        }
    }
};

inline std::string renderVanishing(const WeightMatrix& w, Support vanish) {
    LabelIndex idx(w);
    std::string out;
    for (const auto& g : idx.groupNames) {
        Support members = idx.groups.at(g);
        if (isSubset(members, vanish)) {
            out += g;
        } else {
            for (std::size_t i = 0; i < w.size(); ++i)
                if ((members >> i & 1) && (vanish >> i & 1))
                    out += w.labels[i];
        }
    }
    return out;
}

inline std::string renderLocus(const WeightMatrix& w, Support support) {
    if (support == 0)
        return "0";
    Support vanish = allColumns(w.size()) & ~support;
    if (vanish == 0)
        return "V";
    return "V_{" + renderVanishing(w, vanish) + "}";
}

inline std::string renderCoordSet(const WeightMatrix& w, const ConstructibleCoordSet& s) {
    auto c = canonical(s);
    if (c.ambient == 0 && c.excluded.size() == 1 && c.excluded[0] == 0)
        return "empty";
    std::string out = renderLocus(w, c.ambient);
    // inside Span(A), Span(B) is cut out by the variables of A \ B alone
    auto bs = c.excluded;
    std::stable_sort(bs.begin(), bs.end(),
                     [](Support a, Support b) { return std::popcount(a) > std::popcount(b); });
    for (Support b : bs)
        out += "\\V_{" + renderVanishing(w, c.ambient & ~b) + "}";
    return out;
}

namespace detail {

inline Support parseVanishing(const LabelIndex& idx, std::string_view body) {
    Support out = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t bestLen = 0;
        Support bestSet = 0;
        auto consider = [&](const std::map<std::string, Support>& table) {
            for (const auto& [name, set] : table)
                if (name.size() > bestLen && body.substr(pos, name.size()) == name) {
                    bestLen = name.size();
                    bestSet = set;
                }
        };
        consider(idx.groups);
        consider(idx.singles);
        if (bestLen == 0)
            throw Error(ErrorKind::InvalidInput, "unknown variable in V-notation near '" +
                                                     std::string(body.substr(pos)) + "'");
        out |= bestSet;
        pos += bestLen;
    }
    return out;
}

inline Support parseLocus(const WeightMatrix& w, const LabelIndex& idx, std::string_view piece) {
    if (piece == "0")
        return 0;
    if (piece == "V")
        return allColumns(w.size());
    if (piece.size() < 3 || piece.substr(0, 2) != "V_")
        throw Error(ErrorKind::InvalidInput, "expected V_{...} but got '" + std::string(piece) + "'");
    std::string_view body = piece.substr(2);
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw Error(ErrorKind::InvalidInput, "unbalanced braces in '" + std::string(piece) + "'");
        body = body.substr(1, body.size() - 2);
    }
    return allColumns(w.size()) & ~parseVanishing(idx, body);
}

} // namespace detail

// Accepts "\", "\setminus" and the Unicode set minus between loci.
inline ConstructibleCoordSet parseCoordSet(const WeightMatrix& w, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '$')
            s += ch;
    const std::string uni = "\xE2\x88\x96";
    std::vector<std::string> pieces(1);
    for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, 9, "\\setminus") == 0) {
            pieces.emplace_back();
            i += 9;
        } else if (s.compare(i, uni.size(), uni) == 0) {
            pieces.emplace_back();
            i += uni.size();
        } else if (s[i] == '\\') {
            pieces.emplace_back();
            ++i;
        } else {
            pieces.back() += s[i++];
        }
    }
    if (pieces.size() == 1 && pieces[0] == "empty")
        return {0, {0}};
    LabelIndex idx(w);
    ConstructibleCoordSet out;
    out.ambient = detail::parseLocus(w, idx, pieces[0]);
    for (std::size_t k = 1; k < pieces.size(); ++k)
        out.excluded.push_back(detail::parseLocus(w, idx, pieces[k]));
    return out;
}

// -- strata -------------------------------------------------------------------

inline Support supportWhere(const WeightMatrix& w, const LatticeVector& lambda, int minSign, int maxSign) {
    Support s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        i64 p = dot(w.columns[i], lambda);
        int sg = (p > 0) - (p < 0);
        if (sg >= minSign && sg <= maxSign)
            s |= Support(1) << i;
    }
    return s;
}
inline Support fixedSupport(const WeightMatrix& w, const LatticeVector& l) { return supportWhere(w, l, 0, 0); }
inline Support attractingSupport(const WeightMatrix& w, const LatticeVector& l) { return supportWhere(w, l, 0, 1); }

inline i64 etaOf(const WeightMatrix& w, const LatticeVector& lambda) {
    if (lambda.isZero())
        throw Error(ErrorKind::ZeroVector, "eta of the zero cocharacter");
    i64 eta = 0;
    for (const auto& c : w.columns) {
        i64 p = dot(c, lambda);
        if (p < 0)
            eta -= p;
    }
    return eta;
}

struct KNStratum {
    LatticeVector lambda;
    MuValue mu;
    Support fixedSupport = 0;
    Support attractingSupport = 0;
    ConstructibleCoordSet zSet;
    ConstructibleCoordSet sSet;
    i64 etaPlus = 0;
    i64 etaMinus = 0;
};

struct SkippedCandidate {
    LatticeVector lambda;
    MuValue mu;
    Support fixedSupport = 0;
    std::size_t coveredBy = 0; // 0 = maximal stratum, k = stratum k-1
};

struct Stratification {
    LatticeVector chi;
    LatticeVector lambdaMax;
    Support sMaxSupport = 0;
    std::vector<KNStratum> strata;
    std::vector<SkippedCandidate> skipped;
};

// destabilizing candidates: one per line perpendicular to a ray, oriented by chi
inline std::vector<LatticeVector> candidateCocharacters(const std::vector<RayGroup>& groups,
                                                        const LatticeVector& chi) {
    std::vector<LatticeVector> out;
    for (const auto& g : groups) {
        LatticeVector l = rotCcw(g.chi);
        i64 p = dot(chi, l);
        if (p == 0)
            throw Error(ErrorKind::NonGenericLinearization,
                        "chi " + toString(chi) + " is parallel to weight ray " + toString(g.chi));
        if (p < 0)
            l = -l;
        if (std::find(out.begin(), out.end(), l) == out.end())
            out.push_back(l);
    }
    return out;
}

inline Stratification knStratify(const WeightMatrix& w, const LatticeVector& chi) {
    if (chi.isZero())
        throw Error(ErrorKind::NonGenericLinearization, "chi is zero");
    for (const auto& c : w.columns)
        if (sameRay(chi, -c))
            throw Error(ErrorKind::NonGenericLinearization, "chi " + toString(chi) + " lies on a wall");

    const auto groups = groupRays(w);
    Stratification st;
    st.chi = chi;
    st.lambdaMax = primitive(chi).direction;
    st.sMaxSupport = attractingSupport(w, st.lambdaMax);

    auto cands = candidateCocharacters(groups, chi);
    std::stable_sort(cands.begin(), cands.end(), [&](const LatticeVector& a, const LatticeVector& b) {
        return muCompare(chi, a, b) == std::weak_ordering::greater;
    });
    for (std::size_t k = 1; k < cands.size(); ++k)
        if (muCompare(chi, cands[k - 1], cands[k]) == std::weak_ordering::equivalent)
            throw Error(ErrorKind::NonGenericLinearization,
                        "candidates " + toString(cands[k - 1]) + " and " + toString(cands[k]) + " tie in mu");

    std::vector<Support> earlier{st.sMaxSupport};
    for (const auto& l : cands) {
        Support A = fixedSupport(w, l), B = attractingSupport(w, l);
        auto cover = std::find_if(earlier.begin(), earlier.end(), [&](Support b) { return isSubset(A, b); });
        if (cover != earlier.end()) {
            st.skipped.push_back({l, muValue(chi, l), A, static_cast<std::size_t>(cover - earlier.begin())});
            continue;
        }
        KNStratum s;
        s.lambda = l;
        s.mu = muValue(chi, l);
        s.fixedSupport = A;
        s.attractingSupport = B;
        s.zSet = canonical({A, earlier});
        s.sSet = canonical({B, earlier});
        s.etaPlus = etaOf(w, l);
        s.etaMinus = etaOf(w, -l);
        st.strata.push_back(std::move(s));
        earlier.push_back(B);
    }
    return st;
}

inline ConstructibleCoordSet sMaxSet(const Stratification& st) { return {st.sMaxSupport, {}}; }

// -- windows ------------------------------------------------------------------

inline i64 dualWeight(i64 eta, i64 w) { return -eta - w; }

struct WindowDescriptor {
    i64 eta = 0;
    i64 w = 0;
    i64 gLo = 0, gHi = 0; // [gLo, gHi)
    i64 cLo = 0, cHi = 0; // [cLo, cHi]
    i64 aWeight = 0;
    i64 dual = 0;

    std::vector<i64> gWeights() const {
        std::vector<i64> v;
        for (i64 k = gLo; k < gHi; ++k) v.push_back(k);
        return v;
    }
    std::vector<i64> cWeights() const {
        std::vector<i64> v;
        for (i64 k = cLo; k <= cHi; ++k) v.push_back(k);
        return v;
    }
};

inline WindowDescriptor windowDescriptor(i64 eta, i64 w) {
    return {eta, w, w, w + eta, w, w + eta, w, dualWeight(eta, w)};
}
inline WindowDescriptor windowDescriptor(const KNStratum& s, i64 w) { return windowDescriptor(s.etaPlus, w); }

// -- near-wall characters -----------------------------------------------------

struct NearWallCharacters {
    i64 K = 1;
    LatticeVector chiPlus;  // chamber after the wall (counterclockwise)
    LatticeVector chiMinus; // chamber before the wall
};

namespace detail {

using Poly = std::vector<i128>; // ascending coefficients in K

inline i128 evalPoly(const Poly& p, i128 K) {
    i128 v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = v * K + *it;
    return v;
}

inline int limitSign(const Poly& p) {
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        if (*it != 0)
            return *it > 0 ? 1 : -1;
    return 0;
}

inline i128 cauchyBound(const Poly& p) {
    std::size_t n = p.size();
    while (n > 0 && p[n - 1] == 0) --n;
    if (n <= 1)
        return 1;
    i128 lead = p[n - 1] < 0 ? -p[n - 1] : p[n - 1];
    i128 m = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        i128 a = p[i] < 0 ? -p[i] : p[i];
        m = std::max(m, (a + lead - 1) / lead);
    }
    return 1 + m;
}

inline Poly linear(i128 c0, i128 c1) { return {c0, c1}; }
inline Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}
inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}
inline Poly scale(Poly a, i128 k) {
    for (auto& c : a) c *= k;
    return a;
}

} // namespace detail

// chi_+ = K r + r_ccw, chi_- = K r + r_cw. K is the least positive integer from
// which chamber membership, the sign of every candidate pairing, and the mu
// order of the candidates no longer change as K grows.
inline NearWallCharacters nearWallCharacters(const GKZFan& fan, std::size_t wallIdx) {
    using namespace detail;
    if (wallIdx >= fan.wallCount())
        throw Error(ErrorKind::IndexOutOfRange, "wall index " + std::to_string(wallIdx));
    const LatticeVector r = fan.walls[wallIdx].ray;
    std::vector<Poly> polys;
    struct Side { LatticeVector perp; Cone2 chamber; };
    const Side sides[2] = {{rotCcw(r), fan.chambers[fan.chamberAfter(wallIdx)]},
                           {rotCw(r), fan.chambers[fan.chamberBefore(wallIdx)]}};

    std::vector<LatticeVector> lines;
    for (const auto& g : fan.rayGroups) {
        LatticeVector l = rotCcw(g.chi);
        if (std::none_of(lines.begin(), lines.end(), [&](const LatticeVector& o) { return parallelLine(o, l); }))
            lines.push_back(l);
    }
    for (const auto& side : sides) {
        const auto& A = side.chamber.generatorA();
        const auto& B = side.chamber.generatorB();
        polys.push_back(linear(cross(A, side.perp), cross(A, r)));
        polys.push_back(linear(-cross(B, side.perp), -cross(B, r)));
        std::vector<Poly> pair;
        for (const auto& l : lines) {
            Poly p = linear(dot(side.perp, l), dot(r, l));
            pair.push_back(p);
            polys.push_back(p);
        }
        for (std::size_t j = 0; j < lines.size(); ++j)
            for (std::size_t k = j + 1; k < lines.size(); ++k)
                polys.push_back(sub(scale(mul(pair[j], pair[j]), norm2(lines[k])),
                                    scale(mul(pair[k], pair[k]), norm2(lines[j]))));
    }
    i128 Kc = 1;
    for (const auto& p : polys) {
        if (limitSign(p) == 0)
            throw Error(ErrorKind::NonGenericLinearization,
                        "near-wall characters of wall " + std::to_string(wallIdx) + " are never generic");
        Kc = std::max(Kc, cauchyBound(p));
    }
    auto stableAt = [&](i128 K) {
        return std::all_of(polys.begin(), polys.end(), [&](const Poly& p) {
            i128 v = evalPoly(p, K);
            return (v > 0 ? 1 : v < 0 ? -1 : 0) == limitSign(p);
        });
    };
    i128 K = Kc;
    if (!stableAt(K))
        throw Error(ErrorKind::Internal, "root bound violated in near-wall search");
    while (K > 1 && stableAt(K - 1))
        --K;
    const i64 k = static_cast<i64>(K);
    return {k, k * r + sides[0].perp, k * r + sides[1].perp};
}

// -- balanced wall crossings --------------------------------------------------

struct WeightedProjectiveData {
    std::vector<i64> weights;         // positive residual weights d_j
    std::vector<i64> negativeWeights; // from a ray antiparallel to the wall source
    std::vector<std::size_t> fixedColumns;
    i64 collectionLength = 0;
    bool weightedProjective = true;
};

inline WeightedProjectiveData fixedSubquotient(const WeightMatrix& w, const GKZFan& fan,
                                               const KNStratum& stratum, std::size_t wallIdx) {
    if (wallIdx >= fan.wallCount())
        throw Error(ErrorKind::IndexOutOfRange, "wall index " + std::to_string(wallIdx));
    const RayGroup& src = fan.source(wallIdx);
    if (stratum.lambda.isZero() || dot(src.chi, stratum.lambda) != 0)
        throw Error(ErrorKind::NotWallStratum,
                    "cocharacter " + toString(stratum.lambda) + " does not fix the wall source ray");
    WeightedProjectiveData d;
    d.weights = src.multipliers;
    d.collectionLength = src.total;
    for (const auto& g : fan.rayGroups)
        if (g.chi == -src.chi)
            for (auto m : g.multipliers)
                d.negativeWeights.push_back(-m);
    d.weightedProjective = d.negativeWeights.empty();
    d.fixedColumns.clear();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (dot(w.columns[i], stratum.lambda) == 0)
            d.fixedColumns.push_back(i);
    return d;
}

struct BalancedWallReport {
    std::size_t wallIdx = 0;
    LatticeVector ray;
    NearWallCharacters probes;
    std::size_t chamberPlus = 0, chamberMinus = 0;
    Stratification plus, minus;
    std::size_t flippedPlusIdx = 0, flippedMinusIdx = 0;
    ConstructibleCoordSet sharedZ;
    i64 eta = 0;
    std::vector<i64> residualWeights;
    bool balanced = false;

    const KNStratum& flippedPlus() const { return plus.strata[flippedPlusIdx]; }
    const KNStratum& flippedMinus() const { return minus.strata[flippedMinusIdx]; }
    i64 windowDual(i64 w) const { return dualWeight(eta, w); }
};

inline BalancedWallReport wallCrossing(const WeightMatrix& w, const GKZFan& fan, std::size_t wallIdx) {
    BalancedWallReport rep;
    rep.probes = nearWallCharacters(fan, wallIdx);
    rep.wallIdx = wallIdx;
    rep.ray = fan.walls[wallIdx].ray;
    rep.chamberPlus = fan.chamberAfter(wallIdx);
    rep.chamberMinus = fan.chamberBefore(wallIdx);
    rep.plus = knStratify(w, rep.probes.chiPlus);
    rep.minus = knStratify(w, rep.probes.chiMinus);

    for (std::size_t i = 0; i < rep.plus.strata.size(); ++i)
        for (std::size_t j = 0; j < rep.minus.strata.size(); ++j) {
            const auto& a = rep.plus.strata[i];
            const auto& b = rep.minus.strata[j];
            if (a.lambda == -b.lambda && coordSetEquals(a.zSet, b.zSet)) {
                rep.flippedPlusIdx = i;
                rep.flippedMinusIdx = j;
                rep.sharedZ = canonical(a.zSet);
                rep.eta = a.etaPlus;
                rep.balanced = a.etaPlus == a.etaMinus && b.etaPlus == b.etaMinus && a.etaPlus == b.etaPlus;
                rep.residualWeights = fixedSubquotient(w, fan, a, wallIdx).weights;
                return rep;
            }
        }
    throw Error(ErrorKind::NoFlippedStratum, "no stratum pair flips across wall " + std::to_string(wallIdx));
}

} // namespace vgit
