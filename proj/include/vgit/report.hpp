#pragma once

// Deterministic JSON reports over the analysis modules.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vgit/discriminant.hpp"
#include "vgit/io.hpp"
#include "vgit/kmut.hpp"
#include "vgit/render.hpp"

namespace vgit {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "1.0.0";

// 1 = input validation, 2 = non-generic linearization, 3 = internal
inline int exitCodeFor(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotCalabiYau:
    case ErrorKind::ZeroColumn:
    case ErrorKind::RankDeficient:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::ZeroVector:
        return 1;
    case ErrorKind::NonGenericLinearization:
        return 2;
    default:
        return 3;
    }
}

inline ordered_json toJson(const LatticeVector& v) { return ordered_json::array({v.x, v.y}); }

inline ordered_json toJson(const MuValue& m) {
    return {{"sign", m.sign}, {"squared", m.squaredMagnitude.str()}};
}

inline ordered_json labelsOf(const WeightMatrix& w, Support s) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (s >> i & 1) out.push_back(w.labels[i]);
    return out;
}

inline ordered_json toJson(const WeightMatrix& w, const ConstructibleCoordSet& s) {
    auto c = canonical(s);
    ordered_json ex = ordered_json::array();
    for (auto b : c.excluded) ex.push_back(labelsOf(w, b));
    return {{"notation", renderCoordSet(w, c)}, {"ambient", labelsOf(w, c.ambient)}, {"excluded", ex}};
}

inline ordered_json toJson(const WeightMatrix& w, const KNStratum& s) {
    return {{"lambda", toJson(s.lambda)}, {"mu", toJson(s.mu)},  {"Z", toJson(w, s.zSet)},
            {"S", toJson(w, s.sSet)},     {"etaPlus", s.etaPlus}, {"etaMinus", s.etaMinus}};
}

inline ordered_json toJson(const WeightMatrix& w, const GKZFan& fan, const Stratification& st) {
    ordered_json strata = ordered_json::array();
    for (const auto& s : st.strata) strata.push_back(toJson(w, s));
    ordered_json skipped = ordered_json::array();
    for (const auto& s : st.skipped)
        skipped.push_back({{"lambda", toJson(s.lambda)},
                           {"fixed", labelsOf(w, s.fixedSupport)},
                           {"coveredBy", s.coveredBy == 0 ? std::string("max") : std::to_string(s.coveredBy - 1)}});
    Location loc = locate(fan, st.chi);
    return {{"chi", toJson(st.chi)},
            {"chamber", loc.kind == Location::Kind::Chamber ? chamberLabel(loc.index) : std::string("-")},
            {"lambdaMax", toJson(st.lambdaMax)},
            {"Smax", {{"notation", renderLocus(w, st.sMaxSupport)}, {"support", labelsOf(w, st.sMaxSupport)}}},
            {"strata", strata},
            {"skipped", skipped}};
}

inline ordered_json toJson(const GKZFan& fan, const WeightMatrix& w) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : fan.rayGroups) {
        ordered_json members = ordered_json::array();
        for (auto i : g.memberColumns) members.push_back(w.labels[i]);
        groups.push_back({{"chi", toJson(g.chi)}, {"multipliers", g.multipliers}, {"total", g.total}, {"members", members}});
    }
    ordered_json walls = ordered_json::array();
    for (std::size_t k = 0; k < fan.walls.size(); ++k)
        walls.push_back({{"index", k}, {"ray", toJson(fan.walls[k].ray)}, {"sources", fan.walls[k].sources}});
    ordered_json chambers = ordered_json::array();
    for (std::size_t k = 0; k < fan.chambers.size(); ++k)
        chambers.push_back({{"index", k},
                            {"label", chamberLabel(k)},
                            {"generators", {toJson(fan.chambers[k].generatorA()), toJson(fan.chambers[k].generatorB())}}});
    return {{"rayGroups", groups}, {"walls", walls}, {"chambers", chambers}};
}

inline ordered_json toJson(const WindowDescriptor& d) {
    return {{"eta", d.eta}, {"w", d.w}, {"G", d.gWeights()}, {"C", d.cWeights()}, {"A", d.aWeight}, {"dual", d.dual}};
}

inline ordered_json toJson(const WeightedProjectiveData& d, const WeightMatrix& w) {
    ordered_json cols = ordered_json::array();
    for (auto i : d.fixedColumns) cols.push_back(w.labels[i]);
    return {{"weights", d.weights},
            {"negativeWeights", d.negativeWeights},
            {"fixedColumns", cols},
            {"collectionLength", d.collectionLength},
            {"weightedProjective", d.weightedProjective}};
}

inline ordered_json toJson(const WallIntersection& wi) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : wi.points) {
        auto len = [](const std::optional<i64>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
        pts.push_back({{"direction", toJson(p.direction)},
                       {"rays", p.rays},
                       {"valuation", toJson(p.valuation)},
                       {"inChart", {p.inChart[0], p.inChart[1]}},
                       {"chartLength", {len(p.chartLength[0]), len(p.chartLength[1])}},
                       {"length", p.length}});
    }
    return {{"applicable", wi.applicable},
            {"dFormula", wi.dFormula ? ordered_json(*wi.dFormula) : ordered_json(nullptr)},
            {"charts", {chamberLabel(wi.charts[0]), chamberLabel(wi.charts[1])}},
            {"points", pts},
            {"supportPoints", wi.supportPoints},
            {"total", wi.total},
            {"chartsAgree", wi.chartsAgree}};
}

inline ordered_json toJson(const ExpectedCountReport& r) {
    return {{"wall", r.wallIdx},
            {"discriminantLength", r.discriminantLength},
            {"collectionLength", r.collectionLength},
            {"agree", r.agree ? ordered_json(*r.agree) : ordered_json(nullptr)},
            {"note", r.note}};
}

inline ordered_json toJson(const FactoredRational& fr) {
    ordered_json factors = ordered_json::array();
    for (const auto& f : fr.factors)
        factors.push_back({{"ray", f.ray}, {"form", toJson(f.form)}, {"exponent", f.exponent}});
    NormalizedRational n = normalize(fr);
    ordered_json nf = ordered_json::array();
    for (const auto& [form, e] : n.factors) nf.push_back({{"form", toJson(form)}, {"exponent", e}});
    return {{"coefficient", fr.coefficient.str()},
            {"factors", factors},
            {"degree", degree(fr)},
            {"normalized", {{"coefficient", n.coefficient.str()}, {"factors", nf}}},
            {"text", formatRational(n)}};
}

inline ordered_json toJson(const FactorizationPlan& p) {
    ordered_json wins = ordered_json::array();
    for (const auto& w : p.windows) wins.push_back({{"name", w.name}, {"conditions", w.conditions}});
    ordered_json steps = ordered_json::array();
    for (const auto& s : p.steps) steps.push_back({{"from", s.from}, {"to", s.to}, {"twist", s.twist}});
    return {{"collectionLength", p.collectionLength},
            {"eta", p.eta},
            {"w", p.w},
            {"windows", wins},
            {"steps", steps},
            {"compositionOrder", p.compositionOrder},
            {"intermediateWindows", p.intermediateWindows}};
}

inline ordered_json toJson(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        ordered_json r = ordered_json::array();
        for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

inline ordered_json toJson(const QMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        ordered_json r = ordered_json::array();
        for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j).str());
        rows.push_back(r);
    }
    return rows;
}

// -- per-task sections --------------------------------------------------------

inline ordered_json nearWallStrata(const WeightMatrix& w, const GKZFan& fan, std::size_t wallIdx) {
    NearWallCharacters nw = nearWallCharacters(fan, wallIdx);
    return {{"wall", wallIdx},
            {"ray", toJson(fan.walls[wallIdx].ray)},
            {"K", nw.K},
            {"minus", toJson(w, fan, knStratify(w, nw.chiMinus))},
            {"plus", toJson(w, fan, knStratify(w, nw.chiPlus))}};
}

// first generic character a*A + b*B inside the chamber, by increasing a+b
inline LatticeVector interiorCharacter(const WeightMatrix& w, const GKZFan& fan, std::size_t chamberIdx) {
    if (chamberIdx >= fan.chamberCount())
        throw Error(ErrorKind::IndexOutOfRange, "chamber index " + std::to_string(chamberIdx));
    const auto& c = fan.chambers[chamberIdx];
    for (i64 s = 2; s < 200; ++s)
        for (i64 a = 1; a < s; ++a) {
            LatticeVector chi = a * c.generatorA() + (s - a) * c.generatorB();
            try {
                knStratify(w, chi);
                return chi;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonGenericLinearization) throw;
            }
        }
    throw Error(ErrorKind::NonGenericLinearization, "no generic character found in chamber " + chamberLabel(chamberIdx));
}

inline ordered_json wallSection(const WeightMatrix& w, const GKZFan& fan, std::size_t wallIdx, i64 weight) {
    BalancedWallReport rep = wallCrossing(w, fan, wallIdx);
    WeightedProjectiveData wp = fixedSubquotient(w, fan, rep.flippedPlus(), wallIdx);
    WallIntersection wi = wallIntersectionLength(fan, wallIdx);
    ordered_json src = ordered_json::array();
    for (auto s : fan.walls[wallIdx].sources) src.push_back(toJson(fan.rayGroups[s].chi));
    return {{"index", wallIdx},
            {"ray", toJson(rep.ray)},
            {"sources", src},
            {"chamberMinus", chamberLabel(rep.chamberMinus)},
            {"chamberPlus", chamberLabel(rep.chamberPlus)},
            {"probes", {{"K", rep.probes.K}, {"chiMinus", toJson(rep.probes.chiMinus)}, {"chiPlus", toJson(rep.probes.chiPlus)}}},
            {"crossing",
             {{"verdict", rep.balanced ? "Balanced" : "NotBalanced"},
              {"flippedMinus", toJson(w, rep.flippedMinus())},
              {"flippedPlus", toJson(w, rep.flippedPlus())},
              {"sharedZ", toJson(w, rep.sharedZ)},
              {"eta", rep.eta},
              {"windowDual", "w -> " + std::to_string(-rep.eta) + " - w"},
              {"window", toJson(windowDescriptor(rep.eta, weight))},
              {"residualWeights", rep.residualWeights}}},
            {"fixedSubquotient", toJson(wp, w)},
            {"intersection", toJson(wi)}};
}

inline ExpectedCountReport expectedForWall(const WeightMatrix& w, const GKZFan& fan, std::size_t wallIdx) {
    BalancedWallReport rep = wallCrossing(w, fan, wallIdx);
    return expectedAutoequivalences(fan, wallIdx, fixedSubquotient(w, fan, rep.flippedPlus(), wallIdx));
}

inline constexpr i64 kMaxGramRank = 12;

inline ordered_json kmutSection(const WeightMatrix& w, const GKZFan& fan, std::size_t wallIdx, i64 weight) {
    BalancedWallReport rep = wallCrossing(w, fan, wallIdx);
    WeightedProjectiveData wp = fixedSubquotient(w, fan, rep.flippedPlus(), wallIdx);
    ordered_json out = {{"wall", wallIdx}, {"weights", wp.weights}, {"weightedProjective", wp.weightedProjective}};
    if (wp.collectionLength <= kMaxGramRank) {
        IntMatrix gram = weightedProjectiveGram(wp.weights);
        out["gram"] = toJson(gram);
        out["exceptional"] = isUpperUnitriangular(gram);
    } else {
        out["gram"] = nullptr;
    }
    out["plan"] = toJson(factorizationPlan(wp.collectionLength, rep.eta, weight));
    return out;
}

// -- analyze ------------------------------------------------------------------

inline const std::vector<std::string>& allTasks() {
    static const std::vector<std::string> t = {"fan", "strata", "walls", "horn", "expected", "kmut"};
    return t;
}

struct AnalysisRequest {
    LoadedInput input;
    std::vector<std::string> tasks;
    std::optional<std::size_t> chamber;
    std::optional<std::size_t> wall;
    std::vector<LatticeVector> lambdas{{1, 0}, {0, 1}};
    i64 w = 0;
};

inline ordered_json reportHeader(const LoadedInput& in) {
    return {{"schemaVersion", kReportSchema}, {"generator", std::string("vgit ") + kVersion}, {"input", in.echo}};
}

inline ordered_json runAnalyze(const AnalysisRequest& req) {
    for (const auto& t : req.tasks)
        if (std::find(allTasks().begin(), allTasks().end(), t) == allTasks().end())
            throw Error(ErrorKind::InvalidInput, "unknown task '" + t + "'");
    const WeightMatrix& w = req.input.weights;
    const GKZFan fan = buildFan(w);
    if (req.wall && *req.wall >= fan.wallCount())
        throw Error(ErrorKind::IndexOutOfRange, "wall index " + std::to_string(*req.wall));
    if (req.chamber && *req.chamber >= fan.chamberCount())
        throw Error(ErrorKind::IndexOutOfRange, "chamber index " + std::to_string(*req.chamber));

    std::vector<std::size_t> walls;
    if (req.wall)
        walls.push_back(*req.wall);
    else
        for (std::size_t k = 0; k < fan.wallCount(); ++k) walls.push_back(k);

    ordered_json report = reportHeader(req.input);
    if (req.tasks.empty())
        return report;
    report["tasks"] = req.tasks;
    ordered_json results = ordered_json::object();
    ordered_json warnings = ordered_json::array();
    auto wants = [&](const char* t) { return std::find(req.tasks.begin(), req.tasks.end(), t) != req.tasks.end(); };

    if (wants("fan"))
        results["fan"] = toJson(fan, w);
    if (wants("strata")) {
        ordered_json s = ordered_json::object();
        if (req.chamber) {
            LatticeVector chi = interiorCharacter(w, fan, *req.chamber);
            s["chamber"] = toJson(w, fan, knStratify(w, chi));
        }
        ordered_json near = ordered_json::array();
        for (auto k : walls) near.push_back(nearWallStrata(w, fan, k));
        s["nearWalls"] = near;
        results["strata"] = s;
    }
    if (wants("walls")) {
        ordered_json arr = ordered_json::array();
        for (auto k : walls) arr.push_back(wallSection(w, fan, k, req.w));
        results["walls"] = arr;
    }
    if (wants("horn")) {
        ordered_json arr = ordered_json::array();
        for (const auto& l : req.lambdas) {
            ordered_json h = {{"lambda", toJson(l)}};
            h.update(toJson(hornPullback(fan, l)));
            arr.push_back(h);
        }
        results["horn"] = arr;
    }
    if (wants("expected")) {
        ordered_json arr = ordered_json::array();
        for (auto k : walls) {
            ExpectedCountReport r = expectedForWall(w, fan, k);
            if (!r.agree)
                warnings.push_back("wall " + std::to_string(k) + ": proposition inapplicable, discriminant length " +
                                   std::to_string(r.discriminantLength) + " reported without a claim");
            arr.push_back(toJson(r));
        }
        results["expected"] = arr;
    }
    if (wants("kmut")) {
        ordered_json arr = ordered_json::array();
        for (auto k : walls) arr.push_back(kmutSection(w, fan, k, req.w));
        results["kmut"] = arr;
    }
    report["results"] = results;
    report["warnings"] = warnings;
    return report;
}

inline std::string dumpReport(const ordered_json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline bool isScalarArray(const ordered_json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_primitive(); });
}

inline std::string scalarText(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline void textLines(const ordered_json& j, const std::string& indent, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || isScalarArray(v) || v.empty()) {
                out += indent + k + ": " + (v.is_primitive() ? scalarText(v) : v.dump()) + "\n";
            } else {
                out += indent + k + ":\n";
                textLines(v, indent + "  ", out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive() || isScalarArray(v)) {
                out += indent + "- " + (v.is_primitive() ? scalarText(v) : v.dump()) + "\n";
            } else {
                out += indent + "-\n";
                textLines(v, indent + "  ", out);
            }
        }
    } else {
        out += indent + scalarText(j) + "\n";
    }
}

} // namespace detail

// indented plain-text view of a report
inline std::string textReport(const ordered_json& j) {
    std::string out;
    detail::textLines(j, "", out);
    return out;
}

} // namespace vgit
