#pragma once

// Golden-file helpers shared by the unit tests and the acceptance run.

#include <string>
#include <vector>

#include "vgit/io.hpp"
#include "vgit/kn_strat.hpp"

#ifndef VGIT_FIXTURE_DIR
#define VGIT_FIXTURE_DIR "fixtures"
#endif

namespace vgit::golden {

inline std::string fixture(const std::string& rel) { return std::string(VGIT_FIXTURE_DIR) + "/" + rel; }

inline ordered_json loadJson(const std::string& rel) { return ordered_json::parse(readFile(fixture(rel))); }

struct TableCheck {
    std::string name;
    bool ok = true;
    std::vector<std::string> diffs;
};

// chamber name and wall name as printed -> the stratification on that side of the wall
inline Stratification tableStratification(const WeightMatrix& w, const GKZFan& fan, const ordered_json& relabel,
                                          const std::string& wallName, const std::string& chamberName) {
    const std::size_t wall = relabel["walls"][wallName].get<std::size_t>();
    const std::string ours = relabel["chambers"][chamberName].get<std::string>();
    NearWallCharacters nw = nearWallCharacters(fan, wall);
    if (chamberLabel(fan.chamberBefore(wall)) == ours)
        return knStratify(w, nw.chiMinus);
    if (chamberLabel(fan.chamberAfter(wall)) == ours)
        return knStratify(w, nw.chiPlus);
    throw Error(ErrorKind::InvalidInput, "chamber " + chamberName + " is not adjacent to " + wallName);
}

inline std::string lambdaText(const ordered_json& l) {
    return l.is_string() ? l.get<std::string>() : toString(LatticeVector{l[0].get<i64>(), l[1].get<i64>()});
}

// row order, lambda values, Z-sets and S-sets, sets compared as sets
inline std::vector<TableCheck> compareTables(const WeightMatrix& w, const GKZFan& fan, const ordered_json& table,
                                             const ordered_json& relabel) {
    std::vector<TableCheck> out;
    for (const auto& t : table["tables"]) {
        TableCheck c;
        const std::string wallName = t["wall"], chamberName = t["chamber"];
        c.name = "near " + wallName + ", chamber " + chamberName;
        Stratification st = tableStratification(w, fan, relabel, wallName, chamberName);
        const auto& rows = t["rows"];
        if (rows.size() != st.strata.size() + 1) {
            c.ok = false;
            c.diffs.push_back("row count " + std::to_string(rows.size()) + " expected, computed " +
                              std::to_string(st.strata.size() + 1));
        }
        for (std::size_t r = 0; r < rows.size() && r < st.strata.size() + 1; ++r) {
            const auto& row = rows[r];
            ConstructibleCoordSet z, s;
            std::string lam;
            if (r == 0) {
                z = ConstructibleCoordSet{0, {}};
                s = sMaxSet(st);
                lam = "lambda0";
                if (!row["lambda"].is_string()) {
                    c.ok = false;
                    c.diffs.push_back("row 0 should be the maximal stratum");
                }
            } else {
                const KNStratum& k = st.strata[r - 1];
                z = k.zSet;
                s = k.sSet;
                lam = toString(k.lambda);
                LatticeVector expected{row["lambda"][0].get<i64>(), row["lambda"][1].get<i64>()};
                if (!(expected == k.lambda)) {
                    c.ok = false;
                    c.diffs.push_back("row " + std::to_string(r) + ": lambda " + lambdaText(row["lambda"]) +
                                      " expected, computed " + lam);
                    continue;
                }
            }
            ConstructibleCoordSet ez = parseCoordSet(w, row["Z"].get<std::string>());
            ConstructibleCoordSet es = parseCoordSet(w, row["S"].get<std::string>());
            if (!coordSetEquals(ez, z)) {
                c.ok = false;
                c.diffs.push_back("row " + std::to_string(r) + " " + lam + ": Z " + row["Z"].get<std::string>() +
                                  " expected, computed " + renderCoordSet(w, z));
            }
            if (!coordSetEquals(es, s)) {
                c.ok = false;
                c.diffs.push_back("row " + std::to_string(r) + " " + lam + ": S " + row["S"].get<std::string>() +
                                  " expected, computed " + renderCoordSet(w, s));
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

// the computed tables in the golden layout
inline ordered_json computedTables(const WeightMatrix& w, const GKZFan& fan, const ordered_json& layout,
                                   const ordered_json& relabel) {
    ordered_json tables = ordered_json::array();
    for (const auto& t : layout["tables"]) {
        Stratification st = tableStratification(w, fan, relabel, t["wall"], t["chamber"]);
        ordered_json rows = ordered_json::array();
        rows.push_back({{"lambda", "lambda0"}, {"Z", "0"}, {"S", renderCoordSet(w, sMaxSet(st))}});
        for (const auto& k : st.strata)
            rows.push_back({{"lambda", {k.lambda.x, k.lambda.y}},
                            {"Z", renderCoordSet(w, k.zSet)},
                            {"S", renderCoordSet(w, k.sSet)}});
        tables.push_back({{"wall", t["wall"]}, {"chamber", t["chamber"]}, {"chi", {st.chi.x, st.chi.y}}, {"rows", rows}});
    }
    return tables;
}

} // namespace vgit::golden
