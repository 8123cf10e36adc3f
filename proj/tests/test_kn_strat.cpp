#include "catch_amalgamated.hpp"

#include "golden.hpp"
#include "oracles.hpp"
#include "vgit/corpus.hpp"

using namespace vgit;

namespace {

WeightMatrix k3() {
    return parseAndValidate({{1, 1, 1, 0, 0, 0, -2, -1}, {0, 0, 0, 1, 1, 1, 0, -3}},
                            {"x0", "x1", "x2", "y0", "y1", "y2", "p", "q"});
}

// stratification against the enumeration oracle, orbit by orbit
bool matchesOracle(const WeightMatrix& w, const LatticeVector& chi, std::string& why) {
    Stratification st = knStratify(w, chi);
    auto orc = oracle::stratify(w, chi);
    if (orc.size() != st.strata.size() + 1) {
        why = "stratum count " + std::to_string(orc.size()) + " vs " + std::to_string(st.strata.size() + 1);
        return false;
    }
    if (!(orc[0].lambda == st.lambdaMax) || orc[0].sSupports != oracle::orbitsOf(sMaxSet(st), w.size())) {
        why = "maximal stratum";
        return false;
    }
    for (std::size_t i = 0; i < st.strata.size(); ++i) {
        const auto& s = st.strata[i];
        if (!(orc[i + 1].lambda == s.lambda) || orc[i + 1].sSupports != oracle::orbitsOf(s.sSet, w.size()) ||
            orc[i + 1].zSupports != oracle::orbitsOf(s.zSet, w.size())) {
            why = "stratum " + toString(s.lambda);
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("canonical constructible sets") {
    // B replaced by its intersection with A, B = A empties the set
    ConstructibleCoordSet s{0b0111, {0b1100}};
    CHECK(canonical(s).excluded == std::vector<Support>{0b0100});
    CHECK(isEmptySet({0b0011, {0b0011}}));
    CHECK(isEmptySet({0b0011, {0b1111}}));
    // non-maximal exclusions dropped
    CHECK(canonical({0b1111, {0b0001, 0b0011}}).excluded == std::vector<Support>{0b0011});
    CHECK(coordSetEquals({0b0111, {0b1100}}, {0b0111, {0b0100}}));
    CHECK(containsSupport({0b0111, {0b0100}}, 0b0011));
    CHECK_FALSE(containsSupport({0b0111, {0b0100}}, 0b0100));
    CHECK_FALSE(containsSupport({0b0111, {0b0100}}, 0b1000));
}

TEST_CASE("V-notation") {
    WeightMatrix w = k3();
    LabelIndex idx(w);
    CHECK(renderLocus(w, 0) == "0");
    CHECK(renderLocus(w, allColumns(8)) == "V");
    auto yq = parseCoordSet(w, "V_{yq}\\V_x");
    CHECK(yq.ambient == 0b01000111);
    CHECK(renderCoordSet(w, yq) == "V_{yq}\\V_{x}");
    CHECK(coordSetEquals(parseCoordSet(w, "V_{xpq}\\V_{xy}"), parseCoordSet(w, "V_{xpq}\\0")));
    CHECK(coordSetEquals(parseCoordSet(w, "V_{xpq} \\setminus V_{xy}"), parseCoordSet(w, "V_{xpq}\\V_{y}")));
    CHECK(coordSetEquals(parseCoordSet(w, "V_{x0x1}"), ConstructibleCoordSet{0b11111100, {}}));
    CHECK(coordSetEquals(parseCoordSet(w, "V_{xpq}\xE2\x88\x96V_{y}"), parseCoordSet(w, "V_{xpq}\\V_{y}")));
    CHECK_THROWS_AS(parseCoordSet(w, "V_{z}"), Error);
    CHECK(isEmptySet(parseCoordSet(w, "empty")));

    // render then parse is the identity on canonical sets
    Rng rng(defaultSeed());
    for (int n = 0; n < 500; ++n) {
        ConstructibleCoordSet s{static_cast<Support>(uniform(rng, 0, 255)), {}};
        for (int k = uniform(rng, 0, 3); k > 0; --k) s.excluded.push_back(static_cast<Support>(uniform(rng, 0, 255)));
        auto c = canonical(s);
        auto back = parseCoordSet(w, renderCoordSet(w, c));
        CHECK(coordSetEquals(back, c));
    }
}

TEST_CASE("K3 stratification in chamber I of the printed figure") {
    WeightMatrix w = k3();
    Stratification st = knStratify(w, {-1, -5});
    CHECK(st.lambdaMax == LatticeVector{-1, -5});
    CHECK(renderLocus(w, st.sMaxSupport) == "V_{xy}");
    REQUIRE(st.strata.size() == 2);
    CHECK(st.strata[0].lambda == LatticeVector{0, -1});
    CHECK(coordSetEquals(st.strata[0].zSet, parseCoordSet(w, "V_{yq}\\V_x")));
    CHECK(coordSetEquals(st.strata[0].sSet, parseCoordSet(w, "V_y\\V_x")));
    CHECK(st.strata[1].lambda == LatticeVector{-1, 0});
    CHECK(coordSetEquals(st.strata[1].zSet, parseCoordSet(w, "V_{xpq}\\V_{xy}")));
    CHECK(coordSetEquals(st.strata[1].sSet, parseCoordSet(w, "V_x\\V_{xy}")));
    REQUIRE(st.skipped.size() == 1);
    CHECK(st.skipped[0].lambda == LatticeVector{3, -1});
    // mu strictly decreasing
    CHECK(compareMu(st.strata[0].mu, st.strata[1].mu) == std::weak_ordering::greater);
}

TEST_CASE("derived stratification tables are frozen") {
    auto in = loadInput(golden::fixture("k3_25.json"));
    GKZFan fan = buildFan(in.weights);
    auto derived = golden::loadJson("golden/strata_derived.json");
    auto relabel = golden::loadJson("golden/k3_25_relabel.json");
    for (const auto& c : golden::compareTables(in.weights, fan, derived, relabel)) {
        INFO(c.name);
        for (const auto& d : c.diffs) INFO(d);
        CHECK(c.ok);
    }
}

TEST_CASE("reference tables differ in two places, and the oracle sides with the computation") {
    auto in = loadInput(golden::fixture("k3_25.json"));
    GKZFan fan = buildFan(in.weights);
    auto printed = golden::loadJson("golden/strata_reference.json");
    auto relabel = golden::loadJson("golden/k3_25_relabel.json");
    auto checks = golden::compareTables(in.weights, fan, printed, relabel);
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].ok);
    CHECK_FALSE(checks[1].ok);
    CHECK(checks[2].ok);
    CHECK_FALSE(checks[3].ok);

    for (std::size_t k = 0; k < fan.wallCount(); ++k) {
        NearWallCharacters nw = nearWallCharacters(fan, k);
        std::string why;
        INFO("wall " << k);
        CHECK(matchesOracle(in.weights, nw.chiMinus, why));
        CHECK(matchesOracle(in.weights, nw.chiPlus, why));
    }
}

TEST_CASE("near-wall characters") {
    GKZFan fan = buildFan(k3());
    for (std::size_t k = 0; k < fan.wallCount(); ++k) {
        NearWallCharacters nw = nearWallCharacters(fan, k);
        CHECK(nw.K == 7);
        CHECK(locate(fan, nw.chiPlus).kind == Location::Kind::Chamber);
        CHECK(locate(fan, nw.chiPlus).index == fan.chamberAfter(k));
        CHECK(locate(fan, nw.chiMinus).index == fan.chamberBefore(k));
        const auto& r = fan.walls[k].ray;
        CHECK(nw.chiPlus == nw.K * r + rotCcw(r));
        CHECK(nw.chiMinus == nw.K * r + rotCw(r));
    }
}

TEST_CASE("non-generic characters are rejected") {
    WeightMatrix w = k3();
    auto kind = [&](LatticeVector chi) {
        try {
            knStratify(w, chi);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind({0, -1}) == ErrorKind::NonGenericLinearization);
    CHECK(kind({2, 6}) == ErrorKind::NonGenericLinearization);
    CHECK(kind({0, 0}) == ErrorKind::NonGenericLinearization);
    // (-1,-1): candidates (0,-1) and (-1,0) tie
    CHECK(kind({-1, -1}) == ErrorKind::NonGenericLinearization);
}

TEST_CASE("balanced crossings of the K3 example") {
    WeightMatrix w = k3();
    GKZFan fan = buildFan(w);
    const i64 eta[4] = {3, 9, 3, 3};
    const LatticeVector flipped[4] = {{0, 1}, {-3, 1}, {0, -1}, {1, 0}};
    for (std::size_t k = 0; k < 4; ++k) {
        BalancedWallReport rep = wallCrossing(w, fan, k);
        INFO("wall " << k);
        CHECK(rep.balanced);
        CHECK(rep.flippedPlus().lambda == -rep.flippedMinus().lambda);
        CHECK(rep.flippedPlus().lambda == flipped[k]);
        CHECK(coordSetEquals(rep.flippedPlus().zSet, rep.flippedMinus().zSet));
        CHECK(rep.eta == eta[k]);
        for (i64 x = -5; x <= 5; ++x) CHECK(rep.windowDual(rep.windowDual(x)) == x);
    }
    CHECK(coordSetEquals(wallCrossing(w, fan, 1).sharedZ, parseCoordSet(w, "V_{xyp}\\0")));
    CHECK(wallCrossing(w, fan, 3).residualWeights == std::vector<i64>{1, 1, 1});
}

TEST_CASE("windows") {
    WindowDescriptor d = windowDescriptor(3, 0);
    CHECK(d.gWeights() == std::vector<i64>{0, 1, 2});
    CHECK(d.cWeights() == std::vector<i64>{0, 1, 2, 3});
    CHECK(d.dual == -3);
    for (i64 eta = 1; eta < 6; ++eta)
        for (i64 x = -10; x <= 10; ++x) CHECK(dualWeight(eta, dualWeight(eta, x)) == x);
}

TEST_CASE("fixed subquotient") {
    WeightMatrix w = k3();
    GKZFan fan = buildFan(w);
    // wall 0 is cut out by the p-ray; nothing points the other way
    auto rep0 = wallCrossing(w, fan, 0);
    auto d0 = fixedSubquotient(w, fan, rep0.flippedPlus(), 0);
    CHECK(d0.weights == std::vector<i64>{2});
    CHECK(d0.negativeWeights == std::vector<i64>{-1, -1, -1});
    CHECK_FALSE(d0.weightedProjective);
    auto rep3 = wallCrossing(w, fan, 3);
    auto d3 = fixedSubquotient(w, fan, rep3.flippedPlus(), 3);
    CHECK(d3.weightedProjective);
    CHECK(d3.collectionLength == 3);
    CHECK_THROWS_AS(fixedSubquotient(w, fan, rep3.flippedPlus(), 1), Error);
}

TEST_CASE("stratifications agree with the oracle on a random corpus") {
    Rng rng(defaultSeed() + 1);
    int compared = 0;
    for (int n = 0; n < 25; ++n) {
        WeightMatrix w = parseAndValidate(randomCYTable(rng, 7, 3));
        GKZFan fan = buildFan(w);
        for (std::size_t k = 0; k < fan.wallCount(); ++k) {
            NearWallCharacters nw = nearWallCharacters(fan, k);
            for (auto chi : {nw.chiMinus, nw.chiPlus}) {
                std::string why;
                bool ok = matchesOracle(w, chi, why);
                INFO(toString(chi) << " " << why);
                CHECK(ok);
                ++compared;
            }
        }
    }
    CHECK(compared > 50);
}
