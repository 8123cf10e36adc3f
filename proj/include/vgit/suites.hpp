#pragma once

// Seeded property suites shared by the CLI, the tests and the acceptance run.

#include <string>
#include <vector>

#include "vgit/corpus.hpp"
#include "vgit/discriminant.hpp"
#include "vgit/io.hpp"
#include "vgit/kmut.hpp"

namespace vgit {

struct SuiteResult {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t checked = 0; // instances where the claim applies
    std::size_t failures = 0;
    std::vector<std::string> failureNotes; // first few only

    SuiteResult() = default;
    SuiteResult(std::string n, std::uint64_t s = 0, std::size_t count = 0) : name(std::move(n)), seed(s), instances(count) {}

    bool ok() const { return failures == 0 && checked > 0; }
    void fail(std::string note) {
        ++failures;
        if (failureNotes.size() < 5) failureNotes.push_back(std::move(note));
    }
};

inline std::string matrixText(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols; ++j) s += (j ? "," : "") + std::to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

inline std::string tableText(const std::vector<std::vector<i64>>& t) {
    std::string s = "[";
    for (std::size_t r = 0; r < t.size(); ++r) {
        s += r ? ",[" : "[";
        for (std::size_t j = 0; j < t[r].size(); ++j) s += (j ? "," : "") + std::to_string(t[r][j]);
        s += "]";
    }
    return s + "]";
}

// unitriangularity, R after L is the identity, braid relation
inline SuiteResult mutationSuite(std::uint64_t seed, std::size_t count) {
    SuiteResult r{"braid", seed, count};
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const std::size_t rank = static_cast<std::size_t>(uniform(rng, 2, 5));
        IntMatrix E = randomExceptional(rng, rank, 5);
        ++r.checked;
        for (std::size_t k = 0; k + 1 < rank; ++k) {
            for (auto side : {MutationSide::Left, MutationSide::Right}) {
                Mutation m = mutate(E, k, side);
                if (!isUpperUnitriangular(m.gram))
                    r.fail("mutation at " + std::to_string(k) + " broke unitriangularity of " + matrixText(E));
            }
            Mutation lr = mutateSequence(E, {{k, MutationSide::Left}, {k, MutationSide::Right}});
            Mutation rl = mutateSequence(E, {{k, MutationSide::Right}, {k, MutationSide::Left}});
            if (!(lr.gram == E) || !(lr.baseChange == IntMatrix::identity(rank)) || !(rl.baseChange == IntMatrix::identity(rank)))
                r.fail("L and R at " + std::to_string(k) + " are not inverse on " + matrixText(E));
            if (k + 2 < rank) {
                for (auto side : {MutationSide::Left, MutationSide::Right}) {
                    Mutation a = mutateSequence(E, {{k, side}, {k + 1, side}, {k, side}});
                    Mutation b = mutateSequence(E, {{k + 1, side}, {k, side}, {k + 1, side}});
                    if (!(a.baseChange == b.baseChange) || !(a.gram == b.gram))
                        r.fail("braid relation fails at " + std::to_string(k) + " on " + matrixText(E));
                }
            }
        }
    }
    return r;
}

inline SuiteResult twistMutationSuite(std::uint64_t seed, std::size_t count) {
    SuiteResult r{"311", seed, count};
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        SplitInstance inst = random311(rng, 6);
        const std::size_t ka = inst.sizes[0], kb = inst.sizes[1], N = ka + kb;
        const QMatrix E = toRational(inst.E);
        TwistMutationResult t = verifyTwistMutation(E, coordinateBlock(N, indexRange(0, ka)), coordinateBlock(N, indexRange(ka, kb)));
        ++r.checked;
        if (!t.holds)
            r.fail("twist differs from mutation composite on " + matrixText(inst.E));
    }
    return r;
}

// hypothesis and identity over constructed and unconstructed instances; identity
// is asserted only where the hypothesis holds
struct FactorizationSuite {
    SuiteResult result{"412"};
    std::size_t hypothesisTrue = 0;
    std::size_t identityWithoutHypothesis = 0;
    std::size_t iterated = 0;
};

inline FactorizationSuite factorizationSuite(std::uint64_t seed, std::size_t count) {
    FactorizationSuite s;
    s.result.seed = seed;
    s.result.instances = count;
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        SplitInstance inst = random412(rng, n % 2 == 0, 6);
        const std::size_t ka = inst.sizes[0], kb = inst.sizes[1], kg = inst.sizes[2], N = ka + kb + kg;
        FactorizationResult f = verifyFactorization(toRational(inst.E), coordinateBlock(N, indexRange(0, ka)),
                                                    coordinateBlock(N, indexRange(ka, kb)),
                                                    coordinateBlock(N, indexRange(ka + kb, kg)));
        if (f.hypothesisHolds) {
            ++s.hypothesisTrue;
            ++s.result.checked;
            if (!f.identityHolds)
                s.result.fail("hypothesis holds but T != T_A T_B on " + matrixText(inst.E));
        } else if (f.identityHolds) {
            ++s.identityWithoutHypothesis;
        }
    }
    for (std::size_t n = 0; n < count / 4; ++n) {
        SplitInstance inst = randomIterated(rng, 4, 2);
        std::vector<std::size_t> pieces(inst.sizes.begin(), inst.sizes.end() - 1);
        IteratedFactorization it = verifyIteratedFactorization(toRational(inst.E), pieces, inst.sizes.back());
        ++s.iterated;
        ++s.result.checked;
        if (!it.allHypotheses)
            s.result.fail("iterated instance violates a step hypothesis: " + matrixText(inst.E));
        else if (!it.productMatches)
            s.result.fail("iterated twist product differs from the full twist on " + matrixText(inst.E));
    }
    return s;
}

// walls of random CY matrices: applicable walls give total = d^i with the
// support at the predicted point, charts agree, lattice minima match brute force
struct PropositionSuite {
    SuiteResult result{"proposition"};
    std::size_t walls = 0;
    std::size_t applicable = 0;
    std::size_t minimizations = 0;
};

inline PropositionSuite propositionSuite(std::uint64_t seed, std::size_t count) {
    PropositionSuite s;
    s.result.seed = seed;
    s.result.instances = count;
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        auto table = randomCYTable(rng, 8, 4);
        GKZFan fan = buildFan(parseAndValidate(table));
        for (std::size_t k = 0; k < fan.wallCount(); ++k) {
            ++s.walls;
            WallIntersection wi = wallIntersectionLength(fan, k);
            const std::string where = tableText(table) + " wall " + std::to_string(k);
            if (!wi.chartsAgree)
                s.result.fail("charts disagree: " + where);
            // oracle replay of every chart minimisation
            const std::size_t charts[2] = {fan.chamberBefore(k), fan.chamberAfter(k)};
            for (const auto& p : wi.points)
                for (int c = 0; c < 2; ++c) {
                    if (!p.inChart[c])
                        continue;
                    Cone2 dual = dualCone(fan.chambers[charts[c]]);
                    const HalfPlane hp{fan.source(k).chi, -1};
                    MinimizeResult fast = latticeMinimize(p.valuation, dual, hp);
                    auto slow = latticeMinimizeBrute(p.valuation, dual, hp, 25);
                    ++s.minimizations;
                    if (!slow || fast.unbounded || fast.value != slow->value)
                        s.result.fail("latticeMinimize differs from brute force: " + where);
                }
            if (!wi.applicable)
                continue;
            ++s.applicable;
            ++s.result.checked;
            const RayGroup& src = fan.source(k);
            if (!wi.dFormula || wi.total != *wi.dFormula || wi.total != src.total)
                s.result.fail("total " + std::to_string(wi.total) + " != d = " + std::to_string(src.total) + ": " + where);
            if (wi.supportPoints.size() != 1 || !parallelLine(wi.points[wi.supportPoints[0]].direction, src.chi))
                s.result.fail("support is not the single predicted point: " + where);
        }
    }
    return s;
}

// balanced crossings and window duality on every wall of the corpus
inline SuiteResult balancedSuite(std::uint64_t seed, std::size_t count) {
    SuiteResult r{"balanced", seed, count};
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        auto table = randomCYTable(rng, 8, 4);
        WeightMatrix w = parseAndValidate(table);
        GKZFan fan = buildFan(w);
        for (std::size_t k = 0; k < fan.wallCount(); ++k) {
            const std::string where = tableText(table) + " wall " + std::to_string(k);
            ++r.checked;
            try {
                BalancedWallReport rep = wallCrossing(w, fan, k);
                const KNStratum& a = rep.flippedPlus();
                const KNStratum& b = rep.flippedMinus();
                if (!rep.balanced || !(a.lambda == -b.lambda) || !coordSetEquals(a.zSet, b.zSet) ||
                    a.etaPlus != b.etaPlus)
                    r.fail("not balanced: " + where);
                for (i64 x = -3; x <= 3; ++x)
                    if (rep.windowDual(rep.windowDual(x)) != x)
                        r.fail("window dual is not an involution: " + where);
            } catch (const Error& e) {
                r.fail(std::string(e.what()) + ": " + where);
            }
        }
    }
    return r;
}

inline ordered_json toJson(const SuiteResult& r) {
    return {{"suite", r.name},
            {"seed", std::to_string(r.seed)},
            {"instances", r.instances},
            {"checked", r.checked},
            {"failures", r.failures},
            {"notes", r.failureNotes},
            {"ok", r.ok()}};
}

} // namespace vgit
