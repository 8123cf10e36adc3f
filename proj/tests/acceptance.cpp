// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "golden.hpp"
#include "oracles.hpp"
#include "vgit/report.hpp"
#include "vgit/suites.hpp"

#ifndef VGIT_CLI
#define VGIT_CLI "vgit"
#endif

using namespace vgit;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { details.push_back(s); }
};

struct Criterion {
    std::string id, title;
    double limitSeconds; // 0 = no limit
    std::function<void(Outcome&)> body;
};

const std::uint64_t kSeed = defaultSeed();

struct K3 {
    LoadedInput input = loadInput(golden::fixture("k3_25.json"));
    GKZFan fan = buildFan(input.weights);
    ordered_json relabel = golden::loadJson("golden/k3_25_relabel.json");
    std::size_t wall(const std::string& name) const { return relabel["walls"][name].get<std::size_t>(); }
};

void suiteDetails(Outcome& o, const SuiteResult& r) {
    o.note(r.name + ": seed " + std::to_string(r.seed) + ", " + std::to_string(r.instances) + " instances, " +
           std::to_string(r.checked) + " checked, " + std::to_string(r.failures) + " failures");
    for (const auto& n : r.failureNotes) o.note("  " + n);
    o.require(r.ok(), r.name + " suite");
}

void ac1(Outcome& o) {
    K3 k;
    auto printed = golden::loadJson("golden/strata_reference.json");
    for (const auto& c : golden::compareTables(k.input.weights, k.fan, printed, k.relabel)) {
        o.require(c.ok, c.name + " matches the printed table");
        for (const auto& d : c.diffs) o.note("  " + c.name + ": " + d);
    }
    // the computed rows, independently confirmed orbit by orbit
    for (const auto& t : printed["tables"]) {
        Stratification st = golden::tableStratification(k.input.weights, k.fan, k.relabel, t["wall"], t["chamber"]);
        auto orc = oracle::stratify(k.input.weights, st.chi);
        bool agree = orc.size() == st.strata.size() + 1;
        for (std::size_t i = 0; agree && i < st.strata.size(); ++i)
            agree = orc[i + 1].lambda == st.strata[i].lambda &&
                    orc[i + 1].sSupports == oracle::orbitsOf(st.strata[i].sSet, k.input.weights.size()) &&
                    orc[i + 1].zSupports == oracle::orbitsOf(st.strata[i].zSet, k.input.weights.size());
        o.note("near " + t["wall"].get<std::string>() + ", chamber " + t["chamber"].get<std::string>() + " at chi " +
               toString(st.chi) + ": Hilbert-Mumford enumeration " + (agree ? "agrees" : "DISAGREES") +
               " with the computed stratification");
    }
}

void ac2(Outcome& o) {
    K3 k;
    auto g = golden::loadJson("golden/horn.json");
    for (const auto& p : g["pullbacks"]) {
        LatticeVector l{p["lambda"][0].get<i64>(), p["lambda"][1].get<i64>()};
        std::string got = formatRational(hornPullback(k.fan, l));
        o.note("lambda " + toString(l) + ": " + got);
        o.require(got == p["text"].get<std::string>(), "lambda " + toString(l) + " expected " + p["text"].get<std::string>());
    }
}

void ac3(Outcome& o) {
    K3 k;
    WallIntersection w3 = wallIntersectionLength(k.fan, k.wall("W_3"));
    WallIntersection w1 = wallIntersectionLength(k.fan, k.wall("W_1"));
    WallIntersection w2 = wallIntersectionLength(k.fan, k.wall("W_2"));
    o.note("W_3 total " + std::to_string(w3.total) + ", W_1 total " + std::to_string(w1.total) + ", W_2 total " +
           std::to_string(w2.total) + (w2.applicable ? " (applicable)" : " (inapplicable)"));
    o.require(w3.total == 1, "W_3 total = 1");
    o.require(w3.supportPoints.size() == 1 && w3.points[w3.supportPoints[0]].direction == LatticeVector{-1, -3},
              "W_3 supported at the (-1,-3) point");
    o.require(w1.applicable && w1.total == 3 && w1.dFormula == 3, "W_1 total = d = 3, applicable");
    o.require(!w2.applicable, "W_2 inapplicable");
}

void ac4(Outcome& o) {
    PropositionSuite s = propositionSuite(kSeed, 200);
    o.note(std::to_string(s.walls) + " walls, " + std::to_string(s.applicable) + " applicable, " +
           std::to_string(s.minimizations) + " minimizations replayed against enumeration");
    suiteDetails(o, s.result);
}

void ac5(Outcome& o) {
    suiteDetails(o, balancedSuite(kSeed, 200));
    bool involution = true;
    for (i64 eta = 1; eta <= 12; ++eta)
        for (i64 w = -20; w <= 20; ++w) {
            WindowDescriptor d = windowDescriptor(eta, w);
            involution = involution && windowDescriptor(eta, d.dual).dual == w;
        }
    o.require(involution, "window dual is an involution");
}

void ac6(Outcome& o) {
    K3 k;
    const WeightMatrix& w = k.input.weights;
    for (auto [name, want] : {std::pair<const char*, i64>{"W_1", 3}, {"W_3", 1}}) {
        const std::size_t idx = k.wall(name);
        BalancedWallReport rep = wallCrossing(w, k.fan, idx);
        ExpectedCountReport r = expectedAutoequivalences(k.fan, idx, fixedSubquotient(w, k.fan, rep.flippedPlus(), idx));
        o.note(std::string(name) + ": (" + std::to_string(r.discriminantLength) + ", " +
               std::to_string(r.collectionLength) + ", " + r.note + ")");
        o.require(r.discriminantLength == want && r.collectionLength == want && r.agree == true,
                  std::string(name) + " reports (" + std::to_string(want) + "," + std::to_string(want) + ",agree)");
    }
}

void ac7(Outcome& o) {
    suiteDetails(o, mutationSuite(kSeed, 1000));
    Mutation m = mutate(weightedProjectiveGram({1, 1, 1}), 1, MutationSide::Left);
    o.note("P2 collection mutated at slot 1: " + matrixText(m.gram));
    o.require(m.gram == IntMatrix{{1, -3, 3}, {0, 1, -3}, {0, 0, 1}}, "P2 fixture mutation");
}

void ac8(Outcome& o) {
    suiteDetails(o, twistMutationSuite(kSeed, 500));
    QMatrix E = QMatrix::identity(5);
    TwistMutationResult t = verifyTwistMutation(E, coordinateBlock(5, {0, 1}), coordinateBlock(5, {2, 3, 4}));
    o.require(t.holds && t.twist == QMatrix::identity(3) && t.mutations == QMatrix::identity(3),
              "orthogonal splitting gives the identity on both sides");
}

void ac9(Outcome& o) {
    FactorizationSuite s = factorizationSuite(kSeed, 600);
    o.note(std::to_string(s.hypothesisTrue) + " instances satisfy the hypothesis, " + std::to_string(s.iterated) +
           " iterated instances, identity also held on " + std::to_string(s.identityWithoutHypothesis) +
           " instances without it (reported only)");
    suiteDetails(o, s.result);
    QMatrix E{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    FactorizationResult f = verifyFactorization(E, coordinateBlock(3, {0}), coordinateBlock(3, {1}), coordinateBlock(3, {2}));
    o.require(f.hypothesisHolds && f.identityHolds, "handcrafted fixture");
}

std::string fixtureSuite() {
    std::ostringstream out;
    for (const char* f : {"k3_25.json", "k3_25.toml", "square.json"}) {
        AnalysisRequest req;
        req.input = loadInput(golden::fixture(f));
        req.tasks = allTasks();
        out << dumpReport(runAnalyze(req));
    }
    out << toJson(mutationSuite(kSeed, 200)).dump() << toJson(twistMutationSuite(kSeed, 100)).dump()
        << toJson(factorizationSuite(kSeed, 100).result).dump() << toJson(propositionSuite(kSeed, 40).result).dump()
        << toJson(balancedSuite(kSeed, 40)).dump();
    return out.str();
}

std::string cliOutput(const std::string& args, const std::string& file) {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / ("vgit_acc_" + std::to_string(::getpid()) + "_" + file);
    std::string cmd = std::string("\"") + VGIT_CLI + "\" " + args + " --output \"" + p.string() + "\" >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    std::string text = fs::exists(p) ? readFile(p.string()) : std::string();
    fs::remove(p);
    return (WIFEXITED(status) && WEXITSTATUS(status) == 0) ? text : "exit " + std::to_string(status);
}

void ac10(Outcome& o) {
    std::string a = fixtureSuite(), b = fixtureSuite();
    o.note("in-process fixture suite: " + std::to_string(a.size()) + " bytes per run");
    o.require(a == b, "two in-process runs are byte-identical");
    const std::string k3 = "analyze --input \"" + golden::fixture("k3_25.json") + "\"";
    const std::string corpus = "kmut --verify 412 --corpus 60 --seed " + std::to_string(kSeed);
    std::string c1 = cliOutput(k3, "r1"), c2 = cliOutput(k3, "r2");
    std::string s1 = cliOutput(corpus, "s1"), s2 = cliOutput(corpus, "s2");
    o.require(c1 == c2 && s1 == s2, "two CLI runs are byte-identical");
    o.require(c1 == readFile(golden::fixture("golden/k3_25_report.json")), "CLI report equals the golden report");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "reference stratification tables", 1.0, ac1},
        {"AC2", "Horn fixtures", 1.0, ac2},
        {"AC3", "intersection lengths", 1.0, ac3},
        {"AC4", "proposition property", 60.0, ac4},
        {"AC5", "balanced-wall suite", 30.0, ac5},
        {"AC6", "expected-count concordance", 0.0, ac6},
        {"AC7", "mutation calculus", 30.0, ac7},
        {"AC8", "twist shadow", 30.0, ac8},
        {"AC9", "factorization shadow", 60.0, ac9},
        {"AC10", "determinism", 0.0, ac10},
    };
    std::cout << "seed " << kSeed << "\n";
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limitSeconds > 0)
            o.require(secs < c.limitSeconds, "runtime under " + std::to_string(static_cast<int>(c.limitSeconds)) + " s");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (o.pass ? "PASS " : "FAIL ") << c.id << ": " << c.title << " (" << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
