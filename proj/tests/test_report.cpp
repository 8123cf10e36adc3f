#include "catch_amalgamated.hpp"

#include "golden.hpp"
#include "vgit/render.hpp"
#include "vgit/report.hpp"

using namespace vgit;

namespace {

AnalysisRequest k3Request(std::vector<std::string> tasks) {
    AnalysisRequest req;
    req.input = loadInput(golden::fixture("k3_25.json"));
    req.tasks = std::move(tasks);
    return req;
}

ErrorKind loadKind(const std::string& text, bool toml) {
    try {
        parseInputText(text, toml);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST_CASE("JSON and TOML inputs agree") {
    auto a = loadInput(golden::fixture("k3_25.json"));
    auto b = loadInput(golden::fixture("k3_25.toml"));
    CHECK(a.echo == b.echo);
    CHECK(a.weights.labels == b.weights.labels);
    CHECK(a.weights.columns == b.weights.columns);
}

TEST_CASE("input validation") {
    CHECK(loadKind("schema = 1\nweights = [[1, -1], [0, 0]", true) == ErrorKind::InvalidInput);
    CHECK(loadKind("schema = 1\nschema = 1\n", true) == ErrorKind::InvalidInput);
    CHECK(loadKind("schema = 1\nweights = [[1.5, -1], [0, 0]]\n", true) == ErrorKind::InvalidInput);
    CHECK(loadKind("{\"schema\": 1, \"weights\": [[1, 1], [1, 1]]}", false) == ErrorKind::NotCalabiYau);
    CHECK(loadKind("{\"schema\": 1, \"weights\": [[1, -1], [1, -1]], \"extra\": 0}", false) == ErrorKind::InvalidInput);
    CHECK(loadKind("{\"schema\": 1, \"weights\": [[2000000, -2000000, 0], [0, 1, -1]]}", false) ==
          ErrorKind::InvalidInput);
    CHECK(loadKind("{\"weights\": [[1, -1, 0], [0, 1, -1]]}", false) == ErrorKind::InvalidInput);
    auto in = parseInputText("schema = 1 # version\nweights = [[1, -1, 0],\n  [0, 1, -1],]\n", true);
    CHECK(in.weights.labels == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("empty task set echoes the input only") {
    ordered_json r = runAnalyze(k3Request({}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schemaVersion", "generator", "input"});
}

TEST_CASE("full report on the K3 fixture") {
    ordered_json r = runAnalyze(k3Request(allTasks()));
    CHECK(r["schemaVersion"] == 1);
    CHECK(r["results"]["horn"][0]["text"] == "-4*(u+3v)/u");
    CHECK(r["results"]["horn"][1]["text"] == "-(u+3v)^3/v^3");
    CHECK(r["results"]["horn"][0]["coefficient"].is_string());
    CHECK(r["results"]["fan"]["chambers"].size() == 4);
    CHECK(r["results"]["walls"][3]["crossing"]["verdict"] == "Balanced");
    CHECK(r["results"]["expected"][3]["agree"] == true);
    CHECK(r["warnings"].size() == 2);

    // near-wall strata in the report match the frozen table
    auto derived = golden::loadJson("golden/strata_derived.json");
    const auto& near = r["results"]["strata"]["nearWalls"];
    CHECK(near[3]["minus"]["Smax"]["notation"] == derived["tables"][0]["rows"][0]["S"]);
    CHECK(near[3]["minus"]["strata"][0]["Z"]["notation"] == derived["tables"][0]["rows"][1]["Z"]);

    // round trip
    ordered_json again = ordered_json::parse(dumpReport(r));
    CHECK(again == r);
}

TEST_CASE("report bytes are stable") {
    std::string a = dumpReport(runAnalyze(k3Request(allTasks())));
    std::string b = dumpReport(runAnalyze(k3Request(allTasks())));
    CHECK(a == b);
    CHECK(a == readFile(golden::fixture("golden/k3_25_report.json")));
}

TEST_CASE("referenced indices are validated") {
    AnalysisRequest req = k3Request({"walls"});
    req.wall = 9;
    CHECK_THROWS_AS(runAnalyze(req), Error);
    req = k3Request({"bogus"});
    CHECK_THROWS_AS(runAnalyze(req), Error);
    req = k3Request({"strata"});
    req.chamber = 4;
    try {
        runAnalyze(req);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
        CHECK(exitCodeFor(e.kind()) == 1);
    }
}

TEST_CASE("chamber strata use a generic interior character") {
    AnalysisRequest req = k3Request({"strata"});
    req.chamber = 2;
    ordered_json r = runAnalyze(req);
    CHECK(r["results"]["strata"]["chamber"]["chamber"] == "III");
    CHECK(r["results"]["strata"]["chamber"]["Smax"]["notation"] == "V_{xy}");
}

TEST_CASE("text format") {
    std::string t = textReport(runAnalyze(k3Request({"horn"})));
    CHECK(t.find("text: -4*(u+3v)/u") != std::string::npos);
    CHECK(t.rfind("schemaVersion: 1\n", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(exitCodeFor(ErrorKind::NotCalabiYau) == 1);
    CHECK(exitCodeFor(ErrorKind::RankDeficient) == 1);
    CHECK(exitCodeFor(ErrorKind::NonGenericLinearization) == 2);
    CHECK(exitCodeFor(ErrorKind::Internal) == 3);
    CHECK(exitCodeFor(ErrorKind::NoFlippedStratum) == 3);
}

TEST_CASE("ASCII rendering") {
    GKZFan fan = buildFan(loadInput(golden::fixture("k3_25.json")).weights);
    std::string a = renderAscii(fan);
    CHECK(a == renderAscii(fan));
    for (const char* s : {"w0", "w1", "w2", "w3", "I", "II", "III", "IV", "O"}) CHECK(a.find(s) != std::string::npos);
    CHECK(a.find("w1: ray (1,3)") != std::string::npos);
}

TEST_CASE("SVG rendering") {
    GKZFan fan = buildFan(loadInput(golden::fixture("k3_25.json")).weights);
    std::string s = renderSvg(fan);
    CHECK(s.find("version=\"1.1\"") != std::string::npos);
    // wall (1,3) reaches the lattice point (3,9): 220 + 20*3, 220 - 20*9
    CHECK(s.find("<line id=\"wall1\" x1=\"220\" y1=\"220\" x2=\"280\" y2=\"40\"/>") != std::string::npos);
    CHECK(s.find("cx=\"240\" cy=\"160\"") != std::string::npos);

    GKZFan square = buildFan(loadInput(golden::fixture("square.json")).weights);
    std::string q = renderSvg(square);
    std::size_t walls = 0;
    for (auto p = q.find("<line id=\"wall"); p != std::string::npos; p = q.find("<line id=\"wall", p + 1)) ++walls;
    CHECK(walls == 4);
    CHECK(q.find("x2=\"420\" y2=\"20\"") != std::string::npos);
}
