// vgit command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <unistd.h>

#include "CLI11.hpp"
#include "vgit/render.hpp"
#include "vgit/report.hpp"
#include "vgit/suites.hpp"

using namespace vgit;

namespace {

LatticeVector parsePair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::InvalidInput, "expected a,b but got '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        i64 a = std::stoll(s.substr(0, comma), &p1);
        i64 b = std::stoll(s.substr(comma + 1), &p2);
        if (p1 != comma || p2 != s.size() - comma - 1)
            throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "expected a,b but got '" + s + "'");
    }
}

std::vector<std::string> splitTasks(const std::string& s) {
    std::vector<std::string> out;
    if (s == "all")
        return allTasks();
    if (s.empty() || s == "none")
        return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// temp file + rename, so a failed run leaves no partial output behind
void writeOutput(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error(ErrorKind::InvalidInput, "cannot write " + path);
        f << text;
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp);
            throw Error(ErrorKind::InvalidInput, "cannot write " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error(ErrorKind::InvalidInput, "cannot write " + path + ": " + ec.message());
    }
}

std::string formatJson(const ordered_json& j, const std::string& format) {
    if (format == "text")
        return textReport(j);
    return dumpReport(j);
}

std::vector<std::string> chamberAnnotations(const WeightMatrix& w, const GKZFan& fan) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < fan.chamberCount(); ++k) {
        try {
            LatticeVector chi = interiorCharacter(w, fan, k);
            Stratification st = knStratify(w, chi);
            out.push_back("chi=" + toString(chi) + " Smax=" + renderLocus(w, st.sMaxSupport) + " strata=" +
                          std::to_string(st.strata.size()));
        } catch (const Error&) {
            out.emplace_back();
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variation of GIT wall crossings for rank-2 torus actions"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string inputPath, outputPath, format = "json";
    auto addCommon = [&](CLI::App* sub, bool needsInput) {
        auto* opt = sub->add_option("--input,-i", inputPath, "weight matrix (JSON or TOML)");
        if (needsInput)
            opt->required();
        sub->add_option("--output,-o", outputPath, "output file (default stdout)");
    };
    auto addFormat = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    std::string tasks = "all";
    std::optional<std::size_t> chamber, wall, nearWall, wallIndex, expectedWall;
    std::vector<std::string> lambdas;
    std::string chi;
    i64 weight = 0;

    auto* analyze = app.add_subcommand("analyze", "run a set of tasks and emit one report");
    addCommon(analyze, true);
    addFormat(analyze);
    analyze->add_option("--tasks", tasks, "comma list of fan,strata,walls,horn,expected,kmut; 'all' or 'none'");
    analyze->add_option("--chamber", chamber, "chamber index for the strata task");
    analyze->add_option("--wall", wall, "restrict wall tasks to one wall");
    analyze->add_option("--lambda", lambdas, "cocharacter a,b for the horn task (repeatable)");
    analyze->add_option("--w", weight, "window weight");

    auto* fanCmd = app.add_subcommand("fan", "GKZ fan: ray groups, walls, chambers");
    addCommon(fanCmd, true);
    addFormat(fanCmd);

    auto* strata = app.add_subcommand("strata", "Kirwan-Ness stratification");
    addCommon(strata, true);
    addFormat(strata);
    auto* oChamber = strata->add_option("--chamber", chamber, "generic character inside this chamber");
    auto* oNear = strata->add_option("--near-wall", nearWall, "near-wall characters on both sides of this wall");
    auto* oChi = strata->add_option("--chi", chi, "explicit character a,b");
    oChamber->excludes(oNear)->excludes(oChi);
    oNear->excludes(oChi);

    auto* wallCmd = app.add_subcommand("wall", "balanced crossing and intersection length at one wall");
    addCommon(wallCmd, true);
    addFormat(wallCmd);
    wallCmd->add_option("--index", wallIndex, "wall index")->required();
    wallCmd->add_option("--w", weight, "window weight");

    auto* horn = app.add_subcommand("horn", "Horn uniformization pullback of x^lambda");
    addCommon(horn, true);
    addFormat(horn);
    horn->add_option("--lambda", lambdas, "cocharacter a,b (repeatable)")->required();

    auto* expected = app.add_subcommand("expected", "discriminant length against the collection length");
    addCommon(expected, true);
    addFormat(expected);
    expected->add_option("--wall", expectedWall, "wall index (default all)");

    std::string verify;
    std::size_t corpus = 200;
    std::uint64_t seed = defaultSeed();
    auto* kmut = app.add_subcommand("kmut", "K-theoretic mutation calculus");
    addCommon(kmut, false);
    addFormat(kmut);
    kmut->add_option("--verify", verify, "seeded suite to run")->check(CLI::IsMember({"311", "412", "braid"}));
    kmut->add_option("--corpus", corpus, "number of random instances");
    kmut->add_option("--seed", seed, "corpus seed (default from VGIT_SEED)");
    kmut->add_option("--wall", wall, "wall for the collection plan (default all)");
    kmut->add_option("--w", weight, "window weight");

    std::string renderFormat = "ascii";
    auto* render = app.add_subcommand("render", "picture of the fan");
    addCommon(render, true);
    render->add_option("--format,-f", renderFormat, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        std::string out;
        auto request = [&](std::vector<std::string> t) {
            AnalysisRequest req;
            req.input = loadInput(inputPath);
            req.tasks = std::move(t);
            req.chamber = chamber;
            req.wall = wall;
            req.w = weight;
            if (!lambdas.empty()) {
                req.lambdas.clear();
                for (const auto& l : lambdas) req.lambdas.push_back(parsePair(l));
            }
            return req;
        };

        if (analyze->parsed()) {
            out = formatJson(runAnalyze(request(splitTasks(tasks))), format);
        } else if (fanCmd->parsed()) {
            out = formatJson(runAnalyze(request({"fan"})), format);
        } else if (strata->parsed()) {
            LoadedInput in = loadInput(inputPath);
            const WeightMatrix& w = in.weights;
            GKZFan fan = buildFan(w);
            ordered_json rep = reportHeader(in);
            if (nearWall) {
                if (*nearWall >= fan.wallCount())
                    throw Error(ErrorKind::IndexOutOfRange, "wall index " + std::to_string(*nearWall));
                rep["strata"] = nearWallStrata(w, fan, *nearWall);
            } else if (!chi.empty()) {
                rep["strata"] = toJson(w, fan, knStratify(w, parsePair(chi)));
            } else if (chamber) {
                rep["strata"] = toJson(w, fan, knStratify(w, interiorCharacter(w, fan, *chamber)));
            } else {
                ordered_json all = ordered_json::array();
                for (std::size_t k = 0; k < fan.wallCount(); ++k) all.push_back(nearWallStrata(w, fan, k));
                rep["strata"] = all;
            }
            out = formatJson(rep, format);
        } else if (wallCmd->parsed()) {
            wall = wallIndex;
            out = formatJson(runAnalyze(request({"walls"})), format);
        } else if (horn->parsed()) {
            out = formatJson(runAnalyze(request({"horn"})), format);
        } else if (expected->parsed()) {
            wall = expectedWall;
            out = formatJson(runAnalyze(request({"expected"})), format);
        } else if (kmut->parsed()) {
            if (verify.empty()) {
                if (inputPath.empty())
                    throw Error(ErrorKind::InvalidInput, "kmut needs --verify or --input");
                out = formatJson(runAnalyze(request({"kmut"})), format);
            } else {
                ordered_json rep = {{"schemaVersion", kReportSchema}, {"generator", std::string("vgit ") + kVersion}};
                bool ok = true;
                if (verify == "braid") {
                    SuiteResult r = mutationSuite(seed, corpus);
                    rep["suite"] = toJson(r);
                    ok = r.ok();
                } else if (verify == "311") {
                    SuiteResult r = twistMutationSuite(seed, corpus);
                    rep["suite"] = toJson(r);
                    ok = r.ok();
                } else {
                    FactorizationSuite s = factorizationSuite(seed, corpus);
                    rep["suite"] = toJson(s.result);
                    rep["suite"]["hypothesisTrue"] = s.hypothesisTrue;
                    rep["suite"]["identityWithoutHypothesis"] = s.identityWithoutHypothesis;
                    rep["suite"]["iterated"] = s.iterated;
                    ok = s.result.ok();
                }
                writeOutput(outputPath, formatJson(rep, format));
                return ok ? 0 : 3;
            }
        } else if (render->parsed()) {
            LoadedInput in = loadInput(inputPath);
            GKZFan fan = buildFan(in.weights);
            auto notes = chamberAnnotations(in.weights, fan);
            out = renderFormat == "svg" ? renderSvg(fan, notes) : renderAscii(fan, notes);
        }
        writeOutput(outputPath, out);
        return 0;
    } catch (const Error& e) {
        std::cerr << "vgit: " << e.what() << "\n";
        return exitCodeFor(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "vgit: Internal: " << e.what() << "\n";
        return 3;
    }
}
