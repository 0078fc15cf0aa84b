#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "pwsyn/serialize.hpp"

namespace fs = std::filesystem;
using pwsyn::json;

namespace {

const fs::path cli = PWSYN_CLI_PATH;
const fs::path configs = PWSYN_CONFIG_DIR;

struct Outcome {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded; captures stdout and the exit status.
Outcome run(const std::string& args) {
    const std::string cmd = "\"" + cli.string() + "\" " + args + " 2>/dev/null";
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Scratch {
public:
    Scratch() {
        dir_ = fs::temp_directory_path() / ("pwsyn_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    fs::path file(const std::string& name) const { return dir_ / name; }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    static inline int counter_ = 0;
    fs::path dir_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

} // namespace

TEST(Cli, EveryShippedConfigRunsAndVerifies) {
    Scratch tmp;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(configs)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        const std::string name = entry.path().stem().string();
        const std::string sub = name.substr(0, name.find('_'));
        const auto out = tmp.file(name + ".out.json");
        ASSERT_EQ(run(sub + " --config " + q(entry.path()) + " --out " + q(out)).code, 0) << name;
        const json report = json::parse(slurp(out));
        EXPECT_EQ(report.at("experiment"), sub) << name;
        EXPECT_TRUE(report.contains("seed")) << name;
        EXPECT_TRUE(report.contains("config")) << name;

        const auto ver = tmp.file(name + ".verify.json");
        ASSERT_EQ(run("verify " + q(out) + " --out " + q(ver)).code, 0) << name;
        const json v = json::parse(slurp(ver));
        EXPECT_TRUE(v.at("all_ok").get<bool>()) << name;
        EXPECT_EQ(v.at("checked").get<std::size_t>(), report.at("certificates").size()) << name;
    }
    EXPECT_GE(seen, 7);
}

TEST(Cli, StdoutWhenNoOutFile) {
    const Outcome r = run("analyze --config " + q(configs / "analyze_sturmian.json"));
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("experiment"), "analyze");
    EXPECT_EQ(j.at("max_gap").at("max_gap"), 3);
}

TEST(Cli, DeterministicOutputAndSeedOverride) {
    const std::string base = "analyze --config " + q(configs / "analyze_random.json");
    const Outcome a = run(base), b = run(base);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Outcome c = run(base + " --seed 8"), d = run(base + " --seed 8");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.out, d.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_EQ(json::parse(c.out).at("seed"), 8);
    EXPECT_EQ(json::parse(a.out).at("seed"), 7);
}

TEST(Cli, CsvOutput) {
    const Outcome r = run("analyze --format csv --config " + q(configs / "analyze_sturmian.json"));
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out.rfind("n\n", 0), 0u);
    const Outcome g = run("thma --format csv --config " + q(configs / "thma_sturmian.json"));
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(g.out.rfind("m,n\n", 0), 0u);
    const Outcome t = run("thmb --format csv --config " + q(configs / "thmb_sturmian.json"));
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(t.out.rfind("N,a\n5,", 0), 0u);
    EXPECT_NE(run("analyze --format xml --config " + q(configs / "analyze_sturmian.json")).code, 0);
}

TEST(Cli, OracleCrossCheck) {
    const Outcome r = run("returns --oracle --config " + q(configs / "returns_rational.json"));
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("oracle").at("applicable").get<bool>());
    EXPECT_TRUE(j.at("oracle").at("match").get<bool>());
    const Outcome irr = run("returns --oracle --config " + q(configs / "returns_sqrt2.json"));
    ASSERT_EQ(irr.code, 0);
    EXPECT_FALSE(json::parse(irr.out).at("oracle").at("applicable").get<bool>());
}

TEST(Cli, NilcheckRunsWithDefaults) {
    const Outcome r = run("nilcheck");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("windows").size(), 2u);
    EXPECT_TRUE(j.contains("stable"));
}

TEST(Cli, ParseErrorsExitTwo) {
    Scratch tmp;
    EXPECT_EQ(run("analyze --config " + q(tmp.write("bad.json", "{ not json"))).code, 2);
    EXPECT_EQ(run("analyze --config " + q(tmp.file("missing.json"))).code, 2);
    EXPECT_EQ(run("analyze --config " + q(tmp.write("noset.json", R"({"params": {}})"))).code, 2);
    EXPECT_EQ(run("returns --config " + q(tmp.write("badsys.json", R"({"system": {"type": "torus"}, "family": ["n"], "epsilon": 0.1, "window": {"lo": 0, "hi": 5}})"))).code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("analyze").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, EmptySetAndMissingCertificateExitThree) {
    Scratch tmp;
    const auto empty = tmp.write("empty.json", R"({"set": {"kind": "literal", "lo": 0, "hi": 50, "members": []}})");
    const auto out = tmp.file("empty.out.json");
    EXPECT_EQ(run("analyze --config " + q(empty) + " --out " + q(out)).code, 3);
    const json err = json::parse(slurp(out));
    EXPECT_EQ(err.at("exit_code"), 3);
    EXPECT_EQ(err.at("experiment"), "analyze");

    // a single point in a long window: no 5-syndetic certificate exists
    const auto sparse = tmp.write("sparse.json", R"({"set": {"kind": "literal", "lo": 0, "hi": 200, "members": [100]},
                                                     "params": {"N": 5}, "require": ["syndetic"]})");
    EXPECT_EQ(run("analyze --config " + q(sparse)).code, 3);
    const auto relaxed = tmp.write("relaxed.json", R"({"set": {"kind": "literal", "lo": 0, "hi": 200, "members": [100]},
                                                      "params": {"N": 5}})");
    EXPECT_EQ(run("analyze --config " + q(relaxed)).code, 0);
}

TEST(Cli, VerifyDetectsTampering) {
    Scratch tmp;
    const auto out = tmp.file("a.json");
    ASSERT_EQ(run("analyze --config " + q(configs / "analyze_sturmian.json") + " --out " + q(out)).code, 0);
    json report = json::parse(slurp(out));
    bool tampered = false;
    for (auto& c : report.at("certificates"))
        if (c.at("kind") == "syndetic") {
            c.at("data").at("gap_bound") = 1;
            tampered = true;
        }
    ASSERT_TRUE(tampered);
    const auto bad = tmp.write("tampered.json", report.dump());
    const Outcome r = run("verify " + q(bad));
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(json::parse(r.out).at("all_ok").get<bool>());

    const auto ind = tmp.file("i.json");
    ASSERT_EQ(run("induced --config " + q(configs / "induced_sqrt2.json") + " --out " + q(ind)).code, 0);
    json ireport = json::parse(slurp(ind));
    tampered = false;
    for (auto& c : ireport.at("certificates"))
        if (c.at("kind") == "recurrence" && !tampered) {
            c.at("n") = 1;  // T x sits about 0.41 from x, far outside epsilon
            tampered = true;
        }
    ASSERT_TRUE(tampered);
    const Outcome ri = run("verify " + q(tmp.write("itampered.json", ireport.dump())));
    EXPECT_EQ(ri.code, 1);
    EXPECT_FALSE(json::parse(ri.out).at("all_ok").get<bool>());
}
