#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stepenum/cli.hpp"
#include "stepenum/trace.hpp"

namespace fs = std::filesystem;
using stepenum::cli::run;

namespace {

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() / ("stepenum_cli_" + std::to_string(::getpid()) + "_" +
                                           std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string put(const std::string& name, const std::string& contents) const {
        std::ofstream(dir / name) << contents;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    static std::string read(const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate vertex cover on P3 with k = 1") {
    Sandbox s;
    const auto g = s.put("p3.edges", "3 2\n0 1\n1 2\n");
    const auto r = invoke({"enumerate", "--problem", "vertex-cover", "--graph", g, "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "b\n");
}

TEST_CASE("enumerate synthetic a = 0 writes a constant-delay trace") {
    Sandbox s;
    const auto spec = s.put("s.json", R"({"n":1,"k":0,"a":0,"m":6,"profile":"structured","t_const":4,"p_coeffs":[1]})");
    const auto r = invoke({"enumerate", "--problem", "synthetic", "--spec", spec, "--trace", s.path("t.csv"),
                           "--solutions", s.path("sol.txt"), "--report", s.path("r.json")});
    CHECK(r.code == 0);
    std::istringstream csv(Sandbox::read(s.path("t.csv")));
    const auto t = stepenum::read_trace_csv(csv);
    CHECK(t.delays == std::vector<stepenum::Cost>{4, 4, 4, 4, 4, 4, 0});
    const auto rep = nlohmann::json::parse(Sandbox::read(s.path("r.json")));
    CHECK(rep.at("schema_version") == "1");
    CHECK(rep.at("runs").at(0).at("solutions_count") == 6);
    CHECK(rep.at("overall_pass") == true);
    CHECK_FALSE(fs::exists(s.path("r.json.tmp")));
}

TEST_CASE("enumerate structured synthetic a = 2 reports a passing delay check") {
    Sandbox s;
    const auto spec = s.put("s.json", R"({"n":1,"k":0,"a":2,"m":40,"profile":"structured","t_const":3,"p_coeffs":[1]})");
    const auto r = invoke({"enumerate", "--problem", "synthetic", "--spec", spec, "--solutions", s.path("sol.txt"),
                           "--report", s.path("r.json")});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(Sandbox::read(s.path("r.json"))).at("overall_pass") == true);
}

TEST_CASE("input errors exit 1") {
    CHECK(invoke({"enumerate", "--problem", "vertex-cover", "--graph", "/nonexistent/g", "--k", "1"}).code == 1);
    CHECK(invoke({"enumerate", "--problem", "nope"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    Sandbox s;
    const auto cnf = s.put("bad.cnf", "p cnf 2 1\n1 2 0\n");
    const auto r = invoke({"enumerate", "--problem", "horn-sat", "--cnf", cnf});
    CHECK(r.code == 1);
    CHECK(r.err.find("positive literal") != std::string::npos);
}

TEST_CASE("regularize front-loaded m = 5 at exponent 2") {
    Sandbox s;
    const auto spec = s.put("f.json", R"({"n":1,"k":0,"a":1,"m":5,"profile":"front_loaded","t_const":3,"p_coeffs":[1]})");
    const auto sched = s.put("b.json", R"({"t_const":100,"p_coeffs":[1],"exponent":2})");
    const auto r = invoke({"regularize", "--problem", "synthetic", "--spec", spec, "--schedule", sched, "--queue",
                           s.path("q.csv"), "--solutions", s.path("out.txt")});
    CHECK(r.code == 0);
    CHECK(Sandbox::read(s.path("q.csv")) == "i,queue_size_at_emission\n1,5\n2,4\n3,3\n4,2\n5,1\n");
}

TEST_CASE("regularize an empty spec") {
    Sandbox s;
    const auto spec = s.put("e.json", R"({"n":1,"k":0,"a":0,"m":0,"profile":"structured","t_const":1,"p_coeffs":[1]})");
    const auto r = invoke({"regularize", "--problem", "synthetic", "--spec", spec, "--solutions", s.path("out.txt")});
    CHECK(r.code == 0);
    CHECK(Sandbox::read(s.path("out.txt")).empty());
}

TEST_CASE("regularize a lying inner exits 2 with the violation index") {
    Sandbox s;
    // true shape: emission i at sum j^2, declared i^2
    const auto spec = s.put("l.json", R"({"n":1,"k":0,"a":2,"m":10,"profile":"structured","t_const":1,"p_coeffs":[1]})");
    const auto sched = s.put("b.json", R"({"t_const":1,"p_coeffs":[1],"exponent":2})");
    const auto r = invoke({"regularize", "--problem", "synthetic", "--spec", spec, "--schedule", sched, "--report",
                           s.path("r.json")});
    CHECK(r.code == 2);
    const auto rep = nlohmann::json::parse(Sandbox::read(s.path("r.json")));
    CHECK(rep.at("runs").at(0).at("violation") == 2);
    CHECK(rep.at("overall_pass") == false);

    const auto late = invoke({"regularize", "--problem", "synthetic", "--spec", spec, "--schedule", sched,
                              "--fallback", "--solutions", s.path("out.txt")});
    CHECK(late.code == 2);
}

TEST_CASE("compare and roundtrip") {
    Sandbox s;
    const auto cnf = s.put("tiny.cnf", "p cnf 2 2\n1 0\n-1 2 0\n");
    const auto c = invoke({"compare", "--problem", "horn-sat", "--cnf", cnf});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out).at("equal") == true);

    const auto k2 = s.put("k2.edges", "2 1\n0 1\n");
    const auto r = invoke({"roundtrip", "--problem", "vertex-cover", "--graph", k2, "--k", "2"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("solutions_count") == 3);
}

TEST_CASE("fit on an exact square law") {
    Sandbox s;
    std::string csv = "i,delay,cum_cost\n";
    unsigned long long cum = 0;
    for (unsigned long long i = 0; i <= 5000; ++i) {
        const unsigned long long d = i == 0 ? 1 : i * i;
        cum += d;
        csv += std::to_string(i) + "," + std::to_string(d) + "," + std::to_string(cum) + "\n";
    }
    const auto t = s.put("sq.csv", csv);
    const auto r = invoke({"fit", "--trace", t, "--window", "16", "4096"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("exponent_hat").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("report merges inputs") {
    Sandbox s;
    const auto spec = s.put("s.json", R"({"n":1,"k":0,"a":0,"m":3,"profile":"structured","t_const":2,"p_coeffs":[1]})");
    invoke({"enumerate", "--problem", "synthetic", "--spec", spec, "--report", s.path("a.json"), "--solutions",
            s.path("x.txt")});
    invoke({"regularize", "--problem", "synthetic", "--spec", spec, "--report", s.path("b.json"), "--solutions",
            s.path("y.txt")});
    const auto r = invoke({"report", "--input", s.path("a.json"), "--input", s.path("b.json"), "--out",
                           s.path("all.json")});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(Sandbox::read(s.path("all.json"))).at("runs").size() == 2);
}

TEST_CASE("identical invocations give identical bytes") {
    Sandbox s;
    const auto g1 = invoke({"generate", "--problem", "horn-sat", "--seed", "4", "--out", s.path("h1.cnf")});
    const auto g2 = invoke({"generate", "--problem", "horn-sat", "--seed", "4", "--out", s.path("h2.cnf")});
    CHECK(g1.code == 0);
    CHECK(g2.code == 0);
    CHECK(Sandbox::read(s.path("h1.cnf")) == Sandbox::read(s.path("h2.cnf")));

    for (const char* tag : {"1", "2"}) {
        invoke({"regularize", "--problem", "horn-sat", "--cnf", s.path("h1.cnf"), "--trace",
                s.path(std::string("t") + tag + ".csv"), "--report", s.path(std::string("r") + tag + ".json"),
                "--solutions", s.path(std::string("o") + tag + ".txt")});
    }
    CHECK(Sandbox::read(s.path("t1.csv")) == Sandbox::read(s.path("t2.csv")));
    CHECK(Sandbox::read(s.path("o1.txt")) == Sandbox::read(s.path("o2.txt")));
    const auto r1 = nlohmann::json::parse(Sandbox::read(s.path("r1.json")));
    auto r2 = nlohmann::json::parse(Sandbox::read(s.path("r2.json")));
    r2["runs"][0]["trace_csv_path"] = r1["runs"][0]["trace_csv_path"];
    CHECK(r1 == r2);
}

TEST_CASE("cost cap: flag and environment") {
    Sandbox s;
    const auto spec = s.put("s.json", R"({"n":1,"k":0,"a":0,"m":50,"profile":"structured","t_const":10,"p_coeffs":[1]})");
    CHECK(invoke({"enumerate", "--problem", "synthetic", "--spec", spec, "--cap", "100"}).code == 1);
    ::setenv("ENUM_COST_CAP", "100", 1);
    CHECK(invoke({"enumerate", "--problem", "synthetic", "--spec", spec}).code == 1);
    CHECK(invoke({"enumerate", "--problem", "synthetic", "--spec", spec, "--cap", "1000"}).code == 0);
    ::unsetenv("ENUM_COST_CAP");
    CHECK(invoke({"enumerate", "--problem", "synthetic", "--spec", spec}).code == 0);
}
