#include "tambara/cli.hpp"
#include "tambara/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tambara;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tambara");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("pair splitting") {
    CHECK(cli::split_pair("Ocomp,Ocomp") == std::pair<std::string, std::string>{"Ocomp", "Ocomp"});
    CHECK(cli::split_pair("{(1,2)},{(1,2),(1,3)}") == std::pair<std::string, std::string>{"{(1,2)}", "{(1,2),(1,3)}"});
    CHECK(cli::split_pair("(1,2)|(1,2),(1,3)") == std::pair<std::string, std::string>{"(1,2)", "(1,2),(1,3)"});
    CHECK_THROWS(cli::split_pair("(1,2),(1,3),(1,6)"));
    CHECK_THROWS(cli::split_pair("Ocomp"));
    CHECK(cli::parse_group("cyclic:9") == 9);
    CHECK_THROWS(cli::parse_group("dihedral:4"));
}

TEST_CASE("seed resolution") {
    ::unsetenv("TAMBARA_SEED");
    CHECK(cli::resolve_seed("") == 20240601u);
    CHECK(cli::resolve_seed("7") == 7u);
    ::setenv("TAMBARA_SEED", "99", 1);
    CHECK(cli::resolve_seed("") == 99u);
    CHECK(cli::resolve_seed("5") == 5u);
    ::unsetenv("TAMBARA_SEED");
    CHECK_THROWS(cli::resolve_seed("minus one"));
}

TEST_CASE("enumerate and hull") {
    auto e = invoke({"enumerate", "pairs", "--group", "cyclic:9"});
    CHECK(e.code == cli::exit_ok);
    CHECK(e.out.rfind("12 compatible pairs\n", 0) == 0);
    CHECK(invoke({"enumerate", "pairs", "--group", "cyclic:8"}).out.rfind("55 compatible pairs", 0) == 0);
    CHECK(invoke({"enumerate", "systems", "--group", "cyclic:4"}).out.rfind("5 transfer systems", 0) == 0);
    auto j = invoke({"enumerate", "systems", "--group", "cyclic:2", "--format", "json"});
    CHECK(Json::parse(j.out).size() == 2);
    auto h = invoke({"hull", "O3", "--group", "cyclic:4"});
    CHECK(h.out == "Hull(O3) = Ocomp\n");
    CHECK(invoke({"hull", "(1,2),(1,4)", "--group", "cyclic:4"}).code == cli::exit_ok);
}

TEST_CASE("spectrum output") {
    auto r = invoke({"spectrum", "--construction", "burnside:p=2,n=2", "--pair", "Ocomp,Ocomp", "--format", "json"});
    REQUIRE(r.code == cli::exit_ok);
    Json j = Json::parse(r.out);
    std::vector<std::string> names;
    for (const auto& f : j["families"]) names.push_back(f["name"]);
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"C3", "D", "G"});
    bool id = false;
    for (const auto& i : j["identifications"]) {
        std::vector<std::string> n = i["names"];
        std::sort(n.begin(), n.end());
        if (i["prime"] == 2 && n == std::vector<std::string>{"C3", "D", "G"}) id = true;
    }
    CHECK(id);
    auto again = invoke({"spectrum", "--construction", "burnside:p=2,n=2", "--pair", "Ocomp,Ocomp", "--format", "json"});
    CHECK(again.out == r.out);
    auto text = invoke({"spectrum", "--construction", "constantZ", "--group", "cyclic:4", "--pair", "O1,O1"});
    CHECK(text.code == cli::exit_ok);
    CHECK(text.out.find("families:") != std::string::npos);
    auto dot = invoke({"export", "--construction", "burnside:p=3", "--pair", "Ocomp,Ocomp", "--format", "dot"});
    CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("check, export and --out") {
    auto c = invoke({"check", "--construction", "burnside:p=2"});
    CHECK(c.code == cli::exit_ok);
    CHECK(c.out.find("multiplicatively cohomological: no") != std::string::npos);
    auto path = std::filesystem::temp_directory_path() / "tambara_cli_test.json";
    auto d = invoke({"export", "diagram", "--construction", "constantZ:p=3", "--out", path.string()});
    CHECK(d.code == cli::exit_ok);
    CHECK(d.out.empty());
    std::ifstream in(path);
    Json j = Json::parse(in);
    CHECK(j.contains("levels"));
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"frobnicate"}).code == cli::exit_usage);
    CHECK(invoke({}).code == cli::exit_usage);
    CHECK(invoke({"enumerate", "pairs"}).code == cli::exit_usage);
    CHECK(invoke({"enumerate", "pairs", "--group", "cyclic:4", "--format", "dot"}).code == cli::exit_usage);
    CHECK(invoke({"spectrum", "--construction", "burnside:p=2,n=2", "--pair", "Ocomp,Otriv"}).code == cli::exit_usage);
    CHECK(invoke({"spectrum", "--construction", "burnside:p=6"}).code == cli::exit_usage);
    CHECK(invoke({"spectrum", "--construction", "burnside:p=2", "--group", "cyclic:3"}).code == cli::exit_usage);
    CHECK(invoke({"hull", "(1,4)", "--group", "cyclic:4"}).code == cli::exit_usage);
    CHECK(invoke({"verify", "everything"}).code == cli::exit_usage);
    CHECK(invoke({"--help"}).code == cli::exit_ok);
}
