#include <doctest.h>

#include <vector>

#include "commands.hpp"

using namespace c32;
using nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "c32inv");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    Outcome o{};
    o.code = cli::run(static_cast<int>(argv.size()), argv.data(), o.out, o.err);
    return o;
}

ordered_json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    const Outcome o = run_cli(std::move(args));
    return ordered_json::parse(o.out);
}

}  // namespace

TEST_CASE("exit code contract")
{
    CHECK(run_cli({"verify-expansions"}).code == 0);
    CHECK(run_cli({"verify-relation"}).code == 0);
    CHECK(run_cli({"verify-relation", "--corrupt-xi4"}).code == 1);
    CHECK(run_cli({"ch-identity"}).code == 0);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"hwv"}).code == 2);
    CHECK(run_cli({"hwv", "--degree", "3"}).code == 2);
    CHECK(run_cli({"hwv", "--degree", "a,b"}).code == 2);
    CHECK(run_cli({"hwv", "--degree", "0,0"}).code == 2);
    CHECK(run_cli({"decompose", "--space", "U5"}).code == 2);
    CHECK(run_cli({"decompose", "--space", "S", "--degree", "2,3"}).code == 2);
    CHECK(run_cli({"hilbert", "--max-degree", "-1"}).code == 2);
    const Outcome bad = run_cli({"hwv", "--degree", "x"});
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("json schema")
{
    const auto j = run_json({"decompose", "--space", "U6"});
    std::vector<std::string> keys;
    for (const auto& item : j.items()) {
        keys.push_back(item.key());
    }
    CHECK(keys == std::vector<std::string>{"command", "status", "payload", "version", "timing_ms"});
    CHECK(j["command"] == "decompose");
    CHECK(j["status"] == "pass");
    CHECK(j["version"] == cli::kSchemaVersion);
    const auto& dec = j["payload"]["decomposition"];
    REQUIRE(dec.size() == 3);
    CHECK(dec[0]["partition"] == ordered_json::array({3, 3}));
    CHECK(dec[0]["multiplicity"] == 1);
    CHECK(dec[1]["partition"] == ordered_json::array({4, 2}));
    CHECK(dec[1]["multiplicity"] == 2);
    CHECK(dec[2]["partition"] == ordered_json::array({6, 0}));
    CHECK(dec[2]["multiplicity"] == 1);
}

TEST_CASE("solve-xi reports the eight fractions")
{
    const auto j = run_json({"solve-xi"});
    CHECK(j["status"] == "pass");
    const auto& xi = j["payload"]["xi"];
    CHECK(xi["xi1"] == "1/27");
    CHECK(xi["xi2"] == "-2/9");
    CHECK(xi["xi3p"] == "4/15");
    CHECK(xi["xi3pp"] == "1/90");
    CHECK(xi["xi4"] == "1/3");
    CHECK(xi["xi5"] == "-2/3");
    CHECK(xi["xi6"] == "-1/3");
    CHECK(xi["xi7"] == "-4/27");
    CHECK(j["payload"]["relation_vanishes"] == true);
}

TEST_CASE("hilbert payload")
{
    const auto j = run_json({"hilbert", "--max-degree", "4"});
    CHECK(j["status"] == "pass");
    bool seen = false;
    for (const auto& c : j["payload"]["series"]) {
        if (c["i"] == 2 && c["j"] == 2) {
            CHECK(c["coeff"] == "9");
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("decompose single multiplicity and slices")
{
    const auto j = run_json({"decompose", "--space", "S", "--degree", "6,6"});
    CHECK(j["payload"]["multiplicity"] == 8);
    const auto k = run_json({"decompose", "--space", "S", "--degree", "3,3"});
    CHECK(k["payload"]["multiplicity"] == 0);
    const Outcome text = run_cli({"decompose", "--space", "S", "--degree", "6"});
    CHECK(text.out == "decompose: pass\n(4,2): 3\n(6,0): 2\n");
}

TEST_CASE("reports are deterministic apart from timing")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"hwv", "--degree", "3,3"}, {"hilbert", "--max-degree", "8"}, {"solve-xi"}, {"verify-expansions"}}) {
        const Outcome a = run_cli(args);
        const Outcome b = run_cli(args);
        CHECK(a.out == b.out);
        auto ja = run_json(args);
        auto jb = run_json(args);
        ja.erase("timing_ms");
        jb.erase("timing_ms");
        CHECK(ja.dump() == jb.dump());
    }
}
