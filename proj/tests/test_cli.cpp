#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "kmoduli/cli.hpp"

using kmoduli::cli::Outcome;
using kmoduli::cli::run;
using njson = nlohmann::json;

namespace {

njson parse(const Outcome& o) { return njson::parse(o.output); }

} // namespace

TEST_CASE("surface reports") {
    Outcome o = run({"surface", "P2"});
    CHECK(o.exit_code == 0);
    njson j = parse(o);
    CHECK(j["surface"]["name"] == "P2");
    CHECK(j["surface"]["chi_O"] == "1");
    CHECK(j["surface"]["todd1"][0] == "3/2");

    CHECK(run({"surface", "bogus"}).exit_code == 1);
    CHECK(run({"nonsense"}).exit_code == 1);
}

TEST_CASE("chi, dim, obstruction examples") {
    njson chi = parse(run({"chi", "--surface", "P2", "--v", "1,1,1/2"}));
    CHECK(chi["chi"] == 3);

    Outcome dim = run({"dim", "--surface", "K3", "--v", "1,0,-3", "--epsilon", "2"});
    CHECK(dim.exit_code == 0);
    njson dj = parse(dim);
    CHECK(dj["expected_dim"] == 6);
    CHECK(dj["primitive"] == true);

    njson dp = parse(run({"dim", "--surface", "P2", "--v", "1,0,-3", "--epsilon", "1"}));
    CHECK(dp["expected_dim"] == 6);

    njson ob = parse(run({"obstruction", "--surface", "P2", "--v", "1,0,-4"}));
    CHECK(ob["n"] == 1);
    CHECK(ob["universal_sheaf"] == "exists");

    njson ob2 = parse(run({"obstruction", "--surface", "K3", "--v", "2,0,0"}));
    CHECK(ob2["n"] == 2);
    CHECK(ob2["universal_sheaf"] == "obstructed");

    // malformed class
    CHECK(run({"chi", "--surface", "P2", "--v", "1,x,0"}).exit_code == 1);
    CHECK(run({"chi", "--surface", "P2", "--v", "1,0"}).exit_code == 1);
    // non-integral c2
    CHECK(run({"chi", "--surface", "P2", "--v", "1,0,1/2"}).exit_code == 1);
}

TEST_CASE("mukai, hilbert, stability") {
    njson mk = parse(run({"mukai", "--surface", "P2", "--x", "1,0,0", "--y", "1,0,0"}));
    CHECK(mk["mukai"] == -1);

    njson hb = parse(run({"hilbert", "--surface", "P2", "--v", "1,0,0"}));
    CHECK(hb["coefficients"]["n2"] == "1/2");
    CHECK(hb["coefficients"]["n1"] == "3/2");
    CHECK(hb["coefficients"]["n0"] == "1");
    CHECK(hb["l0"] == 1);
    CHECK(hb["support_dim"] == 2);

    // a direct sum has the same reduced polynomial
    njson st = parse(run({"stability", "--surface", "P2", "--p", "1,0,0", "--q", "2,0,0"}));
    CHECK(st["order"] == "=");
    njson st2 = parse(run({"stability", "--surface", "P2", "--p", "1,0,0", "--q", "1,-1,1/2"}));
    CHECK(st2["order"] == ">");

    // explicit polarization on a rank-2 lattice
    njson h2 = parse(run({"hilbert", "--surface", "P1xP1", "--v", "1,0,0,0", "--H", "1,1"}));
    CHECK(h2["coefficients"]["n2"] == "1");
    CHECK(h2["l0"] == 2);
    CHECK(run({"hilbert", "--surface", "P1xP1", "--v", "1,0,0,0"}).exit_code == 1); // --H required here
}

TEST_CASE("dualbasis default on the plane") {
    njson db = parse(run({"dualbasis", "--surface", "P2"}));
    CHECK(db["gram"] == njson::parse("[[0,1,3],[1,3,6],[3,6,10]]"));
    CHECK(db["dual"][2] == njson::parse(R"({"parity":"even","r":1,"c1":[0],"c2":0})"));
}

TEST_CASE("blowup report round trip") {
    Outcome o = run({"blowup", "--surface", "P2", "--steps", "2"});
    REQUIRE(o.exit_code == 0);
    njson j = parse(o);
    CHECK(j["verify"]["ok"] == true);
    CHECK(j["pairs"].size() == 5);

    // re-feed the emitted decomposition
    std::string path = "cli_roundtrip_dec.json";
    std::ofstream(path) << o.output;
    Outcome re = run({"blowup", "--verify-file", path});
    CHECK(re.exit_code == 0);
    CHECK(parse(re)["verify"]["ok"] == true);
    std::remove(path.c_str());
}

TEST_CASE("diagonal from an explicit factor spec") {
    std::string path = "cli_factors.json";
    std::ofstream(path) << R"({
        "m": 1,
        "factors": [{"name": "e1", "parity": "even", "rank": 2, "rank_left": 3}],
        "gram": [[1]]
    })";
    Outcome o = run({"diagonal", "--factors", path});
    REQUIRE(o.exit_code == 0);
    njson j = parse(o);
    CHECK(j["rank"] == 6);
    CHECK(j["c_m"] == "2*c_1(e1') + 3*c_1(e1)");
    CHECK(j["generators"][0]["alpha"] == "1");
    std::remove(path.c_str());

    CHECK(run({"diagonal", "--factors", "no_such_file.json"}).exit_code == 1);
}

TEST_CASE("diagonal from a surface spec") {
    std::string path = "cli_factors_k3.json";
    std::ofstream(path) << R"({
        "surface": "P2",
        "v": {"parity": "even", "r": 1, "c1": [0], "c2": 1},
        "epsilon": 1,
        "pairing": "mukai"
    })";
    Outcome o = run({"diagonal", "--factors", path});
    REQUIRE(o.exit_code == 0);
    njson j = parse(o);
    CHECK(j["m"] == 2);
    CHECK(j["expected_rank"] == 1);
    CHECK(j["rank_consistent"] == false); // default unit ranks are a guess
    std::remove(path.c_str());
}

TEST_CASE("spectral subcommand") {
    njson j = parse(run({"spectral", "--g", "2", "--delta", "1", "--x", "1,1", "--a", "1,0", "--c", "0,0"}));
    CHECK(j["twist_degree"] == 3);
    CHECK(j["pushforward_of_one"]["rank"] == 1);
    CHECK(j["pushforward_of_h"]["rank"] == 0);
    CHECK(j["w"]["chi_surface"] == -1); // chi(O_S) = 1 - g
    CHECK(j["projection_formula"] == true);
}

TEST_CASE("verify subcommand exposes named suites") {
    Outcome o = run({"verify", "--suite", "expected-dim"});
    CHECK(o.exit_code == 0);
    njson j = parse(o);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 1);
    CHECK(run({"verify", "--suite", "no-such-suite"}).exit_code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"surface", "K3"},
             {"dualbasis", "--surface", "P1xP1"},
             {"blowup", "--surface", "P2", "--steps", "3"},
             {"spectral", "--g", "1", "--delta", "0"}}) {
        Outcome a = run(args), b = run(args);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}
