#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "ncspectrum/api.hpp"
#include "ncspectrum/cli.hpp"

#ifndef NCS_TEST_DATA
#error "NCS_TEST_DATA must point at tests/data"
#endif

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ncspectrum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = ncs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string data(const std::string& name) { return std::string(NCS_TEST_DATA) + "/" + name; }

using ncs::api::json;

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("k0 golden outputs") {
        auto r = run({"k0", "--algebra", R"({"blocks":[2,3]})", "--method", "standard"});
        CHECK(r.code == 0);
        CHECK(first_line(r.out) == "Z^2");
        auto d = run({"k0", "--algebra", R"({"blocks":[1]})", "--method", "diagram"});
        CHECK(d.code == 0);
        CHECK(first_line(d.out) == "Z");
        auto n = run({"k0", "--algebra", "[2]", "--method", "diagram", "--nonunital"});
        CHECK(n.code == 0);
        CHECK(first_line(n.out) == "Z");
    }

    TEST_CASE("colimit golden output") {
        auto r = run({"colimit", "--diagram", data("pushout2x2.json")});
        CHECK(r.code == 0);
        CHECK(first_line(r.out) == "Z ⊕ Z/2");
        auto j = run({"--format", "json", "colimit", "--diagram", data("pushout2x2.json")});
        REQUIRE(j.code == 0);
        auto parsed = json::parse(j.out);
        CHECK(parsed["group"] == "Z ⊕ Z/2");
        CHECK(parsed["invariant_factors"]["free_rank"] == 1);
        CHECK(parsed["invariant_factors"]["torsion"] == json::array({2}));
    }

    TEST_CASE("json output is deterministic") {
        std::vector<std::string> args{"--format", "json", "verify", "theorem1", "--algebra", "[1,1]", "--stabilize", "1",
                                      "--random-homs", "3", "--seed", "5"};
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        auto parsed = json::parse(a.out);
        CHECK(parsed["passed"] == true);
        CHECK(parsed["seed"] == 5);
        CHECK(parsed["checks"].size() == 5);
    }

    TEST_CASE("the seed environment variable overrides the flag") {
        std::vector<std::string> args{"--format", "json", "verify", "theorem1", "--algebra", "[1]", "--stabilize", "1",
                                      "--random-homs", "1", "--seed", "5"};
        ::setenv("NC_SPECTRUM_SEED", "9", 1);
        auto r = run(args);
        ::unsetenv("NC_SPECTRUM_SEED");
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["seed"] == 9);
    }

    TEST_CASE("invalid input exits 1 with a location") {
        auto bad = run({"k0", "--algebra", R"({"blocks":[0]})"});
        CHECK(bad.code == 1);
        CHECK(bad.err.find("algebra") != std::string::npos);
        auto garbage = run({"k0", "--algebra", "{not json"});
        CHECK(garbage.code == 1);
        auto missing = run({"colimit", "--diagram", data("does_not_exist.json")});
        CHECK(missing.code == 1);
        auto usage = run({"frobnicate"});
        CHECK(usage.code == 1);
        auto bad_edge = run({"colimit", "--diagram",
                             R"({"nodes":[{"id":"a","generators":1,"relations":[[2]]},{"id":"b","generators":1}],)"
                             R"("edges":[{"id":"u","source":"a","target":"b","images":[[1]]}]})"});
        CHECK(bad_edge.code == 1);
        CHECK(bad_edge.err.find("edges[0]") != std::string::npos);
        auto unknown_spec = run({"ideals", "--algebra", "[2]", "--spec", R"({"dpeth":2})"});
        CHECK(unknown_spec.code == 1);
    }

    TEST_CASE("failed verification exits 2 with a witness") {
        auto r = run({"--format", "json", "verify", "theorem1", "--algebra", "[2]", "--stabilize", "1", "--spec",
                      R"({"transpositions":false,"pythagorean":false})"});
        CHECK(r.code == 2);
        auto parsed = json::parse(r.out);
        CHECK(parsed["passed"] == false);
        bool has_witness = false;
        for (const auto& c : parsed["checks"])
            if (c["passed"] == false && !c["detail"].get<std::string>().empty()) has_witness = true;
        CHECK(has_witness);
    }

    TEST_CASE("partial-ideal check") {
        auto corner = run({"--format", "json", "partial-ideal", "check", "--file", data("m2_corner.json")});
        CHECK(corner.code == 2);
        auto parsed = json::parse(corner.out);
        CHECK(parsed["compatible"] == true);
        CHECK(parsed["rotation_fixed"] == false);
        CHECK_FALSE(parsed["unfixed_edge"].is_null());
        CHECK(parsed["reconstruction"]["ok"] == false);

        auto block = run({"--format", "json", "partial-ideal", "check", "--file", data("m2m3_block1.json")});
        auto b = json::parse(block.out);
        CHECK(block.code == 0);
        CHECK(b["passed"] == true);
        CHECK(b["reconstruction"]["total_ideal"] == "{1}");
    }

    TEST_CASE("ideals, limit and snf") {
        auto i = run({"--format", "json", "ideals", "--algebra", "[2,3]"});
        CHECK(i.code == 0);
        auto parsed = json::parse(i.out);
        CHECK(parsed["isomorphic"] == true);
        CHECK(parsed["t_tilde"]["size"] == 4);
        CHECK(parsed["total_ideals"].size() == 4);

        auto l = run({"--format", "json", "limit", "--diagram", data("two_chains.json")});
        CHECK(l.code == 0);
        CHECK(json::parse(l.out)["elements"].size() == 2);

        auto s = run({"--format", "json", "snf", "--matrix", "[[2,4],[6,8]]"});
        CHECK(s.code == 0);
        auto sp = json::parse(s.out);
        CHECK(sp["diagonal"] == json::array({2, 4}));
    }

    TEST_CASE("help lists every subcommand") {
        auto h = run({"--help"});
        CHECK(h.code == 0);
        for (const char* sub : {"k0", "verify", "colimit", "limit", "ideals", "partial-ideal", "snf"})
            CHECK(h.out.find(sub) != std::string::npos);
    }
}
