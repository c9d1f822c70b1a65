#include "ncspectrum/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "ncspectrum/api.hpp"

namespace ncs::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string algebra;
    std::string method = "standard";
    std::size_t stabilize = 2;
    std::string spec;
    std::string hom;
    std::string diagram;
    std::string file;
    std::string matrix;
    bool nonunital = false;
    std::size_t random_homs = 0;
};

std::optional<json> optional_input(const std::string& value, const std::string& where) {
    if (value.empty()) return std::nullopt;
    return io::load(value, where);
}

std::string coords(const json& c) {
    std::string out = "(";
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? ", " : "") + c[k].dump();
    return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_k0(std::ostream& out, const json& r) {
    out << r["group"].get<std::string>() << "\n";
    for (const auto& row : r["classes"])
        out << "block " << row["block"].get<std::size_t>() << " (M" << row["size"].get<std::size_t>()
            << "): " << coords(row["class"]) << "\n";
    if (r.contains("unitalized_group")) out << "unitalization: " << r["unitalized_group"].get<std::string>() << "\n";
    if (r.contains("eta"))
        out << "eta: " << (r["eta"]["passed"].get<bool>() ? "pass" : "FAIL " + r["eta"]["witness"].get<std::string>())
            << "\n";
}

void print_theorem1(std::ostream& out, const json& r) {
    for (const auto& c : r["checks"])
        out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": "
            << c["detail"].get<std::string>() << "\n";
    out << "theorem1: " << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void print_colimit(std::ostream& out, const json& r) {
    out << r["group"].get<std::string>() << "\n";
    for (const auto& n : r["injections"]) {
        out << "node " << n["node"].get<std::string>() << ":";
        for (const auto& g : n["generator_images"]) out << " " << coords(g);
        out << "\n";
    }
}

void print_limit(std::ostream& out, const json& r) {
    out << r["size"].get<std::size_t>() << " elements, top " << r["top"].get<std::string>() << "\n";
    for (const auto& e : r["elements"]) out << "  " << e.get<std::string>() << "\n";
}

void print_ideals(std::ostream& out, const json& r) {
    out << "total ideals (" << r["total_ideals"].size() << "):";
    for (const auto& i : r["total_ideals"]) out << " " << i.get<std::string>();
    out << "\nt_tilde (" << r["t_tilde"]["size"].get<std::size_t>() << " elements):";
    for (const auto& e : r["t_tilde"]["elements"]) out << " " << e.get<std::string>();
    const auto& p = r["partial_ideals"];
    out << "\nisomorphic: " << yes_no(r["isomorphic"].get<bool>())
        << "\ncomplement correspondence: " << yes_no(r["complement_correspondence"].get<bool>())
        << "\npartial ideals: " << p["compatible"].get<std::size_t>() << " compatible, "
        << p["rotation_fixed"].get<std::size_t>() << " rotation-fixed, round-trip bijection "
        << yes_no(p["round_trip_bijection"].get<bool>()) << "\n";
    for (const auto& w : r["witnesses"]) out << "witness: " << w.get<std::string>() << "\n";
    out << "spec: " << r["spec"].get<std::string>() << "\nverdict: " << (r["passed"].get<bool>() ? "PASS" : "FAIL")
        << "\n";
}

void print_partial_ideal(std::ostream& out, const json& r) {
    out << "compatible: " << yes_no(r["compatible"].get<bool>());
    if (!r["incompatible_edge"].is_null()) out << " (edge " << r["incompatible_edge"].get<std::string>() << ")";
    out << "\nrotation-fixed: " << yes_no(r["rotation_fixed"].get<bool>());
    if (!r["unfixed_edge"].is_null()) out << " (edge " << r["unfixed_edge"].get<std::string>() << ")";
    const auto& rec = r["reconstruction"];
    out << "\nreconstruction: ";
    if (rec["ok"].get<bool>())
        out << "total ideal " << rec["total_ideal"].get<std::string>() << "\n";
    else
        out << "failed at node " << rec["violating_node"].get<std::string>() << " (candidate "
            << rec["total_ideal"].get<std::string>() << ")\n";
}

void print_snf(std::ostream& out, const json& r) {
    out << "diagonal:";
    for (const auto& d : r["diagonal"]) out << " " << d.dump();
    out << "\nrank: " << r["rank"].get<std::size_t>() << "\ncokernel: " << r["cokernel"].get<std::string>() << "\n";
    const auto& c = r["checks"];
    out << "U*M*V = D: " << yes_no(c["UMV=D"].get<bool>()) << ", unimodular: " << yes_no(c["unimodular"].get<bool>())
        << ", divisibility: " << yes_no(c["divisibility"].get<bool>()) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact K_0 and ideal-lattice computations for multi-matrix algebras via diagrams of commutative "
                 "subalgebras.\nExit status: 0 success, 1 invalid input, 2 verification failure.",
                 "ncspectrum"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized checks (NC_SPECTRUM_SEED overrides)");

    const std::string input_note = " (inline JSON or a file path)";
    auto* k0 = app.add_subcommand("k0", "Compute K_0 of an algebra");
    k0->add_option("--algebra", cfg.algebra, "Algebra, e.g. {\"blocks\":[2,3]}" + input_note)->required();
    k0->add_option("--method", cfg.method, "standard (rank vectors) or diagram (colimit over subalgebras)")
        ->check(CLI::IsMember({"standard", "diagram"}));
    k0->add_option("--stabilize", cfg.stabilize, "Matrix tower level m for the diagram method")->check(CLI::PositiveNumber);
    k0->add_option("--spec", cfg.spec, "Subdiagram spec" + input_note);
    k0->add_flag("--nonunital", cfg.nonunital, "Kernel of the unitalization map instead of the unital colimit");

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    auto* theorem1 = verify->add_subcommand("theorem1", "Check eta and the naturality square");
    theorem1->add_option("--algebra", cfg.algebra, "Algebra" + input_note)->required();
    theorem1->add_option("--hom", cfg.hom, "Unital hom out of the algebra" + input_note);
    theorem1->add_option("--spec", cfg.spec, "Subdiagram spec" + input_note);
    theorem1->add_option("--stabilize", cfg.stabilize, "Matrix tower level m")->check(CLI::PositiveNumber);
    theorem1->add_option("--random-homs", cfg.random_homs, "Also check this many seeded random unital homs");

    auto* colimit = app.add_subcommand("colimit", "Colimit of a diagram of abelian groups");
    colimit->add_option("--diagram", cfg.diagram, "Diagram" + input_note)->required();

    auto* limit = app.add_subcommand("limit", "Limit of a diagram of meet-semilattices");
    limit->add_option("--diagram", cfg.diagram, "Diagram" + input_note)->required();

    auto* ideals = app.add_subcommand("ideals", "Ideal lattice versus the lattice of compatible closed-set families");
    ideals->add_option("--algebra", cfg.algebra, "Algebra" + input_note)->required();
    ideals->add_option("--spec", cfg.spec, "Subdiagram spec" + input_note);

    auto* partial = app.add_subcommand("partial-ideal", "Partial ideals");
    partial->require_subcommand(1);
    auto* partial_check = partial->add_subcommand("check", "Compatibility, rotation-fixedness and reconstruction");
    partial_check->add_option("--file", cfg.file, "{\"algebra\", \"spec\"?, \"choice\"}" + input_note)->required();

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", cfg.matrix, "Integer matrix [[...], ...]" + input_note)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    if (const char* env = std::getenv("NC_SPECTRUM_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: NC_SPECTRUM_SEED: expected a nonnegative integer\n";
            return 1;
        }
    }

    try {
        json report;
        void (*print)(std::ostream&, const json&) = nullptr;
        bool verification = false;
        if (k0->parsed()) {
            report = api::k0(io::load(cfg.algebra, "algebra"), cfg.method, cfg.stabilize, optional_input(cfg.spec, "spec"),
                             cfg.nonunital);
            print = print_k0;
        } else if (theorem1->parsed()) {
            report = api::verify_theorem1(io::load(cfg.algebra, "algebra"), optional_input(cfg.hom, "hom"),
                                          optional_input(cfg.spec, "spec"), cfg.stabilize, cfg.random_homs, cfg.seed);
            print = print_theorem1;
            verification = true;
        } else if (colimit->parsed()) {
            report = api::colimit(io::load(cfg.diagram, "diagram"));
            print = print_colimit;
        } else if (limit->parsed()) {
            report = api::limit(io::load(cfg.diagram, "diagram"));
            print = print_limit;
        } else if (ideals->parsed()) {
            report = api::ideals(io::load(cfg.algebra, "algebra"), optional_input(cfg.spec, "spec"));
            print = print_ideals;
            verification = true;
        } else if (partial_check->parsed()) {
            report = api::partial_ideal_check(io::load(cfg.file, "file"));
            print = print_partial_ideal;
            verification = true;
        } else {
            report = api::snf(io::load(cfg.matrix, "matrix"));
            print = print_snf;
        }
        if (cfg.format == "json")
            out << report.dump(2) << "\n";
        else
            print(out, report);
        return verification && !report["passed"].get<bool>() ? 2 : 0;
    } catch (const io::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "verification failed: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ncs::cli
