// Command-line front end: build modules, test admissibility, run the
// verification suites, and export exact matrices. All file formats are the
// JSON schemas used across the library; output written to files or stdout is
// canonical (byte-stable for fixed inputs and seeds), human-readable
// summaries and timings go to stderr.

#include "glmn/io.hpp"
#include "glmn/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace glmn;

namespace {

int exit_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_output(const Json& j, const std::string& out_path) {
    const std::string text = canonical_dump(j);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
}

std::pair<int, int> parse_shape(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("shape must be m,n");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

Weight parse_weight(const std::string& text, int expected) {
    Weight w;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string part =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        w.entries.push_back(parse_rational(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(w.entries.size()) != expected) {
        throw std::invalid_argument("weight needs " + std::to_string(expected) + " entries");
    }
    return w;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// ---------------------------------------------------------------------------

int cmd_structure(const std::string& shape_text, const std::string& out_path) {
    const auto [m, n] = parse_shape(shape_text);
    const Shape sh{m, n};
    Json j = to_json(sh);
    Json basis = Json::array();
    for (int i = 1; i <= sh.total(); ++i) {
        for (int k = 1; k <= sh.total(); ++k) {
            basis.push_back(Json{{"i", i}, {"j", k}, {"parity", parity(sh, BasisElement{i, k})}});
        }
    }
    j["basis_elements"] = basis;
    Json rels = Json::array();
    for (const auto& rel : presentation_relations(sh)) rels.push_back(to_json(rel));
    j["relations"] = rels;
    write_output(j, out_path);
    std::cerr << "gl(" << m << "|" << n << "): " << basis.size() << " basis elements, "
              << rels.size() << " relation instances\n";
    return 0;
}

int cmd_check_admissible(const std::string& path) {
    const Json j = read_json(path);
    const auto diagnose = [](const char* label, const RelationSet& c) {
        const FamilyCheck f = admissible_check(c);
        if (f.ok) {
            std::cout << label << ": admissible (" << c.size() << " relations)\n";
        } else {
            std::cout << label << ": condition (" << f.failed_condition << ") violated: "
                      << f.detail << "\n";
        }
        return f.ok;
    };
    if (j.contains("c1")) {
        const SuperRelationSet c = super_set_from_json(j);
        const bool ok = diagnose("c1", c.even) & diagnose("c2", c.odd);
        std::cout << (ok ? "admissible" : "not admissible") << "\n";
    } else {
        const RelationSet c = relation_set_from_json(j);
        std::cout << (diagnose("set", c) ? "admissible" : "not admissible") << "\n";
    }
    return 0;
}

int cmd_build(const std::string& shape_text, const std::string& weight_text, bool standard,
              const std::string& seed_path, const std::string& relations_path, bool covariant,
              std::size_t cap, int radius, bool with_matrices, const std::string& out_path) {
    const auto [m, n] = parse_shape(shape_text);
    const Shape sh{m, n};

    std::optional<SuperRelationSet> relations;
    if (standard) {
        relations = standard_interlacing(sh);
    } else if (!relations_path.empty()) {
        relations = super_set_from_json(read_json(relations_path));
    } else {
        return exit_usage("need --standard or --relations FILE");
    }
    std::optional<Tableau> seed;
    if (!weight_text.empty()) {
        seed = Tableau::highest_weight(sh, parse_weight(weight_text, sh.total()));
    } else if (!seed_path.empty()) {
        seed = tableau_from_json(read_json(seed_path));
    } else {
        return exit_usage("need --weight or --seed FILE");
    }

    const Timer timer;
    const ModuleSpace mod =
        ModuleSpace::build(*seed, *relations,
                           covariant ? ModuleMode::QuasiCovariant : ModuleMode::QuasiTypical, cap,
                           radius);
    write_output(module_to_json(mod, with_matrices), out_path);
    std::cerr << mod.describe() << " built in " << timer.ms() << " ms\n";
    return 0;
}

int cmd_verify(const std::string& module_path, const std::string& suite,
               std::optional<std::uint64_t> seed, int radius, int order,
               const std::string& out_path) {
    Json stored = read_json(module_path);
    if (radius > 0 && !stored.at("finite").get<bool>()) {
        stored["sample_radius"] = radius;
        stored.erase("basis");  // re-sampled ball differs from the stored one
    }
    const ModuleSpace mod = module_from_json(stored);
    std::vector<VerificationReport> reports;
    const bool all = suite == "all";

    if (all || suite == "relations") {
        reports.push_back(check_defining_relations(mod, mod.basis()));
    }
    if (all || suite == "irreducibility") {
        const Timer timer;
        VerificationReport rep{"irreducibility", mod.shape(), mod.describe(),
                               VerificationReport::Status::Pass, "", 0.0, seed};
        const bool crit = irreducibility_criterion(mod);
        if (mod.finite()) {
            const bool oracle = brute_force_irreducible(mod);
            rep.witness = std::string("criterion: ") + (crit ? "irreducible" : "reducible") +
                          "; brute force: " + (oracle ? "irreducible" : "reducible");
            if (crit != oracle) rep.status = VerificationReport::Status::Fail;
        } else {
            rep.witness = std::string("criterion: ") + (crit ? "irreducible" : "reducible") +
                          "; brute force not applicable (infinite basis)";
        }
        rep.wall_ms = timer.ms();
        reports.push_back(std::move(rep));
    }
    if (all || suite == "kac") {
        VerificationReport rep{"kac-structure", mod.shape(), mod.describe(),
                               VerificationReport::Status::Pass, "", 0.0, seed};
        if (mod.finite() && irreducibility_criterion(mod)) {
            rep = kac_compare(mod);
        } else {
            rep.status = VerificationReport::Status::Undecided;
            rep.witness = "comparison applies to irreducible finite modules only";
        }
        reports.push_back(std::move(rep));
    }
    if (all || suite == "berezinian") {
        const Timer timer;
        VerificationReport rep{"berezinian-diagonal", mod.shape(), mod.describe(),
                               VerificationReport::Status::Pass, "", 0.0, seed};
        if (mod.finite()) {
            const int ord = order > 0 ? order : mod.shape().total();
            const auto coeffs = berezinian_truncated(mod, ord);
            const auto dim = static_cast<Eigen::Index>(mod.dimension());
            for (Eigen::Index col = 0; col < dim && rep.passed(); ++col) {
                const auto series =
                    gt_eigenvalue(mod.basis()[static_cast<std::size_t>(col)], mod.shape().total())
                        .series(ord);
                for (int d = 0; d <= ord && rep.passed(); ++d) {
                    for (Eigen::Index row = 0; row < dim; ++row) {
                        const Rational expected =
                            row == col ? series[static_cast<std::size_t>(d)] : Rational(0);
                        if (coeffs[static_cast<std::size_t>(d)](row, col) != expected) {
                            rep.status = VerificationReport::Status::Fail;
                            rep.witness = "entry (" + std::to_string(row) + "," +
                                          std::to_string(col) + ") at order " + std::to_string(d);
                            break;
                        }
                    }
                }
            }
        } else {
            rep.status = VerificationReport::Status::Undecided;
            rep.witness = "operator expansion needs a finite basis";
        }
        rep.wall_ms = timer.ms();
        reports.push_back(std::move(rep));
        reports.push_back(check_separation(mod));
    }
    if (all || suite == "examples") {
        if (mod.shape() == Shape{1, 1} && mod.finite()) {
            reports.push_back(check_gl11_identity(mod));
        }
        if (mod.shape() == Shape{1, 2} && mod.finite()) {
            reports.push_back(check_gl12_commutator(mod));
        }
    }

    // one JSON object per check, newline-delimited; canonical, no timing
    std::string lines;
    bool failed = false;
    for (const auto& rep : reports) {
        Json j = to_json(rep);
        if (seed) j["seed"] = *seed;
        lines += j.dump() + "\n";
        failed = failed || rep.status == VerificationReport::Status::Fail;
        std::cerr << rep.check << ": " << to_string(rep.status)
                  << (rep.witness.empty() ? "" : " (" + rep.witness + ")") << " [" << rep.wall_ms
                  << " ms]\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << lines;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << lines;
    }
    return failed ? 1 : 0;
}

int cmd_berezinian(const std::string& module_path, int order, const std::string& out_path) {
    const ModuleSpace mod = module_from_json(read_json(module_path));
    const int ord = order > 0 ? order : mod.shape().total();
    Json j;
    j["module"] = mod.describe();
    j["order"] = ord;
    Json rows = Json::array();
    for (const auto& t : mod.basis()) {
        Json entry;
        entry["tableau"] = to_json(t)["rows"];
        Json tuple = Json::array();
        for (int k = 1; k <= mod.shape().total(); ++k) {
            GtEigenvalue ev = gt_eigenvalue(t, k);
            ev.reduce();
            Json factors;
            factors["num"] = Json::array();
            for (const auto& c : ev.numerator) factors["num"].push_back(to_string(c));
            factors["den"] = Json::array();
            for (const auto& c : ev.denominator) factors["den"].push_back(to_string(c));
            Json series = Json::array();
            for (const auto& c : ev.series(ord)) series.push_back(to_string(c));
            factors["series"] = series;
            tuple.push_back(factors);
        }
        entry["eigenvalues"] = tuple;
        rows.push_back(entry);
    }
    j["tableaux"] = rows;
    write_output(j, out_path);
    return 0;
}

int cmd_export(const std::string& module_path, bool with_matrices, const std::string& out_path) {
    const ModuleSpace mod = module_from_json(read_json(module_path));
    write_output(module_to_json(mod, with_matrices), out_path);
    std::cerr << "exported " << mod.describe() << (with_matrices ? " with matrices" : "") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gelfand-Tsetlin modules over gl(m|n)"};
    app.require_subcommand(1);

    std::string shape_text = "1,1", weight_text, seed_path, relations_path, module_path;
    std::string out_path, suite = "all";
    bool standard = false, covariant = false, with_matrices = false;
    std::size_t cap = 200000;
    int radius = -1, order = 0;
    std::uint64_t seed_value = 0;
    bool seed_given = false;

    auto* structure = app.add_subcommand("structure", "list generators and relation instances");
    structure->add_option("--shape", shape_text, "m,n")->required();
    structure->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand("check-admissible", "diagnose a relation-set file");
    check->add_option("file", relations_path, "relation set JSON")->required();

    auto* build = app.add_subcommand("build-module", "enumerate a module basis");
    build->add_option("--shape", shape_text, "m,n")->required();
    build->add_option("--weight", weight_text, "top-row weight, comma separated");
    build->add_flag("--standard", standard, "use the standard interlacing pair");
    build->add_option("--seed", seed_path, "seed tableau JSON");
    build->add_option("--relations", relations_path, "super relation set JSON");
    build->add_flag("--covariant", covariant, "covariant mode");
    build->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);
    build->add_option("--radius", radius, "ball radius for infinite modules");
    build->add_flag("--with-matrices", with_matrices, "include generator matrices");
    build->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run verification suites on a module file");
    verify->add_option("--module", module_path, "module JSON")->required();
    verify->add_option("--suite", suite, "all|relations|irreducibility|kac|berezinian|examples")
        ->check(CLI::IsMember({"all", "relations", "irreducibility", "kac", "berezinian",
                               "examples"}));
    verify->add_option("--seed", seed_value, "seed recorded in the output")
        ->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--radius", radius, "re-sample radius for infinite modules");
    verify->add_option("--order", order, "truncation order (default m+n)");
    verify->add_option("--out", out_path, "output path (default stdout)");

    auto* berez = app.add_subcommand("berezinian", "factored eigenvalues and series");
    berez->add_option("--module", module_path, "module JSON")->required();
    berez->add_option("--order", order, "truncation order (default m+n)");
    berez->add_option("--out", out_path, "output path (default stdout)");

    auto* exp = app.add_subcommand("export", "re-emit a module file, optionally with matrices");
    exp->add_option("--module", module_path, "module JSON")->required();
    exp->add_flag("--with-matrices", with_matrices, "include generator matrices");
    exp->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (structure->parsed()) return cmd_structure(shape_text, out_path);
        if (check->parsed()) return cmd_check_admissible(relations_path);
        if (build->parsed()) {
            return cmd_build(shape_text, weight_text, standard, seed_path, relations_path,
                             covariant, cap, radius, with_matrices, out_path);
        }
        if (verify->parsed()) {
            return cmd_verify(module_path, suite,
                              seed_given ? std::optional<std::uint64_t>(seed_value) : std::nullopt,
                              radius, order, out_path);
        }
        if (berez->parsed()) return cmd_berezinian(module_path, order, out_path);
        if (exp->parsed()) return cmd_export(module_path, with_matrices, out_path);
    } catch (const std::exception& e) {
        return exit_usage(e.what());
    }
    return 2;
}
