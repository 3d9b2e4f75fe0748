// pcoh: exact-arithmetic tables, generators and invariant checks for the
// Poisson cohomology of quadratic toric structures pi_B on C^{2n}.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcoh/cohomology.hpp"
#include "pcoh/toric.hpp"
#include "pcoh/verify.hpp"

namespace {

using namespace pcoh;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitShapeError = 3;

struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    int n = 0;  // 0 = infer from B/preset
    std::string b_text;
    std::string preset_name;
    int dmax = 8;
    std::optional<int> d, p;
    std::string format = "ascii";
    bool classify = false;
    bool raw = false;
    int jobs = 1;
};

HermitianForm resolve_form(const JobSpec& spec) {
    std::optional<HermitianForm> form;
    if (!spec.preset_name.empty() && !spec.b_text.empty())
        throw shape_error("--preset and --b are mutually exclusive");
    if (!spec.preset_name.empty())
        form = preset(spec.preset_name);
    else if (!spec.b_text.empty())
        form = HermitianForm(parse_matrix(spec.b_text), spec.raw);
    else
        throw shape_error("one of --preset or --b is required");
    if (spec.n != 0 && spec.n != form->n())
        throw shape_error("--n disagrees with the matrix size");
    if (spec.p && (*spec.p < 0 || *spec.p > 2 * form->n()))
        throw shape_error("--p out of range 0..2n");
    if (spec.dmax < 0) throw shape_error("--dmax must be >= 0");
    if (form->n() == 2 && spec.dmax > 14)
        std::cerr << "warning: dmax > 14 for n = 2; cell sizes grow as C(d+3,3)*C(4,p), "
                     "expect large memory use\n";
    return *form;
}

json matrix_json(const GQMatrix& b) {
    json jb = json::array();
    for (const auto& row : b) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(serialize_gq(e));
        jb.push_back(jr);
    }
    return jb;
}

json table_json(const CohomologySummary& s) {
    json jb = matrix_json(s.B);
    json jt = json::array();
    for (int d = 0; d <= s.dmax; ++d) {
        json dims = json::array();
        for (const auto& cell : s.cells[d]) dims.push_back(cell.dim);
        jt.push_back({{"d", d}, {"dims", dims}});
    }
    return json{{"n", s.n}, {"B", jb}, {"dmax", s.dmax}, {"table", jt}};
}

void emit_table_ascii(const CohomologySummary& s, std::ostream& os) {
    os << "dim H_[d]^p |";
    for (int p = 0; p <= 2 * s.n; ++p) os << "  " << p;
    os << "\n------------+";
    for (int p = 0; p <= 2 * s.n; ++p) os << "---";
    os << "\n";
    for (int d = 0; d <= s.dmax; ++d) {
        os << "      " << (d < 10 ? " " : "") << d << "    |";
        for (const auto& cell : s.cells[d]) os << "  " << cell.dim;
        os << "\n";
    }
}

void emit_table(const CohomologySummary& s, const std::string& format, std::ostream& os) {
    if (format == "ascii") {
        emit_table_ascii(s, os);
    } else if (format == "csv") {
        os << "d";
        for (int p = 0; p <= 2 * s.n; ++p) os << ",h" << p;
        os << "\n";
        for (int d = 0; d <= s.dmax; ++d) {
            os << d;
            for (const auto& cell : s.cells[d]) os << "," << cell.dim;
            os << "\n";
        }
    } else {
        os << table_json(s).dump(2) << "\n";
    }
}

int run_table(const JobSpec& spec) {
    HermitianForm form = resolve_form(spec);
    CohomologyEngine engine(build_pi(form));
    CohomologySummary s = engine.full_table(spec.dmax, false, false, spec.jobs);
    emit_table(s, spec.format, std::cout);
    return 0;
}

int run_generators(const JobSpec& spec) {
    HermitianForm form = resolve_form(spec);
    if (spec.d.has_value() != spec.p.has_value())
        throw shape_error("--d and --p must be given together");
    CohomologyEngine engine(build_pi(form));
    int n = form.n();

    std::vector<std::tuple<int, int, MultiVector, GeneratorType>> gens;
    auto collect = [&](int d, int p) {
        for (const auto& rep : engine.representatives(d, p))
            gens.emplace_back(d, p, rep, spec.classify ? classify_generator(rep) : GeneratorType::Untyped);
    };
    if (spec.d) {
        collect(*spec.d, *spec.p);
    } else {
        for (int d = 0; d <= spec.dmax; ++d)
            for (int p = 0; p <= 2 * n; ++p)
                if (engine.cohomology_dim(d, p) > 0) collect(d, p);
    }

    if (spec.format == "json") {
        json out = table_json(engine.full_table(spec.d ? *spec.d : spec.dmax, false, false));
        json jg = json::array();
        for (const auto& [d, p, rep, type] : gens) {
            json terms = json::array();
            for (const auto& t : to_term_strings(rep)) terms.push_back(t);
            json entry{{"d", d}, {"p", p}, {"terms", terms}};
            entry["type"] = spec.classify ? pcoh::to_string(type) : "untyped";
            jg.push_back(entry);
        }
        out["generators"] = jg;
        std::cout << out.dump(2) << "\n";
    } else if (spec.format == "csv") {
        std::cout << "d,p,type,generator\n";
        for (const auto& [d, p, rep, type] : gens)
            std::cout << d << "," << p << "," << (spec.classify ? pcoh::to_string(type) : "") << ",\""
                      << pcoh::to_string(rep) << "\"\n";
    } else {
        for (const auto& [d, p, rep, type] : gens) {
            std::cout << "d=" << d << " p=" << p << ": " << pcoh::to_string(rep);
            if (spec.classify) std::cout << "   [Type " << pcoh::to_string(type) << "]";
            std::cout << "\n";
        }
        if (gens.empty()) std::cout << "(no generators)\n";
    }
    return 0;
}

int run_verify(const JobSpec& spec) {
    HermitianForm form = resolve_form(spec);
    CohomologyEngine engine(build_pi(form));
    auto results = run_verification(form, spec.dmax, engine);
    bool any_fail = false;
    json jchecks = json::array();
    for (const auto& r : results) {
        std::string status = r.status == CheckStatus::Pass   ? "PASS"
                             : r.status == CheckStatus::Fail ? "FAIL"
                                                             : "SKIP";
        if (r.status == CheckStatus::Fail) any_fail = true;
        if (spec.format == "json") {
            jchecks.push_back({{"name", r.name}, {"status", status}, {"cases", r.cases}, {"detail", r.detail}});
        } else {
            std::cout << status << "  " << r.name << " (" << r.cases << " cases)";
            if (!r.detail.empty()) std::cout << " -- " << r.detail;
            std::cout << "\n";
        }
    }
    if (spec.format == "json")
        std::cout << json{{"n", form.n()}, {"B", matrix_json(form.entries())}, {"checks", jchecks}}.dump(2)
                  << "\n";
    return any_fail ? kExitVerifyFailure : 0;
}

int run_preset_list() {
    for (const auto& name : preset_names())
        std::cout << name << ": " << matrix_to_string(preset(name).entries()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Poisson cohomology of quadratic toric structures pi_B on C^{2n}"};
    app.require_subcommand(1);

    JobSpec spec;
    auto add_common = [&](CLI::App* cmd, bool cell_flags) {
        cmd->add_option("--n", spec.n, "number of z/w pairs (inferred from B when omitted)");
        cmd->add_option("--b", spec.b_text, "coefficient matrix, rows ';', entries ',' (e.g. \"2,1;1,2\")");
        cmd->add_option("--preset", spec.preset_name, "named example matrix (see preset-list)");
        cmd->add_option("--dmax", spec.dmax, "maximum homogeneous degree (default 8)");
        cmd->add_option("--format", spec.format, "ascii|csv|json")
            ->check(CLI::IsMember({"ascii", "csv", "json"}));
        cmd->add_flag("--raw", spec.raw, "accept a non-Hermitian matrix");
        cmd->add_option("--jobs", spec.jobs, "worker threads for cell computations")
            ->check(CLI::PositiveNumber);
        if (cell_flags) {
            cmd->add_option("--d", spec.d, "homogeneous degree of a single cell");
            cmd->add_option("--p", spec.p, "wedge degree of a single cell");
            cmd->add_flag("--classify", spec.classify, "tag generators with Type I/II/III");
        }
    };

    CLI::App* table = app.add_subcommand("table", "dimension table of H^p_[d], d = 0..dmax");
    add_common(table, false);
    CLI::App* generators = app.add_subcommand("generators", "representative generators per cell");
    add_common(generators, true);
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    add_common(verify, false);
    app.add_subcommand("preset-list", "list the named example matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParseError : 0;
    }

    try {
        if (app.got_subcommand("table")) return run_table(spec);
        if (app.got_subcommand("generators")) return run_generators(spec);
        if (app.got_subcommand("verify")) return run_verify(spec);
        return run_preset_list();
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const shape_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShapeError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
