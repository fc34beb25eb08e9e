#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qalg/charrings.hpp"
#include "qalg/invariants.hpp"
#include "qalg/jsonio.hpp"
#include "qalg/scenarios.hpp"
#include "qalg/verify.hpp"

namespace {

/* Exit codes: 0 all good, 1 check failure, 2 parse error, 3 precondition
   failure, 4 truncation refusal. */
constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTruncation = 4;

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw qalg::Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

qalg::io::IdealFile load_ideal(const std::string& path, const std::string& order_override) {
    qalg::io::IdealFile file = qalg::io::ideal_from_json(qalg::io::load_json_file(path));
    if (!order_override.empty()) {
        qalg::OrderKind kind = qalg::order_kind_from_name(order_override);
        file.order = qalg::MonomialOrder(file.ideal.ring, kind, file.order.precedence());
    }
    return file;
}

int cmd_groebner(const std::string& path, const std::string& order_override) {
    qalg::io::IdealFile file = load_ideal(path, order_override);
    qalg::GroebnerBasis gb = qalg::buchberger(file.ideal, file.order);

    std::string prec;
    for (const auto& n : file.order.precedence_names())
        prec += (prec.empty() ? "" : " > ") + n;
    std::cout << "reduced Groebner basis (" << qalg::order_kind_name(file.order.kind()) << ": "
              << prec << ")\n";
    for (const auto& g : gb.elements())
        std::cout << "  " << g.format() << "\n";
    std::cout << "leading term ideal:";
    for (const auto& m : qalg::leading_term_ideal(gb))
        std::cout << " " << qalg::format_monomial(m, *file.ideal.ring);
    std::cout << "\n";
    return kExitOk;
}

int cmd_hilbert(const std::string& path, int max_degree, const std::string& json_out,
                const std::string& order_override) {
    qalg::io::IdealFile file = load_ideal(path, order_override);
    qalg::GradedDims dims = qalg::hilbert_function(file.ideal, file.order, max_degree);
    std::cout << "dims 0.." << max_degree << ": " << dims.comma_list() << "\n";
    std::cout << dims.table();
    if (!json_out.empty())
        write_json_file(json_out, qalg::io::dims_to_json(dims));
    return kExitOk;
}

int cmd_invariants(const std::string& ideal_path, const std::string& action_path, int max_degree,
                   const std::string& json_out, const std::string& order_override) {
    qalg::io::IdealFile file = load_ideal(ideal_path, order_override);
    qalg::GroupAction group =
        qalg::io::action_from_json(qalg::io::load_json_file(action_path), file.ideal.ring);
    std::cout << "group order: " << group.order() << "\n";

    qalg::GradedDims dims =
        qalg::fixed_quotient_dims(file.ideal, group, file.order, max_degree);
    std::cout << "fixed subspace dims 0.." << max_degree << ": " << dims.comma_list() << "\n";

    qalg::FixedPointReport lemma =
        qalg::verify_fixed_point_lemma(file.ideal, group, file.order, max_degree);
    if (lemma.equal) {
        std::cout << "fixed-points-of-quotient comparison: equal on 0.." << max_degree << "\n";
    } else {
        std::cout << "fixed-points-of-quotient comparison: MISMATCH at degree "
                  << lemma.mismatch->degree << " (" << lemma.mismatch->left << " vs "
                  << lemma.mismatch->right << ")\n";
    }
    if (!json_out.empty())
        write_json_file(json_out, qalg::io::dims_to_json(dims));
    return lemma.equal ? kExitOk : kExitCheckFailure;
}

int cmd_ss(const std::string& name_or_path, int max_degree, const std::string& json_out,
           int grid_cols) {
    qalg::builtin::Scenario scenario;
    bool found = false;
    for (const auto& s : qalg::builtin::scenarios())
        if (s.name == name_or_path) {
            scenario = s;
            found = true;
            break;
        }
    if (!found)
        scenario = qalg::io::scenario_from_json(qalg::io::load_json_file(name_or_path));

    std::cout << "scenario " << scenario.name;
    if (!scenario.description.empty())
        std::cout << ": " << scenario.description;
    std::cout << "\n";

    qalg::SpectralRun run = qalg::run_to_infinity(scenario.base, scenario.fiber, scenario.specs,
                                                  max_degree, scenario.col_bound);
    for (const auto& page : run.trace)
        std::cout << page.grid(grid_cols);
    std::cout << "collapse page: " << run.collapse_page << "\n";
    std::cout << "E-infinity totals 0.." << max_degree << ": " << run.totals.comma_list() << "\n";
    if (!json_out.empty())
        write_json_file(json_out, qalg::io::dims_to_json(run.totals));
    return kExitOk;
}

int cmd_charrings_list() {
    std::cout << "rings:\n";
    const char* names[] = {"bso2", "bso3", "bso4", "bso2xbso2"};
    for (const char* n : names) {
        qalg::BaseRingPtr ring = qalg::bso_ring(qalg::classifying_ring_from_name(n));
        std::cout << "  " << n << ": Q[";
        const qalg::RingSpec& spec = *ring->ring();
        for (std::size_t i = 0; i < spec.size(); ++i)
            std::cout << (i ? ", " : "") << spec.name(i) << "(" << spec.degree(i) << ")";
        std::cout << "]\n";
    }
    std::cout << "maps:\n";
    for (const auto& m : qalg::builtin_maps())
        std::cout << "  " << m.describe() << "\n";
    return kExitOk;
}

int cmd_charrings_apply(const std::string& map_name, const std::string& poly_text) {
    const qalg::RingMap& map = qalg::builtin_map(map_name);
    qalg::Polynomial p = qalg::Polynomial::parse(poly_text, map.source()->ring());
    std::cout << qalg::apply_ring_map(map, p).format() << "\n";
    return kExitOk;
}

int cmd_verify(int max_degree, const std::string& json_out) {
    qalg::VerificationReport report = qalg::verify_all(max_degree);
    std::cout << report.text();
    for (const auto& c : report.checks)
        std::cerr << "timing " << c.name << ": " << c.wall_us << " us\n";
    if (!json_out.empty())
        write_json_file(json_out, report.to_json());
    if (report.failed() > 0)
        return kExitCheckFailure;
    if (report.refused() > 0)
        return kExitTruncation;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded-ring, Groebner and spectral sequence calculator over Q"};
    app.require_subcommand(1);

    std::string ideal_path, action_path, order_override, json_out, scenario_arg, map_name,
        poly_text, verify_target = "all";
    int max_degree = 40;
    int grid_cols = 12;

    CLI::App* gro = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
    gro->add_option("ideal", ideal_path, "ideal JSON file")->required();
    gro->add_option("--order", order_override, "override the order kind (lex|grevlex)");

    CLI::App* hil = app.add_subcommand("hilbert", "degreewise dimensions of a graded quotient");
    hil->add_option("ideal", ideal_path, "ideal JSON file")->required();
    hil->add_option("--max-degree", max_degree, "degree bound (default 40)");
    hil->add_option("--json", json_out, "write the dims as JSON to this file");
    hil->add_option("--order", order_override, "override the order kind (lex|grevlex)");

    CLI::App* inv = app.add_subcommand("invariants", "fixed subspaces of a finite group action");
    inv->add_option("ideal", ideal_path, "ideal JSON file")->required();
    inv->add_option("action", action_path, "action JSON file")->required();
    inv->add_option("--max-degree", max_degree, "degree bound (default 40)");
    inv->add_option("--json", json_out, "write the fixed dims as JSON to this file");
    inv->add_option("--order", order_override, "override the order kind (lex|grevlex)");

    CLI::App* ss = app.add_subcommand("ss", "run a first-quadrant spectral sequence scenario");
    ss->add_option("scenario", scenario_arg, "built-in scenario name or scenario JSON file")
        ->required();
    ss->add_option("--max-degree", max_degree, "total degree bound (default 40)");
    ss->add_option("--json", json_out, "write E-infinity totals as JSON to this file");
    ss->add_option("--grid-cols", grid_cols, "columns shown in the page charts (default 12)");

    CLI::App* chr = app.add_subcommand("charrings", "classifying-space rings and catalogued maps");
    chr->require_subcommand(1);
    CLI::App* chr_list = chr->add_subcommand("list", "list the rings and maps");
    CLI::App* chr_apply = chr->add_subcommand("apply", "apply a catalogued map to a polynomial");
    chr_apply->add_option("--map", map_name, "map name (see charrings list)")->required();
    chr_apply->add_option("--poly", poly_text, "polynomial in the source ring")->required();

    CLI::App* ver = app.add_subcommand("verify", "run the whole built-in claim catalogue");
    ver->add_option("target", verify_target, "claim catalogue to run (default: all)")
        ->check(CLI::IsMember({"all", "paper"}));
    ver->add_option("--max-degree", max_degree, "degree bound (default 40)");
    ver->add_option("--json", json_out, "write the report as JSON to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gro->parsed())
            return cmd_groebner(ideal_path, order_override);
        if (hil->parsed())
            return cmd_hilbert(ideal_path, max_degree, json_out, order_override);
        if (inv->parsed())
            return cmd_invariants(ideal_path, action_path, max_degree, json_out, order_override);
        if (ss->parsed())
            return cmd_ss(scenario_arg, max_degree, json_out, grid_cols);
        if (chr->parsed()) {
            if (chr_list->parsed())
                return cmd_charrings_list();
            if (chr_apply->parsed())
                return cmd_charrings_apply(map_name, poly_text);
        }
        if (ver->parsed())
            return cmd_verify(max_degree, json_out);
    } catch (const qalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const qalg::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const qalg::TruncationTooSmall& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const qalg::UnstableIdeal& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qalg::NonHomogeneous& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qalg::DegreeMismatch& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qalg::ClosureCapExceeded& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
