#include "exlab/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "exlab/constructions.hpp"
#include "exlab/errors.hpp"
#include "exlab/freeness.hpp"
#include "exlab/graph6.hpp"
#include "exlab/report.hpp"
#include "exlab/search.hpp"
#include "exlab/spectral.hpp"

namespace exlab {

namespace {

Graph read_graph_arg(const std::string& arg, std::istream& in) {
    std::string g6 = arg;
    if (arg == "-") {
        if (!std::getline(in, g6)) throw ValidationError("no graph6 input on stdin");
    }
    return decode_graph6(g6);
}

void print_graph(const Graph& g, const std::string& format, std::ostream& out,
                 const PartitionLabeling* labeling = nullptr) {
    if (format == "dot")
        out << emit_dot(g, labeling);
    else
        out << encode_graph6(g) << "\n";
}

struct SpecFlags {
    int p = 2;
    std::vector<int> ks;
    StarForestSpec spec() const { return StarForestSpec(p, ks); }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--p", f.p, "clique order minus one in the blow-up")->required();
    cmd->add_option("--ks", f.ks, "star sizes, non-increasing after normalization")
        ->required()
        ->delimiter(',');
}

void add_search_flags(CLI::App* cmd, SearchOptions& o) {
    cmd->add_option("--max-n", o.max_n, "labeled enumeration cap");
    cmd->add_option("--tie-tol", o.tie_tol, "spectral tie tolerance");
    cmd->add_option("--tol", o.tol, "power iteration tolerance");
    cmd->add_option("--shard-bits", o.shard_bits, "edge decisions fixed per shard");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
}

void print_search_warning(bool warned, std::ostream& err) {
    if (warned) err << "warning: n >= 9 labeled enumeration; expect a long run\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Extremal and spectral-extremal laboratory for blown-up star forests"};
    app.require_subcommand(1);

    std::string format = "g6";

    // construct
    auto* construct = app.add_subcommand("construct", "build a named graph family");
    construct->require_subcommand(1);
    construct->fallthrough();
    construct->add_option("--format", format, "g6 or dot")->check(CLI::IsMember({"g6", "dot"}));

    int star_k = 0;
    auto* c_star = construct->add_subcommand("star", "star with k edges");
    c_star->add_option("--k", star_k)->required();

    std::vector<int> forest_ks;
    auto* c_forest = construct->add_subcommand("star-forest", "disjoint union of stars");
    c_forest->add_option("--ks", forest_ks)->required()->delimiter(',');

    int turan_r = 0, turan_n = 0;
    auto* c_turan = construct->add_subcommand("turan", "balanced complete r-partite graph");
    c_turan->add_option("--r", turan_r)->required();
    c_turan->add_option("--n", turan_n)->required();

    std::string blowup_g6;
    int blowup_p = 2;
    auto* c_blowup = construct->add_subcommand("blowup", "replace each edge by K_{p+1}");
    c_blowup->add_option("g6", blowup_g6, "graph6 string or - for stdin")->required();
    c_blowup->add_option("--p", blowup_p)->required();

    int ch_nu = 0, ch_delta = 0;
    auto* c_ch = construct->add_subcommand("chvatal-hanson",
                                           "edge maximizer under matching and degree caps");
    c_ch->add_option("--nu", ch_nu)->required();
    c_ch->add_option("--delta", ch_delta)->required();

    int ex_n = 0;
    SpecFlags ex_flags;
    auto* c_ex = construct->add_subcommand("extremal", "conjectured extremal family member");
    c_ex->add_option("--n", ex_n)->required();
    add_spec_flags(c_ex, ex_flags);

    // rho
    std::string rho_g6;
    double rho_tol = kDefaultTol;
    auto* cmd_rho = app.add_subcommand("rho", "spectral radius of a graph6 graph");
    cmd_rho->add_option("g6", rho_g6, "graph6 string or - for stdin")->required();
    cmd_rho->add_option("--tol", rho_tol, "Rayleigh increment tolerance");

    // quotient-rho
    int quot_clique = 0;
    std::vector<int> quot_parts;
    double quot_tol = kDefaultTol;
    auto* cmd_quot = app.add_subcommand(
        "quotient-rho", "Perron root of a clique joined with a complete multipartite graph");
    cmd_quot->add_option("--q", quot_clique, "size of the joined clique (q-1)")->required();
    cmd_quot->add_option("--parts", quot_parts, "multipartite part sizes")
        ->required()
        ->delimiter(',');
    cmd_quot->add_option("--tol", quot_tol);

    // check-free
    std::string free_g6;
    SpecFlags free_flags;
    auto* cmd_free = app.add_subcommand("check-free", "find a blown-up star forest copy");
    cmd_free->add_option("g6", free_g6, "graph6 string or - for stdin")->required();
    add_spec_flags(cmd_free, free_flags);

    // turan-number
    int tn_n = 0;
    SpecFlags tn_flags;
    SearchOptions tn_opts;
    auto* cmd_tn = app.add_subcommand("turan-number", "exact ex(n, F) by enumeration");
    cmd_tn->add_option("--n", tn_n)->required();
    add_spec_flags(cmd_tn, tn_flags);
    add_search_flags(cmd_tn, tn_opts);

    // spectral-extremal
    int se_n = 0;
    SpecFlags se_flags;
    SearchOptions se_opts;
    auto* cmd_se = app.add_subcommand("spectral-extremal", "max spectral radius by enumeration");
    cmd_se->add_option("--n", se_n)->required();
    add_spec_flags(cmd_se, se_flags);
    add_search_flags(cmd_se, se_opts);

    // verify
    int ver_n = 0;
    SpecFlags ver_flags;
    SearchOptions ver_opts;
    std::string ver_json;
    auto* cmd_ver = app.add_subcommand("verify", "full verification report for one (n, spec)");
    cmd_ver->add_option("--n", ver_n)->required();
    add_spec_flags(cmd_ver, ver_flags);
    add_search_flags(cmd_ver, ver_opts);
    cmd_ver->add_option("--json", ver_json, "write the JSON report here (- for stdout)");

    // hillclimb
    int hc_n = 0;
    long long hc_steps = 1000;
    std::uint64_t hc_seed = 1;
    SpecFlags hc_flags;
    SearchOptions hc_opts;
    auto* cmd_hc = app.add_subcommand("hillclimb", "local search probe beyond the enumeration budget");
    cmd_hc->add_option("--n", hc_n)->required();
    add_spec_flags(cmd_hc, hc_flags);
    cmd_hc->add_option("--steps", hc_steps);
    cmd_hc->add_option("--seed", hc_seed);
    cmd_hc->add_option("--tie-tol", hc_opts.tie_tol);
    cmd_hc->add_option("--tol", hc_opts.tol);

    std::vector<const char*> argv;
    argv.push_back("exlab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (construct->parsed()) {
            if (c_star->parsed()) {
                print_graph(star(star_k), format, out);
            } else if (c_forest->parsed()) {
                print_graph(star_forest(StarForestSpec(2, forest_ks)), format, out);
            } else if (c_turan->parsed()) {
                Graph g = turan_graph(turan_r, turan_n);
                std::vector<int> assign;
                std::vector<int> parts = turan_part_sizes(turan_r, turan_n);
                for (std::size_t i = 0; i < parts.size(); ++i)
                    assign.insert(assign.end(), parts[i], static_cast<int>(i));
                PartitionLabeling labeling(turan_r, assign);
                print_graph(g, format, out, &labeling);
            } else if (c_blowup->parsed()) {
                print_graph(edge_blowup(read_graph_arg(blowup_g6, in), blowup_p), format, out);
            } else if (c_ch->parsed()) {
                print_graph(chvatal_hanson_graph(ch_nu, ch_delta), format, out);
            } else if (c_ex->parsed()) {
                ExtremalFamilyMember m = extremal_family_layout(ex_n, ex_flags.spec());
                std::vector<int> assign(ex_n, 0);
                for (std::size_t i = 0; i < m.classes.size(); ++i)
                    for (int v = m.classes[i].find_first(); v >= 0; v = m.classes[i].find_next(v))
                        assign[v] = static_cast<int>(i);
                for (int v = m.clique.find_first(); v >= 0; v = m.clique.find_next(v))
                    assign[v] = static_cast<int>(m.classes.size());
                PartitionLabeling labeling(static_cast<int>(m.classes.size()) + 1, assign);
                print_graph(m.graph, format, out, &labeling);
            }
        } else if (cmd_rho->parsed()) {
            Graph g = read_graph_arg(rho_g6, in);
            SpectralResult r = spectral_radius(g, rho_tol);
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "rho = %.12g\nresidual = %.3g\ncertified_lower = %.12g\nconverged = %s\n",
                          r.rho, r.residual, r.certified_lower, r.converged ? "true" : "false");
            out << buf;
        } else if (cmd_quot->parsed()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g\n", quotient_rho(quot_clique, quot_parts, quot_tol));
            out << buf;
        } else if (cmd_free->parsed()) {
            Graph g = read_graph_arg(free_g6, in);
            out << emit_witness(find_blowup_star_forest(g, free_flags.spec())) << "\n";
        } else if (cmd_tn->parsed()) {
            TuranResult r = turan_number_bruteforce(tn_n, tn_flags.spec(), tn_opts);
            print_search_warning(r.warned, err);
            out << "ex = " << r.ex << "\n";
            for (const auto& g : r.extremal) out << encode_graph6(g) << "\n";
        } else if (cmd_se->parsed()) {
            SpectralExtremalResult r = spectral_extremal_bruteforce(se_n, se_flags.spec(), se_opts);
            print_search_warning(r.warned, err);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "rho_max = %.12g\n", r.rho_max);
            out << buf;
            for (const auto& g : r.extremal) out << encode_graph6(g) << "\n";
        } else if (cmd_ver->parsed()) {
            VerificationReport r = verify_theorem(ver_n, ver_flags.spec(), ver_opts);
            print_search_warning(r.warned, err);
            std::string json = emit_report(r);
            if (ver_json == "-") {
                out << json << "\n";
            } else {
                if (!ver_json.empty()) {
                    std::ofstream f(ver_json);
                    if (!f) throw ValidationError("cannot write " + ver_json);
                    f << json << "\n";
                }
                out << "n = " << r.n << " spec = " << r.spec.to_string() << "\n";
                out << "ex_brute = " << r.ex_brute << "  ex_formula = " << r.ex_formula_value
                    << "  formula_matches = " << (r.formula_matches ? "true" : "false") << "\n";
                char buf[64];
                std::snprintf(buf, sizeof(buf), "rho_max = %.12g\n", r.rho_max);
                out << buf;
                out << "extremal = " << r.extremal.size()
                    << "  spectral_extremal = " << r.spectral_extremal.size()
                    << "  containment_holds = " << (r.containment_holds ? "true" : "false")
                    << "\n";
            }
        } else if (cmd_hc->parsed()) {
            HillClimbResult r = hill_climb(hc_n, hc_flags.spec(), hc_steps, hc_seed, hc_opts);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "rho = %.12g\n", r.rho);
            out << encode_graph6(r.best) << "\n" << buf;
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace exlab
