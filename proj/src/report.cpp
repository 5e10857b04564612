#include "exlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "exlab/graph6.hpp"

namespace exlab {

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string real12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string g6_array(const std::vector<Graph>& graphs) {
    std::string out = "[";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i) out += ",";
        out += "\"" + json_escape(encode_graph6(graphs[i])) + "\"";
    }
    return out + "]";
}

std::string int_array(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

const char* boolean(bool b) { return b ? "true" : "false"; }

} // namespace

std::string emit_dot(const Graph& g, const PartitionLabeling* labeling) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (labeling)
            os << " [style=filled fillcolor=\"" << kPalette[labeling->assign[v] % 8] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string emit_report(const VerificationReport& r) {
    std::string ks = "[";
    for (std::size_t i = 0; i < r.spec.ks.size(); ++i) {
        if (i) ks += ",";
        ks += std::to_string(r.spec.ks[i]);
    }
    ks += "]";

    std::string cons = "{\"feasible\":" + std::string(boolean(r.construction.feasible));
    if (r.construction.feasible) {
        cons += ",\"edges\":" + std::to_string(r.construction.edges);
        cons += ",\"free\":" + std::string(boolean(r.construction.is_spec_free));
        cons += ",\"chen_gap\":" + std::to_string(r.construction.chen_gap_value);
        cons += ",\"chen_hypotheses\":" + std::string(boolean(r.construction.chen_hypotheses_hold));
        cons += ",\"part_sizes\":" + int_array(r.construction.part_sizes);
    }
    cons += "}";

    std::string exsp_diag = "[";
    for (std::size_t i = 0; i < r.exsp_diagnostics.size(); ++i) {
        const auto& d = r.exsp_diagnostics[i];
        if (i) exsp_diag += ",";
        exsp_diag += "{\"part_sizes\":" + int_array(d.part_sizes);
        exsp_diag += ",\"crossing\":" + std::to_string(d.crossing);
        exsp_diag += ",\"chen_gap\":" + std::to_string(d.chen_gap_value) + "}";
    }
    exsp_diag += "]";

    std::string out = "{";
    out += "\"n\":" + std::to_string(r.n);
    out += ",\"p\":" + std::to_string(r.spec.p);
    out += ",\"ks\":" + ks;
    out += ",\"ex_brute\":" + std::to_string(r.ex_brute);
    out += ",\"ex_formula\":" + std::to_string(r.ex_formula_value);
    out += ",\"extremal_g6\":" + g6_array(r.extremal);
    out += ",\"rho_max\":" + real12(r.rho_max);
    out += ",\"exsp_g6\":" + g6_array(r.spectral_extremal);
    out += ",\"containment_holds\":" + std::string(boolean(r.containment_holds));
    out += ",\"formula_matches\":" + std::string(boolean(r.formula_matches));
    out += ",\"diagnostics\":{";
    out += "\"rho_minus_linear\":" + real12(r.rho_minus_linear);
    out += ",\"rho_max_residual\":" + real12(r.rho_residual);
    out += ",\"rho_max_certified_lower\":" + real12(r.rho_certified_lower);
    out += ",\"construction\":" + cons;
    out += ",\"spectral_extremal\":" + exsp_diag;
    out += ",\"visited\":" + std::to_string(r.visited);
    out += ",\"enumeration_warning\":" + std::string(boolean(r.warned));
    out += "}";
    out += ",\"runtime_ms\":" + std::to_string(r.runtime_ms);
    out += "}";
    return out;
}

std::string emit_witness(const std::optional<Witness>& w) {
    if (!w) return "{\"free\":true}";
    std::string out = "{\"free\":false,\"witness\":{\"centers\":[";
    for (std::size_t i = 0; i < w->centers.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w->centers[i]);
    }
    out += "],\"cliques\":[";
    for (std::size_t i = 0; i < w->cliques.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < w->cliques[i].size(); ++j) {
            if (j) out += ",";
            out += int_array(w->cliques[i][j]);
        }
        out += "]";
    }
    return out + "]}}";
}

} // namespace exlab
