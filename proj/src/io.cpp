#include "island/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace island {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

Json params_to_json(const ModelParams& params) {
    Json j;
    j["i"] = params.i;
    j["alpha_tilde"] = to_string(params.alpha_tilde);
    j["beta"] = to_string(params.beta);
    j["alpha"] = to_string(params.alpha);
    return j;
}

Json series_to_json(const TruncatedSeries& series) {
    Json arr = Json::array();
    for (int k = 0; k <= series.order(); ++k) arr.push_back(to_string(series[k]));
    return arr;
}

Json expansion_to_json(const CentreManifoldExpansion& expansion) {
    Json j;
    j["params"] = {{"i", expansion.i},
                   {"alpha", to_string(expansion.alpha)},
                   {"beta", to_string(expansion.beta)},
                   {"order", expansion.order}};
    Json series;
    for (const auto& [idx, s] : expansion.g) series["g" + std::to_string(idx)] = series_to_json(s);
    series["gw"] = series_to_json(expansion.g_w);
    j["series"] = series;
    j["reduced_ode"] = series_to_json(expansion.reduced);
    return j;
}

Json qssa_to_json(const QssaExpansion& expansion) {
    Json j;
    j["params"] = {{"i", expansion.i}, {"alpha", to_string(expansion.alpha)}, {"order", expansion.order}};
    Json closed;
    for (const auto& [idx, f] : expansion.closed_forms) {
        Json num = Json::array(), den = Json::array();
        for (const auto& c : f.numerator) num.push_back(to_string(c));
        for (const auto& c : f.denominator) den.push_back(to_string(c));
        closed["c" + std::to_string(idx)] = {{"numerator", num}, {"denominator", den}};
    }
    j["closed_forms"] = closed;
    Json series;
    for (const auto& [idx, s] : expansion.series) series["c" + std::to_string(idx)] = series_to_json(s);
    series["gw"] = series_to_json(expansion.g_w);
    j["series"] = series;
    j["reduced_ode"] = series_to_json(expansion.reduced);
    return j;
}

Json divergence_to_json(const DivergenceReport& report) {
    Json j;
    j["i"] = report.i;
    j["alpha"] = to_string(report.alpha);
    j["first_divergence_power"] = report.first_divergence;
    j["leading_terms_agree"] = report.leading_terms_agree;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"power", row.power},
                        {"cm_coeff", to_string(row.cm_coeff)},
                        {"qssa_coeff", to_string(row.qssa_coeff)},
                        {"equal", row.equal}});
    }
    j["table"] = rows;
    return j;
}

Json decomposition_to_json(const CompartmentDecomposition& decomposition) {
    Json j;
    j["i"] = decomposition.i;
    j["alpha"] = to_string(decomposition.alpha);
    Json state = Json::array();
    for (const auto& c : decomposition.state) state.push_back(to_string(c));
    j["state"] = state;
    j["input_1"] = to_string(decomposition.input_1);
    auto flow_entry = [&](const Flow& f) {
        return Json{{"from", f.from},
                    {"to", f.to},
                    {"monomial", f.monomial_str()},
                    {"value", to_string(f.rate(decomposition.state))},
                    {"weight_target", to_string(f.weight_target)},
                    {"weight_source", to_string(f.weight_source)}};
    };
    Json flows = Json::array();
    for (const auto& f : decomposition.flows) flows.push_back(flow_entry(f));
    j["flows"] = flows;
    Json outflows = Json::array();
    for (const auto& f : decomposition.outflows) outflows.push_back(flow_entry(f));
    j["outflows"] = outflows;
    Json rec = Json::array();
    for (const auto& d : decomposition.reconstruct()) rec.push_back(to_string(d));
    j["reconstructed_derivatives"] = rec;
    return j;
}

Json law_to_json(const AsymptoticLaw& law) {
    Json j;
    j["descriptor"] = law.descriptor;
    j["amplitude"] = format_double(law.amplitude);
    j["exponent"] = to_string(law.exponent);
    return j;
}

Json state_to_json(const TruncatedState& state) {
    Json j;
    j["T"] = format_double(state.time);
    Json c = Json::array();
    for (double v : state.c) c.push_back(format_double(v));
    j["c"] = c;
    j["overflow_count"] = format_double(state.overflow_count);
    j["overflow_mass"] = format_double(state.overflow_mass);
    return j;
}

std::string state_csv_row(const TruncatedState& state) {
    std::ostringstream out;
    out << format_double(state.time);
    for (double v : state.c) out << "," << format_double(v);
    out << "," << format_double(state.overflow_count) << "," << format_double(state.overflow_mass);
    return out.str();
}

std::string trajectory_csv(const TruncatedTrajectory& trajectory) {
    std::ostringstream out;
    const int n = trajectory.points.empty() ? 0 : trajectory.points.front().state.n_max();
    out << "T,rho,tau";
    for (int j = 1; j <= n; ++j) out << ",c_" << j;
    out << ",overflow_count,overflow_mass\n";
    for (const auto& pt : trajectory.points) {
        out << format_double(pt.state.time) << "," << format_double(pt.rho) << ","
            << format_double(pt.tau);
        for (double v : pt.state.c) out << "," << format_double(v);
        out << "," << format_double(pt.state.overflow_count) << ","
            << format_double(pt.state.overflow_mass) << "\n";
    }
    return out.str();
}

std::string observables_csv(const ModelParams& params, const TruncatedTrajectory& trajectory) {
    std::ostringstream out;
    out << "T,mass,number,v,w,z,tail_rate\n";
    for (const auto& pt : trajectory.points) {
        const Observables obs = observables(params, pt.state);
        out << format_double(pt.state.time) << "," << format_double(obs.mass) << ","
            << format_double(obs.number) << "," << format_double(obs.v) << ","
            << format_double(obs.w) << "," << format_double(obs.tail_number) << ","
            << format_double(obs.tail_rate) << "\n";
    }
    return out.str();
}

std::string snapshot_csv(const SimilaritySnapshot& snapshot) {
    std::ostringstream out;
    out << "j,eta,C_j,scaled,psi\n";
    for (const auto& row : snapshot.rows) {
        out << row.j << "," << format_double(row.eta) << "," << format_double(row.concentration)
            << "," << format_double(row.scaled) << "," << format_double(row.psi) << "\n";
    }
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << contents;
}

}  // namespace island
