#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "k3/serialize.hpp"

namespace {

using k3::io::json;

unsigned env_seed() {
    const char* s = std::getenv("K3LAB_SEED");
    if (!s) return 0;
    return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw k3::Error("cli", "run", "cannot open output file: " + path);
    out << content;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw k3::Error("cli", "run", "cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

std::vector<k3::Complex> parse_points(const json& j) {
    const json& arr = j.is_object() ? j.at("a") : j;
    std::vector<k3::Complex> pts;
    for (const auto& e : arr) pts.push_back(k3::io::complex_from_json(e));
    return pts;
}

// Cycle notation "(1 2)(3 4)" (1-based) or a comma list of images.
std::vector<int> parse_sigma(const std::string& text) {
    std::vector<int> sigma(12);
    for (int i = 0; i < 12; ++i) sigma[static_cast<size_t>(i)] = i;
    if (text.find('(') == std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',') && i < 12) sigma[static_cast<size_t>(i++)] = std::stoi(tok) - 1;
        return sigma;
    }
    size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        size_t end = text.find(')', pos);
        if (end == std::string::npos) throw k3::Error("cli", "parse", "unbalanced cycle notation");
        std::stringstream ss(text.substr(pos + 1, end - pos - 1));
        std::vector<int> cycle;
        int v;
        while (ss >> v) {
            if (v < 1 || v > 12) throw k3::Error("cli", "parse", "cycle entries must lie in 1..12");
            cycle.push_back(v - 1);
        }
        for (size_t i = 0; i < cycle.size(); ++i)
            sigma[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        pos = end + 1;
    }
    return sigma;
}

std::vector<int> parse_multiplicities(const std::string& text) {
    std::vector<int> m;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) m.push_back(std::stoi(tok));
    m.resize(12, 0);
    return m;
}

int classify_exit(const k3::Error& e) {
    const std::string& op = e.op_name();
    if (op == "roots_with_multiplicity" || op == "track_beta" || op == "permutation_path" ||
        op == "node_transfer_path" || op == "beta_fibres")
        return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic K3 surfaces in Weierstrass form: fibres, curves, moduli paths"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string input, output, format = "json", sigma_text, m_text, path_kind = "connect";
    double tol = 1e-8, sep = 1e-6, K = 0.25;
    int steps = 256, gmax = 5, g = 3, k = 1, l = 1, h = -1, fibres = 12;
    bool quartic = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file");
        cmd->add_option("--output", output, "output file (default stdout)");
        cmd->add_option("--format", format, "json|jsonl|csv|svg");
        cmd->add_option("--tol", tol, "numeric tolerance");
    };

    CLI::App* c_analyze = app.add_subcommand("analyze", "classify the singular fibres of Weierstrass data");
    add_io(c_analyze);

    CLI::App* c_family = app.add_subcommand("family", "build the cuspidal (K=0) or nodal family");
    add_io(c_family);
    c_family->add_option("--K", K, "family parameter K (0 gives the cuspidal family)")->default_val(0.0);

    CLI::App* c_enum = app.add_subcommand("enumerate", "stream the rational members of |S+gE|");
    add_io(c_enum);
    c_enum->add_option("--g", g, "genus");
    c_enum->add_option("--fibres", fibres, "number of singular fibres (ignored with --input)");

    CLI::App* c_count = app.add_subcommand("count", "Yau-Zaslow counts n_0..n_gmax");
    add_io(c_count);
    c_count->add_option("--gmax", gmax, "largest genus");

    CLI::App* c_severi = app.add_subcommand("severi", "Severi dimensions and node counts");
    add_io(c_severi);
    c_severi->add_option("--g", g, "K3 genus");
    c_severi->add_option("--k", k, "multiple of the polarization");
    c_severi->add_option("--h", h, "geometric genus (omit for the full table)");
    c_severi->add_option("--l", l, "quartic table degree (with --quartic)");
    c_severi->add_flag("--quartic", quartic, "genus-3 quartic constants for l=1,2");

    CLI::App* c_trace = app.add_subcommand("trace", "trace a moduli path");
    add_io(c_trace);
    c_trace->add_option("--path", path_kind, "beta|perm|cusp|transfer|connect");
    c_trace->add_option("--K", K, "transfer parameter, real in (0,1/2)");
    c_trace->add_option("--steps", steps, "samples per leg");
    c_trace->add_option("--sep", sep, "minimum fibre separation");
    c_trace->add_option("--sigma", sigma_text, "permutation in cycle notation, e.g. \"(1 2)(3 4)\"");
    c_trace->add_option("--m", m_text, "multiplicities, e.g. \"2,1\" (padded with zeros)");
    c_trace->add_option("--g", g, "genus (used when --m is omitted: m = (g,0,...))");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_family->parsed()) {
            std::vector<k3::Complex> a;
            if (!input.empty()) {
                a = parse_points(read_json_file(input));
            } else {
                a = k3::unity_roots();
            }
            k3::WeierstrassData w = (K == 0.0) ? k3::cuspidal_family(a) : k3::nodal_family(a, K);
            json out = k3::io::weierstrass_to_json(w);
            out["validation"] = k3::io::validation_to_json(k3::validate_family(w, tol));
            write_output(output, out.dump(2) + "\n");
        } else if (c_analyze->parsed()) {
            if (input.empty()) throw k3::Error("cli", "analyze", "--input is required");
            k3::WeierstrassData w = k3::io::weierstrass_from_json(read_json_file(input));
            k3::FibreReport r = k3::fibre_report(w, tol);
            write_output(output, k3::io::fibre_report_to_json(r).dump(2) + "\n");
        } else if (c_enum->parsed()) {
            if (!input.empty()) {
                k3::WeierstrassData w = k3::io::weierstrass_from_json(read_json_file(input));
                fibres = static_cast<int>(k3::fibre_report(w, tol).fibres.size());
            }
            std::ostringstream lines;
            k3::BigInt count = k3::enumerate_rational_members(g, fibres, [&](const k3::CurveConfig& cfg) {
                json line = json{{"g", cfg.genus}, {"m", cfg.multiplicities}};
                lines << line.dump() << "\n";
            });
            write_output(output.empty() ? "-" : output, lines.str());
            std::cout << json{{"g", g}, {"fibres", fibres}, {"count", count.str()}}.dump() << "\n";
        } else if (c_count->parsed()) {
            std::vector<k3::BigInt> n = k3::yau_zaslow(gmax);
            std::ostringstream csv;
            csv << "g,n_g\n";
            for (size_t i = 0; i < n.size(); ++i) csv << i << "," << n[i].str() << "\n";
            write_output(output, csv.str());
        } else if (c_severi->parsed()) {
            if (quartic) {
                k3::QuarticSeveriNumbers q = k3::quartic_severi_numbers(l);
                write_output(output, json{{"l", l},
                                          {"dim_W_S", q.dim_w_s},
                                          {"kernel_dim", q.kernel_dim},
                                          {"fibre_dim", q.fibre_dim}}
                                             .dump(2) +
                                         "\n");
            } else {
                k3::VeryAmpleBound va = k3::very_ample_and_bound(g, k);
                json table = json::array();
                k3::SeveriQuery q{g, k, 0};
                long long pa = q.arithmetic_genus();
                int lo = (h >= 0) ? h : 0;
                long long hi = (h >= 0) ? h : pa;
                for (long long hh = lo; hh <= hi; ++hh) {
                    k3::SeveriNumbers sn = k3::severi_numbers({g, k, static_cast<int>(hh)});
                    table.push_back(json{{"h", hh}, {"dimension", sn.dimension}, {"node_count", sn.node_count}});
                }
                if (format == "csv") {
                    std::ostringstream csv;
                    csv << "h,dimension,node_count\n";
                    for (const auto& row : table)
                        csv << row["h"] << "," << row["dimension"] << "," << row["node_count"] << "\n";
                    write_output(output, csv.str());
                } else {
                    write_output(output, json{{"g", g},
                                              {"k", k},
                                              {"arithmetic_genus", pa},
                                              {"k_very_ample_level", va.k_very_ample_level},
                                              {"h_min_irreducible", va.h_min_irreducible},
                                              {"table", table}}
                                                 .dump(2) +
                                             "\n");
                }
            }
        } else if (c_trace->parsed()) {
            k3::PathOptions opts;
            opts.sep_eps = sep;
            opts.seed = env_seed();
            k3::PathReport report;
            if (path_kind == "beta") {
                std::vector<k3::Complex> kpath;
                for (int i = 0; i <= steps; ++i)
                    kpath.push_back(k3::Complex(K * (1.0 - static_cast<double>(i) / steps), 0.0));
                std::vector<k3::Complex> beta = k3::track_beta(kpath, k3::Complex(std::pow(1.0 - 2.0 * K, 1.0 / 12.0), 0.0));
                std::ostringstream lines;
                for (size_t i = 0; i < beta.size(); ++i)
                    lines << json{{"t", static_cast<double>(i) / steps},
                                  {"K", k3::io::complex_to_json(kpath[i])},
                                  {"beta", k3::io::complex_to_json(beta[i])}}
                                 .dump()
                          << "\n";
                write_output(output, lines.str());
                return 0;
            }
            std::vector<int> m = m_text.empty() ? std::vector<int>{} : parse_multiplicities(m_text);
            if (m.empty()) {
                m.assign(12, 0);
                m[0] = g;
            }
            if (path_kind == "perm") {
                report = k3::permutation_path(k3::unity_roots(), parse_sigma(sigma_text), m, k3::Complex(K, 0.0),
                                              steps, opts);
            } else if (path_kind == "cusp") {
                report = k3::cusp_limit_path(k3::unity_roots(), m, K, steps, opts);
            } else if (path_kind == "transfer") {
                report = k3::node_transfer_path(m, K, steps, opts);
            } else if (path_kind == "connect") {
                report = k3::connect_to_canonical(m, K, steps, opts);
            } else {
                throw k3::Error("cli", "trace", "unknown --path kind: " + path_kind);
            }
            if (format == "svg") {
                write_output(output, k3::io::path_to_svg(report));
            } else {
                write_output(output, k3::io::path_to_jsonl(report));
            }
            std::cout << k3::io::path_summary_to_json(report).dump() << "\n";
            if (!report.invariant_violations.empty()) return 2;
        }
    } catch (const k3::Error& e) {
        std::cerr << k3::io::error_to_json(e).dump() << "\n";
        return classify_exit(e);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"module", "cli"}, {"op", "run"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
