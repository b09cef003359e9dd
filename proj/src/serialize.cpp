#include "k3/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace k3::io {

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

bool looks_rational(const std::string& s) { return s.find('/') != std::string::npos; }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc()) throw Error("cli", "parse", "bad decimal value: " + s);
    return v;
}

json complex_to_json(Complex z) { return json::array({format_double(z.real()), format_double(z.imag())}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("cli", "parse", "complex values are [re, im] string pairs");
    return {parse_double(j[0].get<std::string>()), parse_double(j[1].get<std::string>())};
}

json form_to_json(const BinaryForm& f) {
    json coeffs = json::array();
    if (f.is_exact()) {
        for (const auto& c : f.exact_coeffs())
            coeffs.push_back(json::array({rational_to_string(c.re), rational_to_string(c.im)}));
    } else {
        for (const auto& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
    }
    return json{{"degree", f.degree()}, {"exact", f.is_exact()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const json& j) {
    int degree = j.at("degree").get<int>();
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != degree + 1)
        throw Error("cli", "parse", "form needs degree+1 coefficients");
    bool exact = j.value("exact", false);
    if (!exact) {
        for (const auto& c : coeffs) {
            if (c.is_array() && c.size() == 2 && c[0].is_string() &&
                looks_rational(c[0].get<std::string>())) {
                exact = true;
                break;
            }
        }
    }
    if (exact) {
        std::vector<RationalComplex> cs;
        for (const auto& c : coeffs)
            cs.emplace_back(rational_from_string(c[0].get<std::string>()),
                            rational_from_string(c[1].get<std::string>()));
        return BinaryForm(std::move(cs));
    }
    std::vector<Complex> cs;
    for (const auto& c : coeffs) cs.push_back(complex_from_json(c));
    return BinaryForm(std::move(cs));
}

json weierstrass_to_json(const WeierstrassData& w) {
    return json{{"A", form_to_json(w.A())}, {"B", form_to_json(w.B())}};
}

WeierstrassData weierstrass_from_json(const json& j) {
    return {form_from_json(j.at("A")), form_from_json(j.at("B"))};
}

namespace {

json point_to_json(const ProjPoint& p) {
    ProjPoint q = p.normalized();
    return json::array({complex_to_json(q.p0()), complex_to_json(q.p1())});
}

std::string order_to_string(int order) {
    return order == order_infinity ? std::string("inf") : std::to_string(order);
}

}  // namespace

json fibre_report_to_json(const FibreReport& r) {
    json fibres = json::array();
    for (const auto& f : r.fibres) {
        fibres.push_back(json{{"position", point_to_json(f.position)},
                              {"orders",
                               {{"A", order_to_string(f.ord_a)},
                                {"B", order_to_string(f.ord_b)},
                                {"delta", f.ord_delta}}},
                              {"type", f.type.name()},
                              {"euler", f.euler},
                              {"rdp", f.rdp.name()}});
    }
    return json{{"fibres", fibres},
                {"total_euler", r.total_euler},
                {"surface_smooth", r.surface_smooth},
                {"minimal", r.minimal}};
}

json validation_to_json(const FamilyValidation& v) {
    std::string pattern;
    switch (v.pattern) {
        case FamilyPattern::NodalSmooth24: pattern = "nodal_smooth_24"; break;
        case FamilyPattern::Cuspidal12: pattern = "cuspidal_12"; break;
        case FamilyPattern::Degenerate: pattern = "degenerate"; break;
    }
    json roots = json::array();
    for (const auto& r : v.roots)
        roots.push_back(json{{"position", point_to_json(r.point)}, {"mult", r.multiplicity}});
    return json{{"pattern", pattern}, {"min_separation", format_double(v.min_separation)}, {"roots", roots}};
}

json sample_to_json(const ModuliPathSample& s) {
    json a = json::array();
    for (Complex z : s.params.a) a.push_back(complex_to_json(z));
    json fibres = json::array();
    for (const auto& f : s.fibres)
        fibres.push_back(json{{"pos", complex_to_json(f.position)}, {"mult", f.multiplicity}});
    return json{{"t", s.t},          {"K", complex_to_json(s.params.K)}, {"a", a},
                {"fibres", fibres},  {"m", s.m},                         {"provenance", s.provenance}};
}

std::string path_to_jsonl(const PathReport& r) {
    std::string out;
    for (const auto& s : r.samples) {
        out += sample_to_json(s).dump();
        out += '\n';
    }
    return out;
}

json path_summary_to_json(const PathReport& r) {
    return json{{"samples", r.samples.size()},
                {"continuous", r.continuous},
                {"endpoint_match", r.endpoint_match},
                {"endpoint_residual", format_double(r.endpoint_residual)},
                {"invariant_violations", r.invariant_violations}};
}

json error_to_json(const Error& e) {
    return json{{"error", {{"module", e.module_name()}, {"op", e.op_name()}, {"message", e.what()}}}};
}

std::string path_to_svg(const PathReport& r, int width, int height) {
    double lo_x = -1.4, hi_x = 1.4, lo_y = -1.4, hi_y = 1.4;
    for (const auto& s : r.samples)
        for (const auto& f : s.fibres) {
            lo_x = std::min(lo_x, f.position.real() - 0.1);
            hi_x = std::max(hi_x, f.position.real() + 0.1);
            lo_y = std::min(lo_y, f.position.imag() - 0.1);
            hi_y = std::max(hi_y, f.position.imag() + 0.1);
        }
    auto map_x = [&](double x) { return (x - lo_x) / (hi_x - lo_x) * width; };
    auto map_y = [&](double y) { return height - (y - lo_y) / (hi_y - lo_y) * height; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << map_x(lo_x) << "\" y1=\"" << map_y(0) << "\" x2=\"" << map_x(hi_x) << "\" y2=\""
        << map_y(0) << "\" stroke=\"#ddd\"/>\n";
    svg << "<line x1=\"" << map_x(0) << "\" y1=\"" << map_y(lo_y) << "\" x2=\"" << map_x(0) << "\" y2=\""
        << map_y(hi_y) << "\" stroke=\"#ddd\"/>\n";

    size_t stride = std::max<size_t>(1, r.samples.size() / 400);
    for (size_t i = 0; i < r.samples.size(); i += stride) {
        const auto& s = r.samples[i];
        for (size_t j = 0; j < s.fibres.size(); ++j) {
            bool carries = j < s.m.size() && s.m[j] > 0;
            const char* color = carries ? "#d62728" : (j < 12 ? "#1f77b4" : "#7f7f7f");
            svg << "<circle cx=\"" << map_x(s.fibres[j].position.real()) << "\" cy=\""
                << map_y(s.fibres[j].position.imag()) << "\" r=\"" << (carries ? 2.2 : 1.2)
                << "\" fill=\"" << color << "\" fill-opacity=\"0.45\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace k3::io
