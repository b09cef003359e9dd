#ifndef K3_SERIALIZE_HPP
#define K3_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "k3/families.hpp"
#include "k3/kodaira.hpp"
#include "k3/modulipath.hpp"
#include "k3/weierstrass.hpp"

// File formats. Complex numbers serialize as 2-element arrays of decimal
// strings (shortest round-trip for doubles, "p/q" rationals in exact mode) so
// reports diff stably across platforms.

namespace k3::io {

using json = nlohmann::json;

std::string format_double(double x);   // shortest round-trip decimal
double parse_double(const std::string& s);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j);

json weierstrass_to_json(const WeierstrassData& w);
WeierstrassData weierstrass_from_json(const json& j);

json fibre_report_to_json(const FibreReport& r);
json validation_to_json(const FamilyValidation& v);

json sample_to_json(const ModuliPathSample& s);
std::string path_to_jsonl(const PathReport& r);
json path_summary_to_json(const PathReport& r);

json error_to_json(const Error& e);

// Scatter plot of the fibre trajectories of a path in the complex plane.
std::string path_to_svg(const PathReport& r, int width = 720, int height = 720);

}  // namespace k3::io

#endif
