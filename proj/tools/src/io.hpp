#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "sublorentz/sublorentzian.hpp"

namespace slio {

using nlohmann::json;
using namespace sublorentz;

/// Doubles that may be infinite are written as the strings "inf" / "-inf".
json number(double v);
double to_number(const json& j);

json to_json(const Mat2C& m);
Mat2C matrix_from_json(const json& j);

json to_json(const AlgCoords& c);
AlgCoords coords_from_json(const json& j);

json to_json(const DistanceBracket& b);
DistanceBracket bracket_from_json(const json& j);

json to_json(const CausalReport& r);
CausalReport report_from_json(const json& j);

json to_json(const HermiticityReport& r);
json to_json(const NonstrictReport& r);

/// Optional extra columns appended after the covector block.
struct ExtraColumns {
  bool det = false;
  /// Per-sample |<u,u> - target| of the control.
  std::vector<double> norm_residual;
};

/// Column layout: t, g11_re, g11_im, g12_re, g12_im, g21_re, g21_im, g22_re,
/// g22_im, u0..u6, psi0..psi6 (blank without covectors), then the extras.
/// `header` lines are written first, each prefixed by "# ".
void write_path_csv(std::ostream& os, const PathSample& p, const std::vector<std::string>& header,
                    const ExtraColumns& extra = {});
/// Reads the columns written by write_path_csv; comment lines and unknown
/// columns are skipped. Throws GeometryError(kParse) with the line number.
PathSample read_path_csv(std::istream& is);

/// 17 significant digits.
std::string format_double(double v);

/// Parses "a,b,c" into doubles; errors name the offending item and its
/// character offset.
std::vector<double> parse_list(const std::string& text, const std::string& what);

}  // namespace slio
