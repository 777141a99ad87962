#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace slio {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw GeometryError(ErrorCode::kParse, what); }

json vec3(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) parse_error(std::string(name) + ": expected 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

const char* kMatrixColumns[8] = {"g11_re", "g11_im", "g12_re", "g12_im", "g21_re", "g21_im", "g22_re", "g22_im"};

CausalClass class_from_string(const std::string& s) {
  for (CausalClass c : {CausalClass::kIdentity, CausalClass::kTimelike, CausalClass::kIsotropic,
                        CausalClass::kUnreachable, CausalClass::kIndeterminate}) {
    if (s == to_string(c)) return c;
  }
  parse_error("unknown causal class '" + s + "'");
}

}  // namespace

json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double to_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  parse_error("expected a number, got " + j.dump());
}

json to_json(const Mat2C& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return json{{"m", rows}};
}

Mat2C matrix_from_json(const json& j) {
  const json& m = j.is_object() && j.contains("m") ? j.at("m") : j;
  if (!m.is_array() || m.size() != 2) parse_error("matrix: expected {\"m\": [[[re,im],[re,im]],[[re,im],[re,im]]]}");
  cplx e[4];
  for (int r = 0; r < 2; ++r) {
    if (!m[r].is_array() || m[r].size() != 2) parse_error("matrix: row " + std::to_string(r) + " must have 2 entries");
    for (int c = 0; c < 2; ++c) {
      const json& v = m[r][c];
      if (v.is_number()) {
        e[2 * r + c] = v.get<double>();
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        e[2 * r + c] = cplx{v[0].get<double>(), v[1].get<double>()};
      } else {
        parse_error("matrix: entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
      }
    }
  }
  return {e[0], e[1], e[2], e[3]};
}

json to_json(const AlgCoords& c) { return json{{"u", c.u}}; }

AlgCoords coords_from_json(const json& j) {
  const json& u = j.at("u");
  if (!u.is_array() || u.size() != 8) parse_error("coords: expected 8 numbers");
  AlgCoords c;
  for (int i = 0; i < 8; ++i) c[i] = u[static_cast<std::size_t>(i)].get<double>();
  return c;
}

json to_json(const DistanceBracket& b) {
  return json{{"lower", number(b.lower)},
              {"upper", number(b.upper)},
              {"feasible", b.feasible},
              {"converged", b.converged},
              {"solves", b.solves},
              {"witness", {{"alpha", vec3(b.witness.alpha)}, {"beta", vec3(b.witness.beta)}, {"T", b.witness.T}}},
              {"near_optimal", b.near_optimal}};
}

DistanceBracket bracket_from_json(const json& j) {
  DistanceBracket b;
  b.lower = to_number(j.at("lower"));
  b.upper = to_number(j.at("upper"));
  b.feasible = j.at("feasible").get<bool>();
  b.converged = j.at("converged").get<bool>();
  b.solves = j.value("solves", 0);
  const json& w = j.at("witness");
  b.witness.alpha = vec3_from(w.at("alpha"), "witness.alpha");
  b.witness.beta = vec3_from(w.at("beta"), "witness.beta");
  b.witness.T = w.at("T").get<double>();
  if (j.contains("near_optimal")) b.near_optimal = j.at("near_optimal").get<std::vector<double>>();
  return b;
}

json to_json(const CausalReport& r) {
  json d;
  switch (r.distance.kind) {
    case SLDistance::Kind::kFinite: d = r.distance.value; break;
    case SLDistance::Kind::kMinusInfinity: d = "-inf"; break;
    case SLDistance::Kind::kUnknown: d = nullptr; break;
  }
  return json{{"xi", r.xi},
              {"class", to_string(r.cls)},
              {"distance", d},
              {"distance_bracket", json::array({r.distance_lower, r.distance_upper})},
              {"c_param", r.c_param ? json(*r.c_param) : json(nullptr)},
              {"extrapolated", r.extrapolated},
              {"exact_eta", r.exact_eta},
              {"eta", to_json(r.eta)}};
}

CausalReport report_from_json(const json& j) {
  CausalReport r;
  r.xi = j.at("xi").get<double>();
  r.cls = class_from_string(j.at("class").get<std::string>());
  const json& d = j.at("distance");
  if (d.is_null()) {
    r.distance = SLDistance::unknown();
  } else if (d.is_string() && d.get<std::string>() == "-inf") {
    r.distance = SLDistance::minus_infinity();
  } else if (d.is_number()) {
    r.distance = SLDistance::finite(d.get<double>());
  } else {
    parse_error("report: bad distance " + d.dump());
  }
  const json& db = j.at("distance_bracket");
  r.distance_lower = db.at(0).get<double>();
  r.distance_upper = db.at(1).get<double>();
  if (!j.at("c_param").is_null()) r.c_param = j.at("c_param").get<double>();
  r.extrapolated = j.at("extrapolated").get<bool>();
  r.exact_eta = j.value("exact_eta", false);
  r.eta = bracket_from_json(j.at("eta"));
  return r;
}

json to_json(const HermiticityReport& r) {
  return json{{"case", to_string(r.which)},
              {"hermitian", r.which != HermitianCase::kNotHermitian},
              {"x", r.x},
              {"y", r.y},
              {"beta", r.beta},
              {"defect", r.residual},
              {"identity_residual", r.identity_residual},
              {"condition_margin", number(r.condition_margin)}};
}

json to_json(const NonstrictReport& r) {
  json j{{"nonstrict", r.nonstrict},
         {"control", to_json(r.control)},
         {"control_deviation", r.control_deviation},
         {"regime", r.regime ? json(to_string(*r.regime)) : json(nullptr)},
         {"covector", r.covector ? json(*r.covector) : json(nullptr)},
         {"covector_residual", r.covector_residual}};
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_path_csv(std::ostream& os, const PathSample& p, const std::vector<std::string>& header,
                    const ExtraColumns& extra) {
  for (const std::string& h : header) os << "# " << h << '\n';
  os << 't';
  for (const char* c : kMatrixColumns) os << ',' << c;
  for (int i = 0; i < 7; ++i) os << ",u" << i;
  for (int i = 0; i < 7; ++i) os << ",psi" << i;
  if (extra.det) os << ",det_re,det_im";
  if (!extra.norm_residual.empty()) os << ",norm_residual";
  os << '\n';

  const bool has_psi = p.covectors.size() == p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << format_double(p.times[i]);
    for (const cplx& e : p.points[i].entries()) os << ',' << format_double(e.real()) << ',' << format_double(e.imag());
    for (int k = 0; k < 7; ++k) os << ',' << format_double(p.controls[i][k]);
    for (int k = 0; k < 7; ++k) {
      os << ',';
      if (has_psi) os << format_double(p.covectors[i].psi[static_cast<std::size_t>(k)]);
    }
    if (extra.det) {
      const cplx d = p.points[i].det();
      os << ',' << format_double(d.real()) << ',' << format_double(d.imag());
    }
    if (!extra.norm_residual.empty()) os << ',' << format_double(extra.norm_residual.at(i));
    os << '\n';
  }
}

PathSample read_path_csv(std::istream& is) {
  PathSample p;
  std::string line;
  std::map<std::string, std::size_t> col;
  int lineno = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  auto field = [&](const std::vector<std::string>& cells, const std::string& name, bool& present) {
    present = false;
    const auto it = col.find(name);
    if (it == col.end() || it->second >= cells.size() || cells[it->second].empty()) return 0.0;
    const std::string& s = cells[it->second];
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      parse_error("csv line " + std::to_string(lineno) + ": bad number '" + s + "' in column " + name);
    }
    present = true;
    return v;
  };

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line);
    if (col.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) col[cells[i]] = i;
      for (const char* c : kMatrixColumns)
        if (!col.count(c)) parse_error(std::string("csv header lacks column ") + c);
      if (!col.count("t")) parse_error("csv header lacks column t");
      continue;
    }
    bool ok = false;
    const double t = field(cells, "t", ok);
    if (!ok) parse_error("csv line " + std::to_string(lineno) + ": missing t");
    double m[8];
    for (int k = 0; k < 8; ++k) {
      m[k] = field(cells, kMatrixColumns[k], ok);
      if (!ok) parse_error("csv line " + std::to_string(lineno) + ": missing " + kMatrixColumns[k]);
    }
    AlgCoords u;
    for (int k = 0; k < 7; ++k) u[k] = field(cells, "u" + std::to_string(k), ok);
    CovectorState psi;
    bool any_psi = false;
    for (int k = 0; k < 7; ++k) {
      psi.psi[static_cast<std::size_t>(k)] = field(cells, "psi" + std::to_string(k), ok);
      any_psi = any_psi || ok;
    }
    p.times.push_back(t);
    p.points.emplace_back(cplx{m[0], m[1]}, cplx{m[2], m[3]}, cplx{m[4], m[5]}, cplx{m[6], m[7]});
    p.controls.push_back(u);
    if (any_psi) p.covectors.push_back(psi);
  }
  if (!p.covectors.empty() && p.covectors.size() != p.size()) parse_error("csv: covector columns are partially blank");
  return p;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    const std::size_t lead = item.find_first_not_of(" \t");
    const std::size_t trail = item.find_last_not_of(" \t");
    const std::size_t offset = pos + (lead == std::string::npos ? 0 : lead);
    item = lead == std::string::npos ? std::string() : item.substr(lead, trail - lead + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      parse_error(what + ": item " + std::to_string(out.size() + 1) + " ('" + item + "') at position " +
                  std::to_string(offset) + " is not a number");
    }
    if (!std::isfinite(v)) {
      throw GeometryError(ErrorCode::kNonFinite, what + ": item " + std::to_string(out.size() + 1) + " is not finite");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace slio
