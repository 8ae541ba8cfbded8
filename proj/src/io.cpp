#include "omit/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "omit/errors.hpp"
#include "omit/version.hpp"

namespace omit {

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw validation_error({"format: must be 'csv' or 'json', got '" + s + "'"});
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw validation_error({"number: cannot parse '" + s + "'"});
  return v;
}

namespace {

std::string join_values(const std::vector<double>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ",";
    out += format_double(vals[i]);
  }
  return out;
}

std::vector<double> split_values(const std::string& s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) out.push_back(parse_double(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* kConventionNote =
    "re_n_r:absorption;im_n_r:dispersion (inverts the common naming)";

std::vector<std::string> column_names(const SweepSpec& spec) {
  if (spec.layout == "v-profile") return {"v", "delta_x", "drag_singular"};
  if (spec.layout == "drag-x") return {"varied_value", "x", "delta_x", "drag_singular"};
  std::vector<std::string> cols = {
      "varied_value", "x",
      "re_eps_T", "im_eps_T",
      "re_chi", "im_chi",
      "re_n_r", "im_n_r",
      "re_dchi_dx", "im_dchi_dx",
      "re_n_g", "im_n_g",
      "pole_limit"};
  if (spec.drag) {
    cols.push_back("delta_x");
    cols.push_back("drag_singular");
  }
  return cols;
}

std::vector<double> row_values(const SeriesResult& s, std::size_t i, const SweepSpec& spec) {
  const SpectrumPoint& p = s.points[i];
  if (spec.layout == "drag-x")
    return {s.varied_value, p.x, s.drag_x[i], s.drag_singular[i] ? 1.0 : 0.0};
  std::vector<double> row = {
      s.varied_value, p.x,
      p.eps_T.real(), p.eps_T.imag(),
      p.chi.real(), p.chi.imag(),
      p.n_r.real(), p.n_r.imag(),
      p.dchi_dx.real(), p.dchi_dx.imag(),
      p.n_g.real(), p.n_g.imag(),
      p.pole_limit ? 1.0 : 0.0};
  if (spec.drag) {
    row.push_back(s.drag_x[i]);
    row.push_back(s.drag_singular[i] ? 1.0 : 0.0);
  }
  return row;
}

}  // namespace

std::map<std::string, std::string> sweep_metadata(const SweepSpec& spec) {
  std::map<std::string, std::string> m = spec.extra_metadata;
  m["generator"] = kToolName;
  m["version"] = kVersion;
  m["unit_scale"] = spec.base.unit_scale;
  m["kappa"] = format_double(spec.base.kappa);
  m["omega_m"] = format_double(spec.base.omega_m);
  m["gamma_m"] = format_double(spec.base.gamma_m);
  m["beta"] = format_double(spec.base.beta);
  m["beta_mode"] = spec.beta_ideal ? "ideal" : "fixed";
  m["varied"] = to_string(spec.varied);
  m["values"] = join_values(spec.values);
  m["x_min"] = format_double(spec.x_grid.x_min);
  m["x_max"] = format_double(spec.x_grid.x_max);
  m["points"] = std::to_string(spec.x_grid.points);
  m["omega_probe"] = format_double(spec.omega_probe);
  m["drag_mode"] = to_string(spec.drag_mode);
  m["layout"] = spec.layout;
  m["column_convention"] = kConventionNote;
  if (!spec.preset_name.empty()) m["preset"] = spec.preset_name;
  if (spec.drag) {
    m["drag.v"] = format_double(spec.drag->v);
    m["drag.l"] = format_double(spec.drag->l);
    m["drag.c_light"] = format_double(spec.drag->c_light);
    m["drag.omega_probe"] = format_double(spec.drag->omega_probe);
    m["drag.sign_convention"] =
        "delta_x > 0 displaces the beam along +v; delta_x is odd in v";
  }
  return m;
}

SweepSpec sweep_from_metadata(const std::map<std::string, std::string>& meta) {
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = meta.find(key);
    if (it == meta.end()) throw validation_error({"metadata: missing key '" + key + "'"});
    return it->second;
  };

  SweepSpec spec;
  spec.base.unit_scale = need("unit_scale");
  spec.base.kappa = parse_double(need("kappa"));
  spec.base.omega_m = parse_double(need("omega_m"));
  spec.base.gamma_m = parse_double(need("gamma_m"));
  spec.base.beta = parse_double(need("beta"));
  spec.beta_ideal = need("beta_mode") == "ideal";
  spec.varied = varied_param_from_string(need("varied"));
  spec.values = split_values(need("values"));
  spec.x_grid.x_min = parse_double(need("x_min"));
  spec.x_grid.x_max = parse_double(need("x_max"));
  spec.x_grid.points = static_cast<std::size_t>(std::stoull(need("points")));
  spec.omega_probe = parse_double(need("omega_probe"));
  spec.drag_mode = need("drag_mode") == std::string("complex-then-real")
                       ? DragMode::ComplexThenReal
                       : DragMode::RealParts;
  spec.layout = need("layout");
  if (auto it = meta.find("preset"); it != meta.end()) spec.preset_name = it->second;
  if (meta.count("drag.v")) {
    DragConfig cfg;
    cfg.v = parse_double(need("drag.v"));
    cfg.l = parse_double(need("drag.l"));
    cfg.c_light = parse_double(need("drag.c_light"));
    cfg.omega_probe = parse_double(need("drag.omega_probe"));
    spec.drag = cfg;
  }

  // preserve unrecognised keys so a re-run echoes them verbatim
  static const char* known[] = {
      "generator", "version", "unit_scale", "kappa", "omega_m", "gamma_m", "beta",
      "beta_mode", "varied", "values", "x_min", "x_max", "points", "omega_probe",
      "drag_mode", "layout", "column_convention", "preset",
      "drag.v", "drag.l", "drag.c_light", "drag.omega_probe", "drag.sign_convention"};
  for (const auto& [k, v] : meta) {
    bool is_known = false;
    for (const char* kk : known) {
      if (k == kk) { is_known = true; break; }
    }
    if (!is_known) spec.extra_metadata[k] = v;
  }
  spec.validate();
  return spec;
}

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SeriesResult>& series) {
  for (const auto& [k, v] : sweep_metadata(spec)) {
    os << "# " << k << "=" << v << "\n";
  }
  const auto cols = column_names(spec);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";

  if (spec.layout == "v-profile") {
    const std::size_t mid = spec.x_grid.points / 2;
    for (const auto& s : series) {
      os << format_double(s.drag->v) << "," << format_double(s.drag_x[mid]) << ","
         << (s.drag_singular[mid] ? 1 : 0) << "\n";
    }
    return;
  }
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const auto row = row_values(s, i, spec);
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << format_double(row[c]);
      os << "\n";
    }
  }
}

void write_json(std::ostream& os, const SweepSpec& spec,
                const std::vector<SeriesResult>& series) {
  nlohmann::ordered_json doc;
  doc["generator"] = kToolName;
  doc["version"] = kVersion;
  doc["convention"] = kConventionNote;
  doc["metadata"] = sweep_metadata(spec);
  doc["columns"] = column_names(spec);

  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  const std::size_t mid = spec.x_grid.points / 2;
  for (const auto& s : series) {
    nlohmann::ordered_json js;
    js["varied_value"] = s.varied_value;
    js["params"] = {
        {"kappa", s.params.kappa},
        {"omega_m", s.params.omega_m},
        {"gamma_m", s.params.gamma_m},
        {"beta", s.params.beta},
        {"unit_scale", s.params.unit_scale},
    };
    if (s.drag) js["params"]["v"] = s.drag->v;
    js["columns"] = column_names(spec);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (spec.layout == "v-profile") {
      rows.push_back({s.drag->v, s.drag_x[mid], s.drag_singular[mid] ? 1 : 0});
    } else {
      for (std::size_t i = 0; i < s.points.size(); ++i)
        rows.push_back(row_values(s, i, spec));
    }
    js["rows"] = std::move(rows);
    all.push_back(std::move(js));
  }
  doc["series"] = std::move(all);
  os << doc.dump(1) << "\n";
}

std::string render_output(const SweepSpec& spec, const std::vector<SeriesResult>& series,
                          OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv)
    write_csv(os, spec, series);
  else
    write_json(os, spec, series);
  return os.str();
}

void write_output(const SweepSpec& spec, const std::vector<SeriesResult>& series,
                  OutputFormat format, const std::string& out_path) {
  const std::string body = render_output(spec, series, format);
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    if (!std::cout) throw io_error("cannot write to stdout");
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw io_error("cannot open '" + out_path + "' for writing");
  f << body;
  if (!f) throw io_error("write failed for '" + out_path + "'");
}

std::map<std::string, std::string> parse_metadata(std::istream& is) {
  std::map<std::string, std::string> meta;
  std::string line;
  if (!std::getline(is, line)) throw io_error("empty input");

  if (!line.empty() && line.front() == '{') {
    // JSON document: read the rest and pull the metadata object
    std::ostringstream rest;
    rest << line << "\n" << is.rdbuf();
    const auto doc = nlohmann::json::parse(rest.str());
    for (const auto& [k, v] : doc.at("metadata").items())
      meta[k] = v.get<std::string>();
    return meta;
  }

  do {
    if (line.empty() || line.front() != '#') break;
    std::size_t start = 1;
    while (start < line.size() && line[start] == ' ') ++start;
    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos) continue;
    meta[line.substr(start, eq - start)] = line.substr(eq + 1);
  } while (std::getline(is, line));
  return meta;
}

std::map<std::string, std::string> parse_metadata_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open '" + path + "' for reading");
  return parse_metadata(f);
}

}  // namespace omit
