#include "shiftlab/json_io.hpp"

#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

Rational rat(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string("expected a \"p/q\" string for ") + what);
  return Rational::parse(j.get<std::string>());
}

json grid_to_json(const WeightDiagram& d, bool xgrid) {
  json rows = json::array();
  for (int k2 = 0; k2 < d.height(); ++k2) {
    json row = json::array();
    for (int k1 = 0; k1 < d.width(); ++k1)
      row.push_back(xgrid ? d.x({k1, k2}).str() : d.y({k1, k2}).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Rational>> grid_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string("diagram field ") + what + " must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array()) throw InputError(std::string("diagram field ") + what + " must contain arrays");
    std::vector<Rational> row;
    for (const auto& v : jr) row.push_back(rat(v, what));
    rows.push_back(std::move(row));
  }
  return rows;
}

Window window_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InputError("\"window\" must be [N1, N2]");
  return {j[0].get<int>(), j[1].get<int>()};
}

void check_matches_file_grids(const WeightDiagram& d, const json& j) {
  if (!j.contains("x") && !j.contains("y")) return;
  auto xs = grid_from_json(j.at("x"), "x");
  auto ys = grid_from_json(j.at("y"), "y");
  if (static_cast<int>(xs.size()) != d.height())
    throw InputError("diagram file: stored grids disagree with the generator parameters");
  for (int k2 = 0; k2 < d.height(); ++k2)
    for (int k1 = 0; k1 < d.width(); ++k1) {
      if (static_cast<int>(xs[static_cast<size_t>(k2)].size()) != d.width())
        throw InputError("diagram file: stored grids disagree with the generator parameters");
      if (xs[static_cast<size_t>(k2)][static_cast<size_t>(k1)] != d.x({k1, k2}) ||
          ys[static_cast<size_t>(k2)][static_cast<size_t>(k1)] != d.y({k1, k2}))
        throw InputError("diagram file: stored grids disagree with the generator parameters at (" +
                         std::to_string(k1) + "," + std::to_string(k2) + ")");
    }
}

}  // namespace

json diagram_to_json(const WeightDiagram& d) {
  json j;
  json params = json::object();
  std::string kind = "explicit";
  if (auto fp = flat_params_behind(d)) {
    kind = "flat_above_row_zero";
    params["a"] = fp->a.str();
    params["y00"] = fp->y00.str();
    params["C"] = fp->C.str();
  } else if (auto cp = constant_params_behind(d)) {
    kind = "constant";
    params["x"] = cp->x.str();
    params["y"] = cp->y.str();
  } else if (auto tp = ts_params_behind(d)) {
    kind = "ts";
    json row = json::array();
    for (const auto& v : tp->row0_x) row.push_back(v.str());
    params["row0_x"] = std::move(row);
    params["y00"] = tp->y00.str();
    params["row_tail"] = tp->row_tail == RowTail::Constant ? "constant" : "none";
  } else if (const AtomicMeasure* mu = measure_behind(d)) {
    kind = "from_measure";
    params["atoms"] = measure_to_json(*mu)["atoms"];
  } else {
    params["tail"] = d.tail_rule() == TailRule::ConstantExtension ? "constant-extension" : "none";
  }
  j["kind"] = kind;
  j["window"] = json::array({d.width(), d.height()});
  j["x"] = grid_to_json(d, true);
  j["y"] = grid_to_json(d, false);
  j["params"] = std::move(params);
  return j;
}

WeightDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("diagram file needs a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  Window w = j.contains("window") ? window_from_json(j.at("window")) : kDefaultWindow;
  const json params = j.contains("params") ? j.at("params") : json::object();

  if (kind == "explicit") {
    if (!j.contains("x") || !j.contains("y"))
      throw InputError("explicit diagram needs \"x\" and \"y\" grids");
    TailRule tail = TailRule::None;
    if (params.contains("tail")) {
      const std::string t = params.at("tail").get<std::string>();
      if (t == "constant-extension") tail = TailRule::ConstantExtension;
      else if (t != "none") throw InputError("unknown explicit-diagram tail '" + t + "'");
    }
    return WeightDiagram(grid_from_json(j.at("x"), "x"), grid_from_json(j.at("y"), "y"), tail);
  }
  if (kind == "flat_above_row_zero") {
    WeightDiagram d = generate_flat_above_row_zero(rat(params.at("a"), "a"),
                                                   rat(params.at("y00"), "y00"),
                                                   rat(params.at("C"), "C"), w);
    check_matches_file_grids(d, j);
    return d;
  }
  if (kind == "constant") {
    WeightDiagram d = generate_constant(rat(params.at("x"), "x"), rat(params.at("y"), "y"), w);
    check_matches_file_grids(d, j);
    return d;
  }
  if (kind == "ts") {
    std::vector<Rational> row;
    for (const auto& v : params.at("row0_x")) row.push_back(rat(v, "row0_x"));
    RowTail tail = RowTail::Constant;
    if (params.contains("row_tail") && params.at("row_tail").get<std::string>() == "none")
      tail = RowTail::None;
    WeightDiagram d = generate_TS(std::move(row), rat(params.at("y00"), "y00"), w, tail);
    check_matches_file_grids(d, j);
    return d;
  }
  if (kind == "from_measure") {
    json mj;
    mj["atoms"] = params.at("atoms");
    WeightDiagram d = shift_from_measure(measure_from_json(mj), w);
    check_matches_file_grids(d, j);
    return d;
  }
  throw InputError("unknown diagram kind '" + kind + "'");
}

json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) {
    json ja;
    ja["s"] = a.s.str();
    ja["t"] = a.t.str();
    ja["rho"] = a.rho.str();
    atoms.push_back(std::move(ja));
  }
  json j;
  j["atoms"] = std::move(atoms);
  return j;
}

AtomicMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array())
    throw InputError("measure file needs an \"atoms\" array");
  std::vector<Atom> atoms;
  for (const auto& ja : j.at("atoms"))
    atoms.push_back({rat(ja.at("s"), "s"), rat(ja.at("t"), "t"), rat(ja.at("rho"), "rho")});
  return AtomicMeasure(std::move(atoms));
}

json sequence_to_json(const BiMomentSequence& g) {
  json gamma = json::object();
  for (int d = 0; d <= 2 * g.order(); ++d)
    for (int i = 0; i <= d; ++i)
      gamma[std::to_string(i) + "," + std::to_string(d - i)] = g.gamma(i, d - i).str();
  json j;
  j["n"] = g.order();
  j["gamma"] = std::move(gamma);
  return j;
}

BiMomentSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gamma"))
    throw InputError("moment sequence file needs \"n\" and \"gamma\"");
  const int n = j.at("n").get<int>();
  std::map<std::pair<int, int>, Rational> entries;
  for (const auto& [key, val] : j.at("gamma").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("gamma keys must look like \"i,j\"");
    int i = 0, jj = 0;
    try {
      i = std::stoi(key.substr(0, comma));
      jj = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("gamma keys must look like \"i,j\", got '" + key + "'");
    }
    entries.emplace(std::make_pair(i, jj), rat(val, "gamma"));
  }
  return sequence_from_entries(n, entries);
}

json verdict_to_json(const PredicateVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness) {
    json w;
    w["k"] = json::array({v.witness->k.k1, v.witness->k.k2});
    w["lhs"] = v.witness->lhs.str();
    w["rhs"] = v.witness->rhs.str();
    j["witness"] = std::move(w);
  }
  if (v.constant) j["constant"] = v.constant->str();
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json report_to_json(const ClassificationReport& r) {
  json j;
  j["matricial"] = verdict_to_json(r.matricial);
  j["joint"] = verdict_to_json(r.joint);
  j["spherical"] = verdict_to_json(r.spherical);
  j["coordinatewise_hyponormal"] = verdict_to_json(r.coordinatewise_hyponormal);
  j["toral_fixed"] = verdict_to_json(r.toral_fixed);
  j["spherical_fixed"] = verdict_to_json(r.spherical_fixed);
  j["transforms_agree"] = verdict_to_json(r.transforms_agree);
  j["subnormal_implied"] = r.subnormal_implied;
  return j;
}

json power_report_to_json(const PowerSphericalReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json jc;
    jc["p"] = c.p;
    jc["q"] = c.q;
    jc["verdict"] = verdict_to_json(c.verdict);
    cells.push_back(std::move(jc));
  }
  json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["cells"] = std::move(cells);
  j["all_hold"] = r.all_hold;
  j["constants_coincide"] = r.constants_coincide;
  if (r.common_constant) j["common_constant"] = r.common_constant->str();
  return j;
}

json two_atom_conditions_to_json(const TwoAtomConditions& c) {
  json j;
  j["base"] = c.base;
  j["pow21"] = c.pow21;
  j["pow12"] = c.pow12;
  return j;
}

json numeric_diagram_to_json(const NumericDiagram& d) {
  json j;
  j["precision"] = d.precision();
  j["window"] = json::array({d.width(), d.height()});
  json xs = json::array(), ys = json::array();
  for (int k2 = 0; k2 < d.height(); ++k2) {
    json xr = json::array(), yr = json::array();
    for (int k1 = 0; k1 < d.width(); ++k1) {
      xr.push_back(d.x({k1, k2}).str());
      yr.push_back(d.y({k1, k2}).str());
    }
    xs.push_back(std::move(xr));
    ys.push_back(std::move(yr));
  }
  j["x"] = std::move(xs);
  j["y"] = std::move(ys);
  return j;
}

json iteration_trace_to_json(const IterationTrace& t) {
  json j;
  j["kind"] = t.kind == TransformKind::Toral ? "toral" : "spherical";
  j["precision"] = t.precision;
  j["requested_steps"] = t.requested;
  j["completed_steps"] = static_cast<int>(t.steps.size()) - 1;
  j["window_exhausted"] = t.window_exhausted;
  json deltas = json::array();
  for (const auto& dlt : t.deltas) deltas.push_back(dlt.str());
  j["deltas"] = std::move(deltas);
  j["final"] = numeric_diagram_to_json(t.steps.back());
  return j;
}

json moment_matrix_to_json(const MomentMatrix& m) {
  json labels = json::array();
  for (const auto& l : m.labels()) labels.push_back(l.str());
  json rows = json::array();
  for (int u = 0; u < m.dim(); ++u) {
    json row = json::array();
    for (int v = 0; v < m.dim(); ++v) row.push_back(m.at(u, v).str());
    rows.push_back(std::move(row));
  }
  json j;
  j["n"] = m.order();
  j["labels"] = std::move(labels);
  j["entries"] = std::move(rows);
  return j;
}

json relations_to_json(const std::vector<ColumnRelation>& rels,
                       const std::vector<MonomialLabel>& labels) {
  json out = json::array();
  for (const auto& r : rels) {
    json jr;
    jr["lead"] = labels[static_cast<size_t>(r.lead)].str();
    json coeffs = json::object();
    for (size_t i = 0; i < r.coeffs.size(); ++i)
      if (!r.coeffs[i].is_zero()) coeffs[labels[i].str()] = r.coeffs[i].str();
    jr["coeffs"] = std::move(coeffs);
    jr["pretty"] = r.str(labels);
    out.push_back(std::move(jr));
  }
  return out;
}

}  // namespace shiftlab
