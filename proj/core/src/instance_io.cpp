#include "fairmatch/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fairmatch {

namespace {

using ordered_json = nlohmann::ordered_json;

double round2(double x) { return std::round(x * 100.0) / 100.0; }

[[noreturn]] void fail(const std::string& msg) { throw validation_error(msg); }

std::string slot_name(bool shipper, std::size_t f) {
  return (shipper ? "A" : "B") + std::to_string(f + 1);
}

}  // namespace

void validate_ifn(const IFNumber& x, const std::string& where) {
  if (!(x.mu >= 0.0 && x.mu <= 1.0) || !(x.nu >= 0.0 && x.nu <= 1.0)) {
    fail(where + ": membership degrees must lie in [0,1]");
  }
  if (x.mu + x.nu > 1.0 + kValidationTol) {
    fail(where + ": mu + nu exceeds 1");
  }
}

namespace {

void validate_weights(
    const std::vector<std::array<double, kIndicatorCount>>& rows,
    const std::array<IndicatorKind, kIndicatorCount>& kinds,
    const std::string& side, std::size_t expected) {
  if (rows.size() != expected) {
    fail("weights." + side + ": expected " + std::to_string(expected) +
         " vectors, got " + std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double sum = 0.0;
    for (std::size_t f = 0; f < kIndicatorCount; ++f) {
      const double w = rows[i][f];
      if (!(w >= 0.0 && w <= 1.0)) {
        fail("weights." + side + "[" + std::to_string(i + 1) + "][" +
             std::to_string(f + 1) + "]: weight outside [0,1]");
      }
      if (kinds[f] == IndicatorKind::attribute && w != 0.0) {
        fail("weights." + side + "[" + std::to_string(i + 1) +
             "]: attribute indicator " + std::to_string(f + 1) +
             " must carry weight 0");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kValidationTol) {
      std::ostringstream os;
      os << "weights." << side << "[" << (i + 1) << "]: sum is " << sum
         << ", expected 1 within 1e-9";
      fail(os.str());
    }
  }
}

void validate_profile(const std::array<std::optional<Indicator>, kIndicatorCount>& ind,
                      bool shipper, std::size_t who) {
  const std::string base = (shipper ? "shippers[" : "carriers[") +
                           std::to_string(who + 1) + "].indicators.";
  for (std::size_t f = 0; f < kIndicatorCount; ++f) {
    if (!ind[f]) continue;
    const std::string where = base + slot_name(shipper, f);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, IntervalExpectation>) {
            if (v.lo > v.hi) fail(where + ": interval bounds out of order");
            if (!(v.theta > 0.0 && v.theta <= 1.0))
              fail(where + ": theta must lie in (0,1]");
          } else if constexpr (std::is_same_v<T, CostExpectation> ||
                               std::is_same_v<T, BenefitExpectation>) {
            if (!(v.omega > 0.0 && v.omega <= 1.0))
              fail(where + ": omega must lie in (0,1]");
          } else if constexpr (std::is_same_v<T, FixedExpectation>) {
            if (!(v.phi > 0.0 && v.phi <= 1.0))
              fail(where + ": phi must lie in (0,1]");
          } else if constexpr (std::is_same_v<T, PreferenceExpectation>) {
            if (!(v.tau > 0.0 && v.tau <= 1.0))
              fail(where + ": tau must lie in (0,1]");
            std::set<std::string> seen;
            for (const auto& loc : v.sequence) {
              if (!seen.insert(loc).second)
                fail(where + ": preference sequence repeats \"" + loc + "\"");
            }
          }
        },
        *ind[f]);
  }
}

void validate_matrix(const Matrix& m, std::size_t rows, std::size_t cols,
                     const std::string& name) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(name + ": expected " + std::to_string(rows) + "x" +
         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
         std::to_string(m.cols()));
  }
}

}  // namespace

void validate(const MatchingInstance& inst) {
  if (inst.shippers.empty()) fail("shippers: list is empty");
  if (inst.carriers.empty()) fail("carriers: list is empty");
  const std::size_t m = inst.num_shippers(), n = inst.num_carriers();

  for (std::size_t i = 0; i < m; ++i) {
    if (inst.shippers[i].id != int(i + 1)) {
      fail("shippers[" + std::to_string(i + 1) + "].id: must equal its 1-based position");
    }
    validate_profile(inst.shippers[i].indicators, true, i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (inst.carriers[j].id != int(j + 1)) {
      fail("carriers[" + std::to_string(j + 1) + "].id: must equal its 1-based position");
    }
    validate_profile(inst.carriers[j].indicators, false, j);
  }

  validate_weights(inst.weights_shipper, kShipperIndicatorKinds, "shipper", m);
  validate_weights(inst.weights_carrier, kCarrierIndicatorKinds, "carrier", n);

  if (!(inst.big_m > 0.0)) fail("big_m: must be positive");
  if (!(inst.gamma > 0.0 && inst.gamma < 1.0)) fail("gamma: must lie in (0,1)");
  if (!(inst.eta_lo > 0.0)) fail("eta_interval: lower end must be positive");
  if (inst.eta_lo > inst.eta_hi) fail("eta_interval: ends out of order");

  if (inst.alpha) validate_matrix(*inst.alpha, m, n, "satisfaction_alpha");
  if (inst.beta) validate_matrix(*inst.beta, n, m, "satisfaction_beta");
  if (inst.alpha.has_value() != inst.beta.has_value()) {
    fail("satisfaction matrices: alpha and beta must be supplied together");
  }
  if (inst.reliability_shipper_score)
    validate_matrix(*inst.reliability_shipper_score, m, n, "reliability_shipper");
  if (inst.reliability_carrier_score)
    validate_matrix(*inst.reliability_carrier_score, n, m, "reliability_carrier");
  if (inst.reliability_shipper_ifn) {
    const auto& r = *inst.reliability_shipper_ifn;
    if (r.size() != m || (m && r[0].size() != n))
      fail("reliability_shipper: dimension mismatch");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        validate_ifn(r[i][j], "reliability_shipper[" + std::to_string(i + 1) +
                                  "][" + std::to_string(j + 1) + "]");
  }
  if (inst.reliability_carrier_ifn) {
    const auto& r = *inst.reliability_carrier_ifn;
    if (r.size() != n || (n && r[0].size() != m))
      fail("reliability_carrier: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i)
        validate_ifn(r[j][i], "reliability_carrier[" + std::to_string(j + 1) +
                                  "][" + std::to_string(i + 1) + "]");
  }
}

}  // namespace fairmatch

namespace fairmatch::io {

namespace {

using nlohmann::ordered_json;

double get_number(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

double get_field(const ordered_json& j, const std::string& key,
                 const std::string& where) {
  if (!j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return get_number(j.at(key), where + "." + key);
}

bool get_tolerable(const ordered_json& j, const std::string& where) {
  if (!j.contains("tolerable")) fail(where + ": missing \"tolerable\"");
  if (!j.at("tolerable").is_boolean()) fail(where + ".tolerable: expected a bool");
  return j.at("tolerable").get<bool>();
}

Indicator parse_indicator(const ordered_json& j, IndicatorKind kind,
                          const std::string& where) {
  switch (kind) {
    case IndicatorKind::interval_expectation: {
      if (!j.is_object() || !j.contains("interval") || !j.at("interval").is_array() ||
          j.at("interval").size() != 2) {
        fail(where + ": expected {\"interval\":[lo,hi],\"theta\",\"tolerable\"}");
      }
      IntervalExpectation v;
      v.lo = get_number(j.at("interval")[0], where + ".interval[0]");
      v.hi = get_number(j.at("interval")[1], where + ".interval[1]");
      v.theta = get_field(j, "theta", where);
      v.tolerable = get_tolerable(j, where);
      return v;
    }
    case IndicatorKind::cost_expectation: {
      CostExpectation v;
      v.value = get_field(j, "value", where);
      v.omega = get_field(j, "omega", where);
      v.tolerable = get_tolerable(j, where);
      return v;
    }
    case IndicatorKind::benefit_expectation: {
      BenefitExpectation v;
      v.value = get_field(j, "value", where);
      v.omega = get_field(j, "omega", where);
      v.tolerable = get_tolerable(j, where);
      return v;
    }
    case IndicatorKind::fixed_expectation: {
      if (!j.contains("code") || !j.at("code").is_string())
        fail(where + ": missing string \"code\"");
      FixedExpectation v;
      v.code = j.at("code").get<std::string>();
      v.phi = get_field(j, "phi", where);
      v.tolerable = get_tolerable(j, where);
      return v;
    }
    case IndicatorKind::preference_expectation: {
      if (!j.contains("sequence") || !j.at("sequence").is_array())
        fail(where + ": missing array \"sequence\"");
      PreferenceExpectation v;
      for (const auto& e : j.at("sequence")) {
        if (!e.is_string()) fail(where + ".sequence: expected strings");
        v.sequence.push_back(e.get<std::string>());
      }
      v.tau = get_field(j, "tau", where);
      v.tolerable = get_tolerable(j, where);
      return v;
    }
    case IndicatorKind::attribute: {
      if (j.is_number()) return NumericAttribute{j.get<double>()};
      if (j.is_string()) return CodeAttribute{j.get<std::string>()};
      fail(where + ": attribute must be a number or a string");
    }
    default:
      fail(where + ": reliability is supplied through the matrices");
  }
}

ordered_json dump_indicator(const Indicator& ind) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntervalExpectation>) {
          return {{"interval", {v.lo, v.hi}},
                  {"theta", v.theta},
                  {"tolerable", v.tolerable}};
        } else if constexpr (std::is_same_v<T, CostExpectation> ||
                             std::is_same_v<T, BenefitExpectation>) {
          return {{"value", v.value}, {"omega", v.omega}, {"tolerable", v.tolerable}};
        } else if constexpr (std::is_same_v<T, FixedExpectation>) {
          return {{"code", v.code}, {"phi", v.phi}, {"tolerable", v.tolerable}};
        } else if constexpr (std::is_same_v<T, PreferenceExpectation>) {
          return {{"sequence", v.sequence},
                  {"tau", v.tau},
                  {"tolerable", v.tolerable}};
        } else if constexpr (std::is_same_v<T, NumericAttribute>) {
          return v.value;
        } else {
          return v.code;
        }
      },
      ind);
}

Matrix parse_matrix(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    fail(where + ": expected a 2-d array");
  }
  Matrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) {
      fail(where + "[" + std::to_string(i + 1) + "]: ragged row");
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      m(i, k) = get_number(j[i][k], where + "[" + std::to_string(i + 1) + "][" +
                                        std::to_string(k + 1) + "]");
    }
  }
  return m;
}

ordered_json dump_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// reliability blocks accept plain numbers (already scored) or {"mu","nu"}
void parse_reliability(const ordered_json& j, const std::string& where,
                       std::optional<std::vector<std::vector<IFNumber>>>& ifn,
                       std::optional<Matrix>& score) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    fail(where + ": expected a 2-d array");
  }
  if (j[0].empty()) fail(where + ": empty row");
  if (j[0][0].is_object()) {
    std::vector<std::vector<IFNumber>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::vector<IFNumber> row;
      for (std::size_t k = 0; k < j[i].size(); ++k) {
        const auto& cell = j[i][k];
        const std::string cw =
            where + "[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]";
        row.push_back({get_field(cell, "mu", cw), get_field(cell, "nu", cw)});
      }
      rows.push_back(std::move(row));
    }
    ifn = std::move(rows);
  } else {
    score = parse_matrix(j, where);
  }
}

std::vector<std::array<double, kIndicatorCount>> parse_weights(
    const ordered_json& j, const std::string& where, std::size_t count) {
  if (!j.is_array() || j.empty()) fail(where + ": expected an array");
  auto parse_row = [&](const ordered_json& r,
                       const std::string& rw) -> std::array<double, kIndicatorCount> {
    if (!r.is_array() || r.size() != kIndicatorCount) {
      fail(rw + ": expected " + std::to_string(kIndicatorCount) + " weights");
    }
    std::array<double, kIndicatorCount> out{};
    for (std::size_t f = 0; f < kIndicatorCount; ++f) {
      out[f] = get_number(r[f], rw + "[" + std::to_string(f + 1) + "]");
    }
    return out;
  };
  std::vector<std::array<double, kIndicatorCount>> rows;
  if (j[0].is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      rows.push_back(parse_row(j[i], where + "[" + std::to_string(i + 1) + "]"));
    }
  } else {
    rows.assign(count, parse_row(j, where));
  }
  return rows;
}

}  // namespace

MatchingInstance instance_from_text(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(std::string("instance: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance: top level must be an object");

  MatchingInstance inst;
  if (!doc.contains("shippers") || !doc.at("shippers").is_array())
    fail("shippers: missing array");
  if (!doc.contains("carriers") || !doc.at("carriers").is_array())
    fail("carriers: missing array");

  auto parse_profiles = [&](const ordered_json& arr, bool shipper, auto& out) {
    const auto& kinds = shipper ? kShipperIndicatorKinds : kCarrierIndicatorKinds;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      const std::string base =
          (shipper ? "shippers[" : "carriers[") + std::to_string(i + 1) + "]";
      typename std::decay_t<decltype(out)>::value_type prof;
      prof.id = e.is_object() && e.contains("id")
                    ? int(get_number(e.at("id"), base + ".id"))
                    : int(i + 1);
      if (e.is_object() && e.contains("indicators")) {
        const auto& ind = e.at("indicators");
        if (!ind.is_object()) fail(base + ".indicators: expected an object");
        for (std::size_t f = 0; f < kIndicatorCount; ++f) {
          const std::string key = slot_name(shipper, f);
          if (!ind.contains(key) || ind.at(key).is_null()) continue;
          if (kinds[f] == IndicatorKind::reliability) {
            fail(base + ".indicators." + key +
                 ": reliability is supplied through the matrices");
          }
          prof.indicators[f] =
              parse_indicator(ind.at(key), kinds[f], base + ".indicators." + key);
        }
      }
      out.push_back(std::move(prof));
    }
  };
  parse_profiles(doc.at("shippers"), true, inst.shippers);
  parse_profiles(doc.at("carriers"), false, inst.carriers);

  if (!doc.contains("weights") || !doc.at("weights").is_object())
    fail("weights: missing object with \"shipper\" and \"carrier\"");
  const auto& w = doc.at("weights");
  if (!w.contains("shipper") || !w.contains("carrier"))
    fail("weights: missing \"shipper\" or \"carrier\"");
  inst.weights_shipper =
      parse_weights(w.at("shipper"), "weights.shipper", inst.shippers.size());
  inst.weights_carrier =
      parse_weights(w.at("carrier"), "weights.carrier", inst.carriers.size());

  inst.gamma = get_field(doc, "gamma", "instance");
  if (!doc.contains("eta_interval") || !doc.at("eta_interval").is_array() ||
      doc.at("eta_interval").size() != 2) {
    fail("eta_interval: expected [lo, hi]");
  }
  inst.eta_lo = get_number(doc.at("eta_interval")[0], "eta_interval[0]");
  inst.eta_hi = get_number(doc.at("eta_interval")[1], "eta_interval[1]");
  if (doc.contains("big_m")) inst.big_m = get_number(doc.at("big_m"), "big_m");

  if (doc.contains("satisfaction_alpha"))
    inst.alpha = parse_matrix(doc.at("satisfaction_alpha"), "satisfaction_alpha");
  if (doc.contains("satisfaction_beta"))
    inst.beta = parse_matrix(doc.at("satisfaction_beta"), "satisfaction_beta");
  if (doc.contains("reliability_shipper"))
    parse_reliability(doc.at("reliability_shipper"), "reliability_shipper",
                      inst.reliability_shipper_ifn, inst.reliability_shipper_score);
  if (doc.contains("reliability_carrier"))
    parse_reliability(doc.at("reliability_carrier"), "reliability_carrier",
                      inst.reliability_carrier_ifn, inst.reliability_carrier_score);

  validate(inst);
  return inst;
}

MatchingInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_text(buf.str());
}

std::string instance_to_text(const MatchingInstance& inst) {
  ordered_json doc;
  doc["gamma"] = inst.gamma;
  doc["eta_interval"] = {inst.eta_lo, inst.eta_hi};
  doc["big_m"] = inst.big_m;

  auto dump_profiles = [&](const auto& profs, bool shipper) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : profs) {
      ordered_json e;
      e["id"] = p.id;
      ordered_json ind;
      for (std::size_t f = 0; f < kIndicatorCount; ++f) {
        if (p.indicators[f]) ind[slot_name(shipper, f)] = dump_indicator(*p.indicators[f]);
      }
      if (!ind.empty()) e["indicators"] = std::move(ind);
      arr.push_back(std::move(e));
    }
    return arr;
  };
  doc["shippers"] = dump_profiles(inst.shippers, true);
  doc["carriers"] = dump_profiles(inst.carriers, false);

  auto dump_weight_rows = [](const auto& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row = ordered_json::array();
      for (double v : r) row.push_back(v);
      arr.push_back(std::move(row));
    }
    return arr;
  };
  doc["weights"] = {{"shipper", dump_weight_rows(inst.weights_shipper)},
                    {"carrier", dump_weight_rows(inst.weights_carrier)}};

  auto dump_reliability = [](const auto& ifn, const auto& score) -> ordered_json {
    if (ifn) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : *ifn) {
        ordered_json row = ordered_json::array();
        for (const auto& x : r) row.push_back({{"mu", x.mu}, {"nu", x.nu}});
        rows.push_back(std::move(row));
      }
      return rows;
    }
    return dump_matrix(*score);
  };
  if (inst.reliability_shipper_ifn || inst.reliability_shipper_score) {
    doc["reliability_shipper"] = dump_reliability(inst.reliability_shipper_ifn,
                                                  inst.reliability_shipper_score);
  }
  if (inst.reliability_carrier_ifn || inst.reliability_carrier_score) {
    doc["reliability_carrier"] = dump_reliability(inst.reliability_carrier_ifn,
                                                  inst.reliability_carrier_score);
  }
  if (inst.alpha) doc["satisfaction_alpha"] = dump_matrix(*inst.alpha);
  if (inst.beta) doc["satisfaction_beta"] = dump_matrix(*inst.beta);
  return doc.dump(2) + "\n";
}

void write_instance(const MatchingInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open output file: " + path);
  out << instance_to_text(inst);
  if (!out) fail("failed writing: " + path);
}

std::string scheme_to_text(const MatchingScheme& s) {
  ordered_json doc;
  ordered_json pairs = ordered_json::array();
  for (const auto& [i, j] : s.pairs) pairs.push_back({i + 1, j + 1});
  doc["pairs"] = std::move(pairs);
  doc["f1"] = s.f1;
  doc["f2"] = s.f2;
  doc["u1"] = s.u1;
  doc["v1"] = s.v1;
  doc["s1"] = s.s1;
  doc["u2"] = s.u2;
  doc["v2"] = s.v2;
  doc["s2"] = s.s2;
  doc["eta"] = s.eta;
  doc["rounded"] = {{"f1", round2(s.f1)},   {"f2", round2(s.f2)},
                    {"s1", round2(s.s1)},   {"s2", round2(s.s2)},
                    {"overall", round2(s.s1 + s.s2)}, {"eta", round2(s.eta)}};
  return doc.dump(2) + "\n";
}

void write_scheme(const MatchingScheme& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot open output file: " + path);
  out << scheme_to_text(s);
  if (!out) fail("failed writing: " + path);
}

evogame::GameParams game_params_from_text(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(std::string("game params: not valid JSON: ") + e.what());
  }
  evogame::GameParams p;
  auto get = [&](std::initializer_list<const char*> keys, double& field) {
    for (const char* k : keys) {
      if (doc.contains(k)) {
        field = get_number(doc.at(k), std::string("game params.") + k);
        return;
      }
    }
    fail(std::string("game params: missing \"") + *keys.begin() + "\"");
  };
  get({"C_I"}, p.C_I);
  get({"C_P"}, p.C_P);
  get({"sigma1"}, p.sigma1);
  get({"sigma2"}, p.sigma2);
  get({"h"}, p.h);
  get({"f"}, p.f);
  get({"W_I"}, p.W_I);
  get({"W_P"}, p.W_P);
  get({"Q_I"}, p.Q_I);
  get({"Q_P"}, p.Q_P);
  get({"q1"}, p.q1);
  get({"q2"}, p.q2);
  get({"p1"}, p.p1);
  get({"p2"}, p.p2);
  get({"R_I_hi"}, p.R_I_hi);
  get({"R_I_lo"}, p.R_I_lo);
  get({"R_I"}, p.R_I);
  get({"R_P_hi"}, p.R_P_hi);
  get({"R_P_lo"}, p.R_P_lo);
  get({"R_P"}, p.R_P);
  get({"u_I"}, p.u_I);
  get({"u_P"}, p.u_P);
  get({"alpha", "alpha_s"}, p.alpha_s);
  get({"beta", "beta_s"}, p.beta_s);
  get({"S_I"}, p.S_I);
  get({"S_P"}, p.S_P);
  get({"D_G"}, p.D_G);
  get({"F_G_I"}, p.F_G_I);
  get({"F_G_P"}, p.F_G_P);
  get({"eta"}, p.eta);
  evogame::validate(p);
  return p;
}

evogame::GameParams load_game_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open game params file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return game_params_from_text(buf.str());
}

}  // namespace fairmatch::io
