#pragma once

// JSON input documents and invariant reports. Needs vendor/ (json.hpp) on the include path.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "toriq/bounds.hpp"
#include "toriq/covering.hpp"
#include "toriq/fancone.hpp"

namespace toriq {

using json = nlohmann::json;

// ---- scalars. Integers outside +-2^53 travel as decimal strings, rationals always as "p/q".

inline json int_to_json(const Int& x) {
  static const Int safe = Int(1) << 53;
  if (abs_int(x) < safe) return json(x.get_si());
  return json(x.get_str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "not an integer: \"" + s + "\"");
    return x;
  }
  throw Error(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

inline json rat_to_json(const Rat& x) { return json(x.get_str()); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) {
    Rat x;
    if (x.set_str(j.get<std::string>(), 10) != 0 || x.get_den() == 0)
      throw Error(ErrorCode::InvalidInput, "not a rational: " + j.dump());
    x.canonicalize();
    return x;
  }
  throw Error(ErrorCode::InvalidInput, "expected a rational, got " + j.dump());
}

inline json matrix_to_json(const IntMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(int_to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json matrix_to_json(const RatMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(rat_to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F scalar) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "matrix must be an array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::InvalidInput, "matrix rows must be arrays");
    std::vector<T> row;
    for (const auto& x : r) row.push_back(scalar(x));
    if (!rows.empty() && row.size() != rows[0].size())
      throw Error(ErrorCode::InvalidInput, "matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  return Matrix<T>::from_rows(rows, cols);
}

inline IntMatrix int_matrix_from_json(const json& j) { return matrix_from_json<Int>(j, int_from_json); }
inline RatMatrix rat_matrix_from_json(const json& j) { return matrix_from_json<Rat>(j, rat_from_json); }

inline json intvec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

inline json group_to_json(const FiniteAbelianGroup& g) {
  return json{{"factors", intvec_to_json(g.factors)}, {"free_rank", g.free_rank}};
}

inline FiniteAbelianGroup group_from_json(const json& j) {
  FiniteAbelianGroup g;
  g.factors = intvec_from_json(j.at("factors"));
  g.free_rank = j.at("free_rank").get<std::size_t>();
  return g;
}

// Cones travel 1-based.
inline json cones_to_json(const std::vector<IndexSet>& cones) {
  json a = json::array();
  for (const auto& c : cones) {
    json s = json::array();
    for (auto i : c) s.push_back(i + 1);
    a.push_back(s);
  }
  return a;
}

inline std::vector<IndexSet> cones_from_json(const json& j, std::size_t m) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "fan must be an array of index lists");
  std::vector<IndexSet> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.empty()) throw Error(ErrorCode::InvalidInput, "each cone must be a nonempty index list");
    IndexSet s;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw Error(ErrorCode::InvalidInput, "cone indices must be integers");
      long long i = x.get<long long>();
      if (i < 1 || static_cast<std::size_t>(i) > m)
        throw Error(ErrorCode::InvalidInput, "cone index " + std::to_string(i) + " out of range 1.." + std::to_string(m));
      s.push_back(static_cast<std::size_t>(i - 1));
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::InvalidInput, "repeated index in a cone");
    out.push_back(s);
  }
  return out;
}

// ---- input documents

enum class Role { FanMatrix, WeightMatrix };

inline std::string role_name(Role r) { return r == Role::FanMatrix ? "fan-matrix" : "weight-matrix"; }

struct TorsionSpec {
  IntVec factors;
  IntMatrix rows;  // factors.size() x m residues

  bool operator==(const TorsionSpec&) const = default;
};

struct InputDocument {
  std::string name;
  Role role = Role::FanMatrix;
  IntMatrix matrix;
  std::optional<std::vector<IndexSet>> fan;  // 0-based
  std::optional<TorsionSpec> torsion;

  bool operator==(const InputDocument&) const = default;
};

namespace detail {
inline InputDocument parse_document(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "document must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "role" && key != "matrix" && key != "fan" && key != "torsion")
      throw Error(ErrorCode::InvalidInput, "unknown key \"" + key + "\"");
  InputDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::InvalidInput, "name must be a string");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("role")) {
    std::string r = j["role"].is_string() ? j["role"].get<std::string>() : "";
    if (r == "fan-matrix") d.role = Role::FanMatrix;
    else if (r == "weight-matrix") d.role = Role::WeightMatrix;
    else throw Error(ErrorCode::InvalidInput, "role must be \"fan-matrix\" or \"weight-matrix\"");
  }
  if (!j.contains("matrix")) throw Error(ErrorCode::InvalidInput, "missing \"matrix\"");
  d.matrix = int_matrix_from_json(j["matrix"]);
  if (d.matrix.empty()) throw Error(ErrorCode::InvalidInput, "matrix is empty");
  std::size_t m = d.matrix.cols();
  if (j.contains("fan")) d.fan = cones_from_json(j["fan"], m);
  if (j.contains("torsion")) {
    if (d.role != Role::WeightMatrix) throw Error(ErrorCode::InvalidInput, "torsion is only meaningful for a weight matrix");
    const json& t = j["torsion"];
    if (!t.is_object() || !t.contains("factors") || !t.contains("columns"))
      throw Error(ErrorCode::InvalidInput, "torsion needs \"factors\" and \"columns\"");
    TorsionSpec ts;
    ts.factors = intvec_from_json(t["factors"]);
    for (const auto& f : ts.factors)
      if (f < 2) throw Error(ErrorCode::InvalidInput, "torsion factors must be at least 2");
    IntMatrix cols = int_matrix_from_json(t["columns"]);
    if (cols.rows() != m || cols.cols() != ts.factors.size())
      throw Error(ErrorCode::InvalidInput, "torsion needs one residue vector per matrix column");
    ts.rows = cols.transpose();
    for (std::size_t i = 0; i < ts.rows.rows(); ++i)
      for (std::size_t c = 0; c < m; ++c) ts.rows(i, c) = mod_floor(ts.rows(i, c), ts.factors[i]);
    d.torsion = ts;
  }
  return d;
}
}  // namespace detail

inline InputDocument parse_document(const json& j) {
  try {
    return detail::parse_document(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
}

inline json document_to_json(const InputDocument& d) {
  json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["role"] = role_name(d.role);
  j["matrix"] = matrix_to_json(d.matrix);
  if (d.fan) j["fan"] = cones_to_json(*d.fan);
  if (d.torsion) j["torsion"] = json{{"factors", intvec_to_json(d.torsion->factors)},
                                     {"columns", matrix_to_json(d.torsion->rows.transpose())}};
  return j;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

inline InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(parse_json_text(ss.str()));
}

// Weight matrix of the document: the matrix itself, or the Gale dual of a fan matrix.
inline IntMatrix document_weights(const InputDocument& d) {
  return d.role == Role::WeightMatrix ? d.matrix : gale_dual(d.matrix);
}

// Fan matrix of the document: with a torsion part it is cut out by the full grading.
inline IntMatrix document_rays(const InputDocument& d) {
  if (d.role == Role::FanMatrix) return d.matrix;
  if (d.torsion) return fan_matrix_from_grading(d.matrix, d.torsion->factors, d.torsion->rows);
  return gale_dual(d.matrix);
}

// Default fans: the face fan of conv(V) (or the anticanonical chamber when some column
// is interior), and the chamber of Q.1 for weight matrices.
inline FanData resolve_fan(const InputDocument& d) {
  FanData fan;
  fan.rays = document_rays(d);
  if (d.fan) {
    fan.cones = *d.fan;
    sort_cones(fan.cones);
    validate_fan(fan);
    return fan;
  }
  if (d.role == Role::FanMatrix) {
    try {
      return face_fan(fan.rays);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidFan) throw;
      return qfano_representative(fan.rays);
    }
  }
  fan.cones = fan_from_point(d.matrix, anticanonical_class(d.matrix)).cones;
  validate_fan(fan);
  return fan;
}

// ---- reports

inline json check_to_json(const IdentityCheck& c) {
  return json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

inline IdentityCheck check_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("lhs").get<std::string>(), j.at("rhs").get<std::string>(),
          j.at("holds").get<bool>()};
}

inline json certificate_to_json(const BoundCertificate& c) {
  return json{{"name", c.name},
              {"inputs", c.inputs},
              {"relation", c.relation == Relation::AtMost ? "at_most" : "divides"},
              {"value", int_to_json(c.value)},
              {"observed", int_to_json(c.observed)},
              {"satisfied", c.satisfied},
              {"conjectural", c.conjectural},
              {"hard", c.hard},
              {"note", c.note}};
}

inline BoundCertificate certificate_from_json(const json& j) {
  BoundCertificate c;
  c.name = j.at("name").get<std::string>();
  c.inputs = j.at("inputs").get<std::string>();
  std::string rel = j.at("relation").get<std::string>();
  if (rel != "at_most" && rel != "divides") throw Error(ErrorCode::InvalidInput, "unknown relation " + rel);
  c.relation = rel == "at_most" ? Relation::AtMost : Relation::Divides;
  c.value = int_from_json(j.at("value"));
  c.observed = int_from_json(j.at("observed"));
  c.satisfied = j.at("satisfied").get<bool>();
  c.conjectural = j.at("conjectural").get<bool>();
  c.hard = j.at("hard").get<bool>();
  c.note = j.at("note").get<std::string>();
  return c;
}

struct InvariantReport {
  std::string name;
  std::size_t n = 0, r = 0, m = 0, r_polar = 0, m_polar = 0;
  Int mult, k, k_hat, h, g_Q, g_hat, modulus_Q, modulus_Q_polar;
  Int scaled_degree_X, scaled_degree_Y_khat, scaled_degree_Y_k;
  Rat volume_V, degree_X, degree_Y, degree_Z_polar;
  FiniteAbelianGroup G, G_Q, G_hat;
  IntMatrix V, Q, W, B, A, C, Q_polar, Lambda_polar;
  RatMatrix V_polar, W_polar, Lambda;
  std::vector<IndexSet> fan;
  bool qfano = false, canonical = false;
  std::optional<Int> mult_polar;
  std::vector<IdentityCheck> checks;
  std::vector<BoundCertificate> certificates;

  bool operator==(const InvariantReport&) const = default;

  bool checks_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
  }
  bool passes() const { return checks_hold() && certificates_pass(certificates); }
};

inline InvariantReport make_report(const CoveringData& d, std::string name = "") {
  InvariantReport r;
  r.name = std::move(name);
  r.n = d.n;
  r.r = d.r;
  r.m = d.m;
  r.r_polar = d.r_polar;
  r.m_polar = d.m_polar;
  r.mult = d.mult;
  r.k = d.k;
  r.k_hat = d.k_hat;
  r.h = d.h;
  r.g_Q = d.g_Q;
  r.g_hat = d.g_hat;
  r.modulus_Q = d.modulus_Q;
  r.modulus_Q_polar = d.modulus_Q_polar;
  r.scaled_degree_X = d.scaled_degree_X;
  r.scaled_degree_Y_khat = d.scaled_degree_Y_khat;
  r.scaled_degree_Y_k = d.scaled_degree_Y_k;
  r.volume_V = d.volume_V;
  r.degree_X = d.degree_X;
  r.degree_Y = d.degree_Y;
  r.degree_Z_polar = d.degree_Z_polar;
  r.G = d.G;
  r.G_Q = d.G_Q;
  r.G_hat = d.G_hat;
  r.V = d.fan.rays;
  r.Q = d.Q;
  r.W = d.W;
  r.B = d.B;
  r.A = d.A;
  r.C = d.C;
  r.Q_polar = d.Q_polar;
  r.Lambda_polar = d.Lambda_polar;
  r.V_polar = d.V_polar;
  r.W_polar = d.W_polar;
  r.Lambda = d.Lambda;
  r.fan = d.fan.cones;
  r.qfano = d.qfano;
  r.canonical = d.canonical;
  r.mult_polar = d.mult_polar;
  r.checks = d.checks;
  r.certificates = certify(d);
  return r;
}

inline json report_to_json(const InvariantReport& r) {
  json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["r"] = r.r;
  j["m"] = r.m;
  j["r_polar"] = r.r_polar;
  j["m_polar"] = r.m_polar;
  j["mult"] = int_to_json(r.mult);
  j["k"] = int_to_json(r.k);
  j["k_hat"] = int_to_json(r.k_hat);
  j["h"] = int_to_json(r.h);
  j["g_Q"] = int_to_json(r.g_Q);
  j["g_hat"] = int_to_json(r.g_hat);
  j["modulus_Q"] = int_to_json(r.modulus_Q);
  j["modulus_Q_polar"] = int_to_json(r.modulus_Q_polar);
  j["degrees"] = json{{"volume_V", rat_to_json(r.volume_V)},
                      {"X", rat_to_json(r.degree_X)},
                      {"scaled_X", int_to_json(r.scaled_degree_X)},
                      {"Y", rat_to_json(r.degree_Y)},
                      {"scaled_Y_khat", int_to_json(r.scaled_degree_Y_khat)},
                      {"scaled_Y_k", int_to_json(r.scaled_degree_Y_k)},
                      {"Z_polar", rat_to_json(r.degree_Z_polar)}};
  j["groups"] = json{{"G", group_to_json(r.G)}, {"G_Q", group_to_json(r.G_Q)}, {"G_hat", group_to_json(r.G_hat)}};
  j["matrices"] = json{{"V", matrix_to_json(r.V)},
                       {"Q", matrix_to_json(r.Q)},
                       {"W", matrix_to_json(r.W)},
                       {"B", matrix_to_json(r.B)},
                       {"A", matrix_to_json(r.A)},
                       {"C", matrix_to_json(r.C)},
                       {"Q_polar", matrix_to_json(r.Q_polar)},
                       {"Lambda_polar", matrix_to_json(r.Lambda_polar)},
                       {"V_polar", matrix_to_json(r.V_polar)},
                       {"W_polar", matrix_to_json(r.W_polar)},
                       {"Lambda", matrix_to_json(r.Lambda)}};
  j["fan"] = cones_to_json(r.fan);
  j["qfano"] = r.qfano;
  j["canonical"] = r.canonical;
  j["mult_polar"] = r.mult_polar ? int_to_json(*r.mult_polar) : json(nullptr);
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  j["certificates"] = json::array();
  for (const auto& c : r.certificates) j["certificates"].push_back(certificate_to_json(c));
  return j;
}

inline InvariantReport report_from_json(const json& j) {
  try {
    InvariantReport r;
    r.name = j.at("name").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.r = j.at("r").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.r_polar = j.at("r_polar").get<std::size_t>();
    r.m_polar = j.at("m_polar").get<std::size_t>();
    r.mult = int_from_json(j.at("mult"));
    r.k = int_from_json(j.at("k"));
    r.k_hat = int_from_json(j.at("k_hat"));
    r.h = int_from_json(j.at("h"));
    r.g_Q = int_from_json(j.at("g_Q"));
    r.g_hat = int_from_json(j.at("g_hat"));
    r.modulus_Q = int_from_json(j.at("modulus_Q"));
    r.modulus_Q_polar = int_from_json(j.at("modulus_Q_polar"));
    const json& dg = j.at("degrees");
    r.volume_V = rat_from_json(dg.at("volume_V"));
    r.degree_X = rat_from_json(dg.at("X"));
    r.scaled_degree_X = int_from_json(dg.at("scaled_X"));
    r.degree_Y = rat_from_json(dg.at("Y"));
    r.scaled_degree_Y_khat = int_from_json(dg.at("scaled_Y_khat"));
    r.scaled_degree_Y_k = int_from_json(dg.at("scaled_Y_k"));
    r.degree_Z_polar = rat_from_json(dg.at("Z_polar"));
    const json& gs = j.at("groups");
    r.G = group_from_json(gs.at("G"));
    r.G_Q = group_from_json(gs.at("G_Q"));
    r.G_hat = group_from_json(gs.at("G_hat"));
    const json& ms = j.at("matrices");
    r.V = int_matrix_from_json(ms.at("V"));
    r.Q = int_matrix_from_json(ms.at("Q"));
    r.W = int_matrix_from_json(ms.at("W"));
    r.B = int_matrix_from_json(ms.at("B"));
    r.A = int_matrix_from_json(ms.at("A"));
    r.C = int_matrix_from_json(ms.at("C"));
    r.Q_polar = int_matrix_from_json(ms.at("Q_polar"));
    r.Lambda_polar = int_matrix_from_json(ms.at("Lambda_polar"));
    r.V_polar = rat_matrix_from_json(ms.at("V_polar"));
    r.W_polar = rat_matrix_from_json(ms.at("W_polar"));
    r.Lambda = rat_matrix_from_json(ms.at("Lambda"));
    r.fan = cones_from_json(j.at("fan"), r.m);
    r.qfano = j.at("qfano").get<bool>();
    r.canonical = j.at("canonical").get<bool>();
    if (!j.at("mult_polar").is_null()) r.mult_polar = int_from_json(j.at("mult_polar"));
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    for (const auto& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed report: ") + e.what());
  }
}

// Sorted keys come for free: json objects are std::map backed.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json error_to_json(const Error& e) {
  return json{{"error", json{{"code", code_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace toriq
