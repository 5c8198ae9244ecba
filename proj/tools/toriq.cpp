// toriq: invariants of complete toric varieties from fan or weight matrices.
//
// Exit codes: 0 success, 1 a hard check or certificate failed (or an internal error),
// 2 invalid input (a JSON error object is printed on stdout).

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "toriq/toriq.hpp"

using namespace toriq;

namespace {

bool as_json = false;

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_table(const Rows& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows) {
    std::cout << std::left << std::setw(static_cast<int>(w) + 2) << k;
    // multi-line values (matrices) are indented under their key
    std::string pad(w + 2, ' ');
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::cout << v[i];
      if (v[i] == '\n' && i + 1 < v.size()) std::cout << pad;
    }
    std::cout << "\n";
  }
}

template <class T>
std::string pretty(const Matrix<T>& a) {
  std::vector<std::string> cells(a.rows() * a.cols());
  std::size_t w = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      cells[i * a.cols() + j] = a(i, j).get_str();
      w = std::max(w, cells[i * a.cols() + j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << "\n";
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(w)) << cells[i * a.cols() + j];
    os << " ]";
  }
  return os.str();
}

std::string cones_str(const std::vector<IndexSet>& cones) {
  std::string s;
  for (const auto& c : cones) {
    s += s.empty() ? "<" : " <";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
    s += ">";
  }
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void emit(const json& j, const Rows& rows) {
  if (as_json)
    std::cout << dump(j);
  else
    print_table(rows);
}

std::string cert_line(const BoundCertificate& c) {
  std::string rel = c.relation == Relation::AtMost ? c.observed.get_str() + " <= " + c.value.get_str()
                                                   : c.value.get_str() + " | " + c.observed.get_str();
  std::string tag = c.satisfied ? "pass" : (c.hard && !c.conjectural ? "FAIL" : "fail");
  std::string flags;
  if (c.conjectural) flags += " conjectural";
  if (!c.hard && !c.conjectural) flags += " informative";
  if (!c.note.empty()) flags += " (" + c.note + ")";
  return tag + "  " + rel + (c.inputs.empty() ? "" : "  [" + c.inputs + "]") + flags;
}

Rows report_rows(const InvariantReport& r) {
  Rows rows{{"name", r.name.empty() ? "-" : r.name},
            {"n r m", std::to_string(r.n) + " " + std::to_string(r.r) + " " + std::to_string(r.m)},
            {"r_polar m_polar", std::to_string(r.r_polar) + " " + std::to_string(r.m_polar)},
            {"fan", cones_str(r.fan)},
            {"mult", r.mult.get_str()},
            {"G", r.G.str()},
            {"k k_hat h", r.k.get_str() + " " + r.k_hat.get_str() + " " + r.h.get_str()},
            {"G_Q", r.G_Q.str() + "  (g_Q = " + r.g_Q.get_str() + ")"},
            {"G_hat", r.G_hat.str() + "  (order " + r.g_hat.get_str() + ")"},
            {"|Q| |Q polar|", r.modulus_Q.get_str() + " " + r.modulus_Q_polar.get_str()},
            {"n!Vol conv(V)", r.volume_V.get_str()},
            {"(-K_X)^n", r.degree_X.get_str()},
            {"(-kK_X)^n", r.scaled_degree_X.get_str()},
            {"(-K_Y)^n", r.degree_Y.get_str()},
            {"(-k_hat K_Y)^n", r.scaled_degree_Y_khat.get_str()},
            {"(-K_Z polar)^n", r.degree_Z_polar.get_str()},
            {"Q-Fano", yes(r.qfano)},
            {"canonical", yes(r.canonical)},
            {"mult polar", r.mult_polar ? r.mult_polar->get_str() : "-"},
            {"Q", pretty(r.Q)},
            {"W", pretty(r.W)},
            {"V polar", pretty(r.V_polar)},
            {"Q polar", pretty(r.Q_polar)},
            {"A", pretty(r.A)}};
  for (const auto& c : r.checks) rows.push_back({"check " + c.name, (c.holds ? "ok  " : "FAIL  ") + c.lhs + " vs " + c.rhs});
  for (const auto& c : r.certificates) rows.push_back({"bound " + c.name, cert_line(c)});
  return rows;
}

InvariantReport analyze_path(const std::string& path) {
  InputDocument doc = load_document(path);
  return make_report(analyze(resolve_fan(doc)), doc.name);
}

int cmd_analyze(const std::string& path) {
  InvariantReport r = analyze_path(path);
  emit(report_to_json(r), report_rows(r));
  return 0;
}

int cmd_verify(const std::string& path) {
  InvariantReport r = analyze_path(path);
  for (const auto& c : r.checks)
    if (!c.holds) std::cerr << "check failed: " << c.name << ": " << c.lhs << " vs " << c.rhs << "\n";
  for (const auto& c : r.certificates)
    if (!c.satisfied) std::cerr << (c.hard && !c.conjectural ? "certificate failed: " : "warning: ") << c.name << ": "
                                << cert_line(c) << "\n";
  json j{{"name", r.name}, {"passes", r.passes()}, {"checks", json::array()}, {"certificates", json::array()}};
  for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
  for (const auto& c : r.certificates) j["certificates"].push_back(certificate_to_json(c));
  Rows rows{{"name", r.name.empty() ? "-" : r.name}, {"verdict", r.passes() ? "pass" : "FAIL"}};
  for (const auto& c : r.checks) rows.push_back({"check " + c.name, c.holds ? "ok" : "FAIL"});
  for (const auto& c : r.certificates) rows.push_back({"bound " + c.name, cert_line(c)});
  emit(j, rows);
  return r.passes() ? 0 : 1;
}

int cmd_gale(const std::string& path) {
  InputDocument doc = load_document(path);
  IntMatrix g = gale_dual(doc.matrix);
  MatrixClass cls = classify_matrix(doc.matrix);
  json j{{"input", matrix_to_json(doc.matrix)},
         {"role", role_name(doc.role)},
         {"gale_dual", matrix_to_json(g)},
         {"is_F", cls.is_F},
         {"is_CF", cls.is_CF},
         {"is_W", cls.is_W},
         {"violated", cls.violated}};
  emit(j, {{"input", pretty(doc.matrix)},
           {"gale dual", pretty(g)},
           {"F / CF / W", yes(cls.is_F) + " / " + yes(cls.is_CF) + " / " + yes(cls.is_W)}});
  return 0;
}

int cmd_polar(const std::string& path) {
  InputDocument doc = load_document(path);
  IntMatrix v = document_rays(doc);
  Polytope p = facet_enumeration(v);
  RatMatrix pv = polar_vertices(p);
  Int k = denominator_lcm(pv);
  bool refl = is_reflexive(p);
  json j{{"polar_vertices", matrix_to_json(pv)}, {"index", int_to_json(k)}, {"reflexive", refl},
         {"facets", p.facets.size()}};
  Rows rows{{"polar vertices", pretty(pv)}, {"index", k.get_str()}, {"reflexive", yes(refl)}};
  if (k > 1 || !is_integral(pv)) {
    IntMatrix kv = to_int(pv.scaled(Rat(k)));
    j["scaled_polar_vertices"] = matrix_to_json(kv);
    j["polar_weights"] = matrix_to_json(gale_dual(kv));
    rows.push_back({"k * polar", pretty(kv)});
  } else {
    j["polar_weights"] = matrix_to_json(gale_dual(to_int(pv)));
  }
  emit(j, rows);
  return 0;
}

int cmd_volume(const std::string& path) {
  InputDocument doc = load_document(path);
  IntMatrix v = document_rays(doc);
  Polytope p = facet_enumeration(v);
  Rat vol = normalized_volume(p);
  json j{{"normalized_volume", rat_to_json(vol)}, {"vertices", p.vertices.size()}, {"facets", p.facets.size()}};
  Rows rows{{"n!Vol", vol.get_str()},
            {"vertices", std::to_string(p.vertices.size())},
            {"facets", std::to_string(p.facets.size())}};
  if (origin_in_interior(p)) {
    std::size_t interior = interior_lattice_points(p).size();
    j["interior_lattice_points"] = interior;
    rows.push_back({"interior points", std::to_string(interior)});
  }
  emit(j, rows);
  return 0;
}

int cmd_cover(const std::string& path) {
  InputDocument doc = load_document(path);
  CoveringData d = analyze(resolve_fan(doc));
  UnitaryCover u = unitary_cover(d);
  json j{{"W", matrix_to_json(d.W)},
         {"B", matrix_to_json(d.B)},
         {"G", group_to_json(d.G)},
         {"mult", int_to_json(d.mult)},
         {"unitary", json{{"V1", matrix_to_json(u.V1)}, {"mult", int_to_json(u.mult)}, {"index", int_to_json(u.index)}}}};
  emit(j, {{"universal cover W", pretty(d.W)},
           {"B", pretty(d.B)},
           {"G", d.G.str()},
           {"mult", d.mult.get_str()},
           {"unitary cover V1", pretty(u.V1)},
           {"mult V1", u.mult.get_str()},
           {"index V1", u.index.get_str()}});
  return 0;
}

RatVec parse_point(const std::string& s) {
  RatVec w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(rat_from_json(json(item)));
  if (w.empty()) throw Error(ErrorCode::InvalidInput, "empty --point");
  return w;
}

int cmd_fan(const std::string& path, const std::string& point) {
  InputDocument doc = load_document(path);
  IntMatrix q = document_weights(doc);
  RatVec w = point.empty() ? to_ratvec(anticanonical_class(q)) : parse_point(point);
  if (w.size() != q.rows()) throw Error(ErrorCode::InvalidInput, "--point needs " + std::to_string(q.rows()) + " entries");
  FanData fan = fan_from_point(q, w);
  FanCheck fc = check_fan(fan);
  bool qf = is_qfano_weight(q, fan.cones);
  json j{{"rays", matrix_to_json(fan.rays)}, {"fan", cones_to_json(fan.cones)}, {"complete", fc.complete},
         {"simplicial", fc.simplicial}, {"qfano", qf}};
  emit(j, {{"rays", pretty(fan.rays)},
           {"fan", cones_str(fan.cones)},
           {"complete", yes(fc.complete)},
           {"simplicial", yes(fc.simplicial)},
           {"Q-Fano", yes(qf)}});
  return 0;
}

int cmd_qfano(const std::string& path) {
  InputDocument doc = load_document(path);
  FanData given = resolve_fan(doc);
  IntMatrix q = gale_dual(given.rays);
  bool qf = is_qfano_weight(q, given.cones);
  bool gor = is_gorenstein_weight(q, given.cones);
  FanData rep = qfano_representative(given.rays);
  GkzCone nef = nef_cone(q, given.cones);
  json j{{"fan", cones_to_json(given.cones)},
         {"qfano", qf},
         {"gorenstein", gor},
         {"anticanonical_class", intvec_to_json(anticanonical_class(q))},
         {"nef_rays", matrix_to_json(nef.rays())},
         {"qfano_fan", cones_to_json(rep.cones)}};
  emit(j, {{"fan", cones_str(given.cones)},
           {"Q-Fano", yes(qf)},
           {"Gorenstein", yes(gor)},
           {"nef cone rays", pretty(nef.rays())},
           {"Q-Fano fan", cones_str(rep.cones)}});
  return 0;
}

int cmd_classify(const std::string& path, long factor, bool fano) {
  InputDocument doc = load_document(path);
  IntMatrix q = document_weights(doc);
  if (factor < 1) throw Error(ErrorCode::InvalidInput, "--factor must be positive");
  Family f = fano ? enumerate_fano_family(q) : enumerate_qgorenstein_family(q, Int(factor));
  json members = json::array();
  Rows rows{{"weights", pretty(q)},
            {"factor", f.h.get_str()},
            {"group", f.torsion.ambient().str()},
            {"subgroups", std::to_string(f.members.size())},
            {"classes", std::to_string(f.class_count())}};
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const FamilyMember& mb = f.members[i];
    json gens = json::array();
    for (const auto& g : mb.subgroup.generators) gens.push_back(intvec_to_json(g));
    json m{{"order", int_to_json(mb.mult)}, {"generators", gens}, {"V", matrix_to_json(mb.V)}, {"reduced", mb.reduced}};
    m["nonprimitive_column"] = mb.nonprimitive_column ? json(*mb.nonprimitive_column + 1) : json(nullptr);
    m["class"] = mb.cls ? json(*mb.cls + 1) : json(nullptr);
    members.push_back(m);
    std::string tag = mb.reduced ? "class " + std::to_string(*mb.cls + 1)
                                 : "rejected: column " + std::to_string(*mb.nonprimitive_column + 1) + " not primitive";
    rows.push_back({"|H| = " + mb.mult.get_str(), tag + "\n" + pretty(mb.V)});
  }
  json j{{"weights", matrix_to_json(q)},
         {"factor", int_to_json(f.h)},
         {"group", json{{"factors", intvec_to_json(f.torsion.factors)}}},
         {"members", members},
         {"classes", f.class_count()}};
  emit(j, rows);
  return 0;
}

int cmd_bounds(std::size_t n, std::size_t r, long k, bool fake, bool conj) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "--index must be positive");
  Int kk(k);
  json j{{"n", n}, {"r", r}, {"k", k}};
  Rows rows;
  j["sylvester"] = int_to_json(sylvester(n));
  j["mcmullen"] = int_to_json(mcmullen(n, r));
  j["fano"] = int_to_json(fano_bound(n, r));
  rows.push_back({"fano", fano_bound(n, r).get_str()});
  if (k > 1) {
    j["qgorenstein"] = int_to_json(qgorenstein_bound(n, r, kk));
    rows.push_back({"qgorenstein", j["qgorenstein"].dump()});
  }
  j["akln"] = int_to_json(akln_bound(n));
  rows.push_back({"akln", akln_bound(n).get_str()});
  if (fake) {
    j["fake_wps"] = int_to_json(fake_wps_bound(n, kk));
    rows.push_back({"fake_wps", fake_wps_bound(n, kk).get_str()});
  }
  if (conj) {
    if (k < 2) throw Error(ErrorCode::OutOfDomain, "the conjectural bound needs --index >= 2");
    j["conjecture"] = int_to_json(conjecture_bound(n, r, kk));
    rows.push_back({"conjecture", conjecture_bound(n, r, kk).get_str() + "  (conjectural)"});
  }
  rows.push_back({"sylvester s_n", sylvester(n).get_str()});
  rows.push_back({"mcmullen mu_{n,r}", mcmullen(n, r).get_str()});
  emit(j, rows);
  return 0;
}

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonIntegerQuotient:
    case ErrorCode::SingularGram:
    case ErrorCode::NonIntegralFactor:
    case ErrorCode::TooLarge:
    case ErrorCode::InconsistentAction:
      return false;
    default:
      return true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of complete toric varieties from fan and weight matrices"};
  app.add_flag("--json", as_json, "print JSON instead of a table");
  app.require_subcommand(1);

  std::string path, point;
  long factor = 1, index = 1;
  bool fano = false, fake = false, conj = false;
  std::size_t dim = 0, rank_ = 0;

  auto with_path = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("path", path, "input document (JSON)")->required();
    return s;
  };
  CLI::App* analyze_cmd = with_path("analyze", "full invariant report");
  CLI::App* gale_cmd = with_path("gale", "Gale dual and matrix classes");
  CLI::App* polar_cmd = with_path("polar", "vertices of the polar polytope");
  CLI::App* volume_cmd = with_path("volume", "normalized volume of conv(V)");
  CLI::App* cover_cmd = with_path("cover", "universal and unitary 1-coverings");
  CLI::App* fan_cmd = with_path("fan", "fan cut out by a point of the moving cone");
  fan_cmd->add_option("--point", point, "comma separated weight point, default Q.1");
  CLI::App* qfano_cmd = with_path("qfano", "Q-Fano test and the anticanonical fan");
  CLI::App* classify_cmd = with_path("classify", "quotients by subgroups of the weight group");
  classify_cmd->add_option("--factor", factor, "factor h")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--fano", fano, "require a Fano weight matrix");
  CLI::App* verify_cmd = with_path("verify", "identities and certificates; exit 1 on failure");
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "multiplicity upper bounds");
  bounds_cmd->add_option("--dim", dim, "dimension n")->required()->check(CLI::Range(2, 64));
  bounds_cmd->add_option("--rank", rank_, "rank r'")->required()->check(CLI::Range(1, 1000));
  bounds_cmd->add_option("--index", index, "Gorenstein index k")->check(CLI::PositiveNumber);
  bounds_cmd->add_flag("--fake-wps", fake, "bound for fake weighted projective spaces");
  bounds_cmd->add_flag("--conjecture", conj, "conjectural bound (k >= 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << dump(json{{"error", json{{"code", "InvalidInput"}, {"message", e.what()}}}});
    return 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path);
    if (*gale_cmd) return cmd_gale(path);
    if (*polar_cmd) return cmd_polar(path);
    if (*volume_cmd) return cmd_volume(path);
    if (*cover_cmd) return cmd_cover(path);
    if (*fan_cmd) return cmd_fan(path, point);
    if (*qfano_cmd) return cmd_qfano(path);
    if (*classify_cmd) return cmd_classify(path, factor, fano);
    if (*verify_cmd) return cmd_verify(path);
    if (*bounds_cmd) return cmd_bounds(dim, rank_, index, fake, conj);
  } catch (const Error& e) {
    std::cout << dump(error_to_json(e));
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << dump(json{{"error", json{{"code", "Internal"}, {"message", e.what()}}}});
    return 1;
  }
  return 1;
}
