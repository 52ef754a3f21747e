#include "splitquat/cli/emit.hpp"

#include <sstream>

#include "splitquat/errors.hpp"

namespace splitquat::cli {

namespace {

Json integer_or_string(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json optional_point(const std::optional<ProjPoint>& p) { return p ? to_json(*p) : Json(nullptr); }

Json label_json(const std::optional<Label>& l) { return l ? Json::array({(*l)[0], (*l)[1]}) : Json(nullptr); }

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json header(const QuatPoly& c) {
  Json j;
  j["polynomial"] = c.to_string();
  j["algebra"] = std::string(to_string(c.signature()));
  j["backend"] = std::string(to_string(c.backend()));
  return j;
}

Json quadrance_or_null(const ProjPoint& a, const ProjPoint& b) {
  try {
    return to_json(quadrance(a, b));
  } catch (const NullPoint&) {
    return nullptr;
  }
}

std::string csv_point(const std::optional<ProjPoint>& p) {
  if (!p) return ",,";
  auto c = p->coords();
  return c[0].to_string() + "," + c[1].to_string() + "," + c[2].to_string();
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.is_exact()) return s.rational().get_str();
  return s.to_double();
}

Json to_json(const Quaternion& q) {
  Json coords = Json::array();
  for (const auto& c : q.coords()) coords.push_back(to_json(c));
  return {{"text", q.to_string()}, {"coords", coords}};
}

Json to_json(const ProjPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(c.is_exact() ? integer_or_string(c.rational()) : Json(c.to_double()));
  return out;
}

Json to_json(const ProjLine& l) { return to_json(pole(l)); }

Json to_json(const RealPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"text", p.to_string()}, {"coeffs", coeffs}};
}

Json to_json(const QuatPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"text", p.to_string()}, {"coeffs", coeffs}};
}

Json to_json(const RealRoot& r) {
  if (!r.is_surd()) return to_json(r.base);
  return {{"text", r.to_string()},
          {"base", to_json(r.base)},
          {"radicand", to_json(r.radicand)},
          {"sign", r.branch},
          {"approx", r.approx()}};
}

Json to_json(const RootReport& r) {
  Json real = Json::array(), quads = Json::array(), unresolved = Json::array();
  for (const auto& x : r.real) real.push_back(to_json(x));
  for (const auto& q : r.complex_quadratics) quads.push_back(to_json(q));
  for (const auto& q : r.unresolved) unresolved.push_back(to_json(q));
  Json out{{"real", real}, {"complex_quadratics", quads}};
  if (!unresolved.empty()) out["unresolved"] = unresolved;
  out["square_free"] = r.square_free;
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse_exact(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number()) return Scalar::floating(j.get<double>());
  throw std::invalid_argument("expected a scalar, got " + j.dump());
}

Quaternion quaternion_from_json(const Json& j, Signature sig) {
  const Json& c = j.is_object() ? j.at("coords") : j;
  if (!c.is_array() || c.size() != 4) throw std::invalid_argument("expected four coordinates, got " + c.dump());
  return {scalar_from_json(c[0]), scalar_from_json(c[1]), scalar_from_json(c[2]), scalar_from_json(c[3]), sig};
}

std::string leg_name(const FourBar& fb, std::size_t index) {
  const auto& l = fb.legs[index].label;
  if (l) return std::to_string((*l)[0]) + std::to_string((*l)[1]);
  return std::to_string(index + 1);
}

Json factor_report(const FactorizationSet& fs) {
  Json out = header(fs.polynomial);
  out["norm"] = to_json(fs.norm);
  out["norm_roots"] = to_json(fs.roots);
  out["genericity"] = {{"coefficients_independent", fs.genericity.coefficients_independent},
                       {"invertible_leading_remainders", fs.genericity.invertible_leading_remainders},
                       {"norm_square_free", fs.genericity.norm_square_free},
                       {"verdict", fs.genericity.verdict}};
  Json list = Json::array();
  for (std::size_t i = 0; i < fs.factorizations.size(); ++i) {
    const auto& f = fs.factorizations[i];
    list.push_back({{"index", i},
                    {"h1", to_json(f.h1)},
                    {"h2", to_json(f.h2)},
                    {"divisor", to_json(f.divisor)},
                    {"label", label_json(f.label)},
                    {"complement", fs.complement[i] ? Json(*fs.complement[i]) : Json(nullptr)}});
  }
  out["factorizations"] = list;
  out["warnings"] = strings(fs.warnings);
  return out;
}

Json norm_report(const QuatPoly& c, const RealPoly& norm, const RootReport& roots) {
  Json out = header(c);
  out["norm"] = to_json(norm);
  out["roots"] = to_json(roots);
  return out;
}

Json linkage_report(const FourBar& fb, const std::vector<std::optional<CouplerConic>>& conics) {
  Json out = header(fb.source);
  out["norm"] = to_json(fb.norm);
  out["norm_roots"] = to_json(fb.norm_roots);
  Json legs = Json::array();
  for (std::size_t i = 0; i < fb.legs.size(); ++i) {
    const Leg& leg = fb.legs[i];
    legs.push_back({{"name", leg_name(fb, i)},
                    {"label", label_json(leg.label)},
                    {"h1", to_json(leg.factorization.h1)},
                    {"h2", to_json(leg.factorization.h2)},
                    {"divisor", to_json(leg.factorization.divisor)},
                    {"fixed_joint", to_json(leg.fixed_joint)},
                    {"moving_joint", to_json(leg.moving_joint_initial)},
                    {"complement", fb.complement[i] ? Json(leg_name(fb, *fb.complement[i])) : Json(nullptr)}});
  }
  out["legs"] = legs;
  Json pairs = Json::array();
  auto idx = fb.complementary_pairs();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    auto [i, j] = idx[p];
    const Leg &h = fb.legs[i], &k = fb.legs[j];
    Json pair{{"legs", {leg_name(fb, i), leg_name(fb, j)}},
              {"leg_quadrances",
               {quadrance_or_null(h.fixed_joint, h.moving_joint_initial),
                quadrance_or_null(k.fixed_joint, k.moving_joint_initial)}},
              {"side_quadrances",
               {quadrance_or_null(h.fixed_joint, k.fixed_joint),
                quadrance_or_null(h.moving_joint_initial, k.moving_joint_initial)}}};
    if (p < conics.size() && conics[p]) {
      const CouplerConic& s = *conics[p];
      Json params = Json::array(), tangents = Json::array(), focal = Json::array();
      for (const auto& r : s.null_tangent_roots.real) params.push_back(to_json(r));
      for (const auto& l : s.null_tangents) tangents.push_back(to_json(l));
      for (const auto& f : s.focal_points) focal.push_back(to_json(f));
      pair["conic"] = {{"sigma", to_json(s.sigma)},
                       {"content", to_json(s.content)},
                       {"reduced", to_json(s.reduced)},
                       {"quartic", to_json(s.quartic)},
                       {"null_tangent_params", params},
                       {"null_tangents", tangents},
                       {"focal_points", focal},
                       {"warnings", strings(s.warnings)}};
    } else {
      pair["conic"] = nullptr;
    }
    pairs.push_back(pair);
  }
  out["pairs"] = pairs;
  out["warnings"] = strings(fb.warnings);
  return out;
}

Json verify_report(const FourBar& fb, const VerificationReport& report) {
  Json out = header(fb.source);
  out["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", std::string(to_string(c.status))},
                      {"comparisons", c.comparisons},
                      {"max_residual", c.max_residual},
                      {"failures", strings(c.failures)},
                      {"notes", strings(c.notes)}});
  }
  out["checks"] = checks;
  out["warnings"] = strings(report.warnings);
  return out;
}

Json trajectory_report(const FourBar& fb, const Trajectory& traj, const std::vector<ProjPoint>& tracers) {
  Json out = header(fb.source);
  Json names = Json::array(), tr = Json::array(), rows = Json::array();
  for (std::size_t i = 0; i < fb.legs.size(); ++i) names.push_back(leg_name(fb, i));
  for (const auto& p : tracers) tr.push_back(to_json(p));
  for (const auto& row : traj.rows) {
    Json joints = Json::object(), images = Json::array();
    for (std::size_t i = 0; i < row.moving_joints.size(); ++i)
      joints[leg_name(fb, i)] = optional_point(row.moving_joints[i]);
    for (const auto& p : row.tracers) images.push_back(optional_point(p));
    rows.push_back({{"t", to_json(row.t)},
                    {"null_position", row.null_position},
                    {"moving_joints", joints},
                    {"coupler", optional_point(row.coupler)},
                    {"tracers", images}});
  }
  out["legs"] = names;
  out["tracers"] = tr;
  out["rows"] = rows;
  out["warnings"] = strings(traj.warnings);
  return out;
}

Json midpoints_report(const ProjPoint& a, const ProjPoint& b, const Midpoints& m) {
  Json pts = Json::array();
  for (const auto& p : m.points) {
    Json entry{{"point", to_json(p)}};
    entry["quadrance_to_a"] = quadrance_or_null(in_backend(a, p.backend()), p);
    entry["quadrance_to_b"] = quadrance_or_null(p, in_backend(b, p.backend()));
    pts.push_back(entry);
  }
  return {{"a", to_json(a)}, {"b", to_json(b)}, {"exact", m.exact}, {"midpoints", pts}};
}

Json quadrilateral_report(const ProjPoint& a12, const ProjPoint& a34, const ProjPoint& b34,
                          const EqualQuadrilateral& q) {
  Json sols = Json::array();
  for (std::size_t i = 0; i < q.b12.size(); ++i) {
    Backend b = q.b12[i].backend();
    ProjPoint A12 = in_backend(a12, b), A34 = in_backend(a34, b), B34 = in_backend(b34, b);
    sols.push_back({{"center", to_json(q.centers[i])},
                    {"b12", to_json(q.b12[i])},
                    {"q_a12_a34", quadrance_or_null(A12, A34)},
                    {"q_b12_b34", quadrance_or_null(q.b12[i], B34)},
                    {"q_a12_b12", quadrance_or_null(A12, q.b12[i])},
                    {"q_a34_b34", quadrance_or_null(A34, B34)}});
  }
  return {{"a12", to_json(a12)}, {"a34", to_json(a34)}, {"b34", to_json(b34)}, {"exact", q.exact}, {"solutions", sols}};
}

Json error_report(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

std::string factor_csv(const FactorizationSet& fs) {
  std::ostringstream out;
  out << "index,label,h1,h2,divisor,complement\n";
  for (std::size_t i = 0; i < fs.factorizations.size(); ++i) {
    const auto& f = fs.factorizations[i];
    out << i << ',' << (f.label ? std::to_string((*f.label)[0]) + std::to_string((*f.label)[1]) : "") << ','
        << f.h1.to_string() << ',' << f.h2.to_string() << ',' << f.divisor.to_string() << ','
        << (fs.complement[i] ? std::to_string(*fs.complement[i]) : "") << '\n';
  }
  return out.str();
}

std::string trajectory_csv(const FourBar& fb, const Trajectory& traj, std::size_t tracer_count) {
  std::ostringstream out;
  out << "t,null_position";
  for (std::size_t i = 0; i < fb.legs.size(); ++i) {
    std::string n = "B" + leg_name(fb, i);
    out << ',' << n << "_x1," << n << "_x2," << n << "_x3";
  }
  out << ",S_x1,S_x2,S_x3";
  for (std::size_t i = 0; i < tracer_count; ++i) {
    std::string n = "P" + std::to_string(i + 1);
    out << ',' << n << "_x1," << n << "_x2," << n << "_x3";
  }
  out << '\n';
  for (const auto& row : traj.rows) {
    out << row.t.to_string() << ',' << (row.null_position ? 1 : 0);
    for (const auto& p : row.moving_joints) out << ',' << csv_point(p);
    out << ',' << csv_point(row.coupler);
    for (const auto& p : row.tracers) out << ',' << csv_point(p);
    out << '\n';
  }
  return out.str();
}

}  // namespace splitquat::cli
