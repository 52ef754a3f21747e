#include "splitquat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "splitquat/errors.hpp"

namespace splitquat {

namespace {

Backend common(Backend a, Backend b) { return a == b ? a : Backend::Float; }

double point_residual(const ProjPoint& a, const ProjPoint& b) {
  auto u = in_backend(a, Backend::Float).coords(), v = in_backend(b, Backend::Float).coords();
  double x = u[1].to_double() * v[2].to_double() - u[2].to_double() * v[1].to_double();
  double y = u[2].to_double() * v[0].to_double() - u[0].to_double() * v[2].to_double();
  double z = u[0].to_double() * v[1].to_double() - u[1].to_double() * v[0].to_double();
  return std::sqrt(x * x + y * y + z * z);
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det = m[0][0].like(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c; r < n; ++r) {
      if (m[r][c].is_exact() ? !m[r][c].is_zero() : m[r][c].abs() > m[pivot][c].abs()) {
        pivot = r;
        if (m[r][c].is_exact()) break;
      }
    }
    if (m[pivot][c].is_exact() ? m[pivot][c].is_zero() : m[pivot][c].to_double() == 0.0) return det.like(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

class Recorder {
 public:
  Recorder(std::string id, std::string description) {
    result_.id = std::move(id);
    result_.description = std::move(description);
  }

  void scalars(const Scalar& a, const Scalar& b, const std::string& what) {
    Backend cb = common(a.backend(), b.backend());
    Scalar d = a.to_backend(cb) - b.to_backend(cb);
    record(d.is_zero(), cb == Backend::Float ? std::fabs(d.to_double()) : 0.0,
           what + ": " + a.to_string() + " != " + b.to_string());
  }

  void points(const ProjPoint& a, const ProjPoint& b, const std::string& what) {
    Backend cb = common(a.backend(), b.backend());
    bool ok = in_backend(a, cb) == in_backend(b, cb);
    record(ok, cb == Backend::Float ? point_residual(a, b) : 0.0,
           what + ": " + a.to_string() + " != " + b.to_string());
  }

  void truth(bool ok, double residual, const std::string& what) { record(ok, residual, what); }

  // Runs one comparison group; degenerate geometry is noted, not failed.
  void attempt(const std::string& context, const std::function<void()>& f) {
    try {
      f();
    } catch (const Degenerate& e) {
      note(context + ": " + e.what());
    } catch (const NullPoint& e) {
      note(context + ": " + e.what());
    }
  }

  void note(std::string s) { result_.notes.push_back(std::move(s)); }
  void fail(std::string s) { result_.failures.push_back(std::move(s)); }

  CheckResult finish() {
    result_.status = !result_.failures.empty() ? CheckStatus::Failed
                     : result_.comparisons > 0 ? CheckStatus::Passed
                                               : CheckStatus::Skipped;
    return std::move(result_);
  }

  CheckResult skip(std::string why) {
    result_.notes.push_back(std::move(why));
    result_.status = CheckStatus::Skipped;
    return std::move(result_);
  }

 private:
  void record(bool ok, double residual, const std::string& what) {
    ++result_.comparisons;
    result_.max_residual = std::max(result_.max_residual, residual);
    if (!ok) result_.failures.push_back(what);
  }

  CheckResult result_;
};

std::string at(const Scalar& t) { return "t=" + t.to_string(); }

double collinear_residual(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto u = in_backend(a, Backend::Float).coords(), v = in_backend(b, Backend::Float).coords(), w = in_backend(c, Backend::Float).coords();
  auto d = [](const Scalar& s) { return s.to_double(); };
  return std::fabs(d(u[0]) * (d(v[1]) * d(w[2]) - d(v[2]) * d(w[1])) -
                   d(u[1]) * (d(v[0]) * d(w[2]) - d(v[2]) * d(w[0])) +
                   d(u[2]) * (d(v[0]) * d(w[1]) - d(v[1]) * d(w[0])));
}

// Six points with labels form a complete quadrilateral whose four sides are
// null, and points with complementary labels share no side.
void check_quadrilateral(Recorder& rec, const std::vector<ProjPoint>& pts, const std::vector<Label>& labels,
                         const std::string& context) {
  std::vector<ProjLine> sides;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      ProjLine l = join(pts[a], pts[b]);
      std::vector<std::size_t> on;
      for (std::size_t c = 0; c < pts.size(); ++c)
        if (incident(l, pts[c])) on.push_back(c);
      if (on.size() < 3) continue;
      if (std::none_of(sides.begin(), sides.end(), [&](const ProjLine& s) { return s == l; })) {
        sides.push_back(l);
        members.push_back(on);
      }
    }
  rec.truth(sides.size() == 4, 0,
            context + ": expected 4 lines through 3 of the points, found " + std::to_string(sides.size()));
  for (std::size_t s = 0; s < sides.size(); ++s) {
    rec.truth(members[s].size() == 3, 0,
              context + ": line " + sides[s].to_string() + " contains " + std::to_string(members[s].size()) +
                  " points");
    rec.truth(is_null(sides[s]), 0, context + ": side " + sides[s].to_string() + " is not null");
    for (std::size_t i : members[s])
      for (std::size_t j : members[s])
        if (i < j && labels_disjoint(labels[i], labels[j]))
          rec.fail(context + ": opposite vertices " + to_string(labels[i]) + " and " + to_string(labels[j]) +
                   " share the side " + sides[s].to_string());
  }
}

bool has_six_labeled_legs(const FourBar& fb) {
  return fb.legs.size() == 6 &&
         std::all_of(fb.legs.begin(), fb.legs.end(), [](const Leg& l) { return l.label.has_value(); });
}

struct Context {
  const FourBar& fb;
  std::vector<Scalar> samples;
  std::vector<QuatPoly> paths;
  std::vector<Label> labels;
};

CheckResult theorem1(const Context& ctx) {
  Recorder rec("theorem1", "equal opposite quadrances q(H1,H2) = q(K1,K2), q(H1,K1) = q(H2,K2)");
  const auto& legs = ctx.fb.legs;
  for (auto [i, j] : ctx.fb.complementary_pairs()) {
    const ProjPoint &h1 = legs[i].fixed_joint, &k1 = legs[j].fixed_joint;
    const ProjPoint &h2 = legs[i].moving_joint_initial, &k2 = legs[j].moving_joint_initial;
    std::string pair = "legs " + std::to_string(i) + "/" + std::to_string(j);
    rec.attempt(pair + " initial position", [&] {
      rec.scalars(quadrance(h1, h2), quadrance(k1, k2), pair + " initial legs");
      rec.scalars(quadrance(h1, k1), quadrance(h2, k2), pair + " initial sides");
    });
    for (const auto& t : ctx.samples) {
      rec.attempt(pair + " " + at(t), [&] {
        ProjPoint h2t(ctx.paths[i].evaluate(t)), k2t(ctx.paths[j].evaluate(t));
        Scalar leg_h = quadrance(h1, h2t);
        rec.scalars(leg_h, quadrance(k1, k2t), pair + " legs at " + at(t));
        rec.scalars(quadrance(h1, k1), quadrance(h2t, k2t), pair + " sides at " + at(t));
        rec.scalars(leg_h, quadrance(h1, h2), pair + " leg quadrance constant at " + at(t));
      });
    }
  }
  if (ctx.fb.complementary_pairs().empty()) return rec.skip("no complementary pair of legs");
  return rec.finish();
}

CheckResult theorem2(const Context& ctx, const std::vector<std::optional<CouplerConic>>& conics) {
  Recorder rec("theorem2", "reflection in the tangent of S at S(t) maps H1 to K2(t) and K1 to H2(t); "
                           "H1 and K1 are focal points of S");
  const auto pairs = ctx.fb.complementary_pairs();
  if (pairs.empty()) return rec.skip("no complementary pair of legs");
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    std::string pair = "legs " + std::to_string(i) + "/" + std::to_string(j);
    if (!conics[p]) {
      rec.fail(pair + ": coupler conic is degenerate");
      continue;
    }
    const CouplerConic& s = *conics[p];
    const ProjPoint &h1 = ctx.fb.legs[i].fixed_joint, &k1 = ctx.fb.legs[j].fixed_joint;
    for (const auto& t : ctx.samples) {
      rec.attempt(pair + " " + at(t), [&] {
        ProjLine tangent = s.tangent_at(t);
        ProjPoint h2t(ctx.paths[i].evaluate(t)), k2t(ctx.paths[j].evaluate(t));
        rec.points(reflect(tangent, h1), k2t, pair + " reflected H1 at " + at(t));
        rec.points(reflect(tangent, k1), h2t, pair + " reflected K1 at " + at(t));
      });
    }
    if (ctx.fb.signature() == Signature::Split) {
      for (const ProjPoint* joint : {&h1, &k1}) {
        Backend cb = s.focal_points.empty() ? joint->backend() : common(s.focal_points[0].backend(), joint->backend());
        bool found = std::any_of(s.focal_points.begin(), s.focal_points.end(),
                                 [&](const ProjPoint& f) { return in_backend(f, cb) == in_backend(*joint, cb); });
        rec.truth(found, 0, pair + ": fixed joint " + joint->to_string() + " is not a focal point");
      }
    }
  }
  return rec.finish();
}

CheckResult corollary1(const Context& ctx, const std::vector<std::optional<CouplerConic>>& conics) {
  Recorder rec("corollary1", "fixed and moving joints form complete quadrilaterals with null sides; "
                             "focal points equal the fixed joints");
  if (!has_six_labeled_legs(ctx.fb)) return rec.skip("requires six labeled legs (four real norm roots)");
  std::vector<ProjPoint> fixed, moving;
  for (const auto& leg : ctx.fb.legs) {
    fixed.push_back(leg.fixed_joint);
    moving.push_back(leg.moving_joint_initial);
  }
  rec.attempt("fixed joints", [&] { check_quadrilateral(rec, fixed, ctx.labels, "fixed joints"); });
  rec.attempt("initial moving joints", [&] { check_quadrilateral(rec, moving, ctx.labels, "initial moving joints"); });
  for (const auto& t : ctx.samples) {
    rec.attempt("moving joints at " + at(t), [&] {
      std::vector<ProjPoint> pts;
      for (const auto& path : ctx.paths) pts.emplace_back(path.evaluate(t));
      check_quadrilateral(rec, pts, ctx.labels, "moving joints at " + at(t));
    });
  }
  for (std::size_t p = 0; p < conics.size(); ++p) {
    if (!conics[p]) continue;
    const auto& focal = conics[p]->focal_points;
    rec.truth(focal.size() == 6, 0, "conic " + std::to_string(p) + ": " + std::to_string(focal.size()) + " focal points");
    for (const auto& a : fixed) {
      bool found = std::any_of(focal.begin(), focal.end(), [&](const ProjPoint& f) {
        Backend cb = common(f.backend(), a.backend());
        return in_backend(f, cb) == in_backend(a, cb);
      });
      rec.truth(found, 0, "conic " + std::to_string(p) + ": fixed joint " + a.to_string() + " is not a focal point");
    }
  }
  return rec.finish();
}

CheckResult corollary2(const Context& ctx) {
  Recorder rec("corollary2", "linked vertices are collinear: moving joints whose labels share an index, "
                             "fixed joints whose labels avoid an index");
  if (!has_six_labeled_legs(ctx.fb)) return rec.skip("requires six labeled legs (four real norm roots)");
  auto triples = [&](int r, bool containing) {
    std::vector<std::size_t> idx;
    for (std::size_t l = 0; l < ctx.labels.size(); ++l) {
      bool has = ctx.labels[l][0] == r || ctx.labels[l][1] == r;
      if (has == containing) idx.push_back(l);
    }
    return idx;
  };
  auto expect_collinear = [&](const std::vector<ProjPoint>& pts, const std::vector<std::size_t>& idx,
                              const std::string& what) {
    const ProjPoint &a = pts[idx[0]], &b = pts[idx[1]], &c = pts[idx[2]];
    rec.truth(collinear(a, b, c), a.backend() == Backend::Float ? collinear_residual(a, b, c) : 0.0,
              what + " " + to_string(ctx.labels[idx[0]]) + ", " + to_string(ctx.labels[idx[1]]) + ", " +
                  to_string(ctx.labels[idx[2]]) + " not collinear");
  };
  std::vector<ProjPoint> fixed, moving;
  for (const auto& leg : ctx.fb.legs) {
    fixed.push_back(leg.fixed_joint);
    moving.push_back(leg.moving_joint_initial);
  }
  for (int r = 1; r <= 4; ++r) {
    expect_collinear(fixed, triples(r, false), "fixed joints");
    expect_collinear(moving, triples(r, true), "initial moving joints");
    for (const auto& t : ctx.samples) {
      rec.attempt("moving joints at " + at(t), [&] {
        std::vector<ProjPoint> pts;
        for (const auto& path : ctx.paths) pts.emplace_back(path.evaluate(t));
        expect_collinear(pts, triples(r, true), "moving joints at " + at(t));
      });
    }
  }
  return rec.finish();
}

CheckResult corollary3(const Context& ctx, const std::vector<std::optional<CouplerConic>>& conics) {
  Recorder rec("corollary3", "every real norm root is a null-tangent parameter of S");
  if (ctx.fb.norm_roots.real.empty()) return rec.skip("the norm polynomial has no real roots");
  for (std::size_t p = 0; p < conics.size(); ++p) {
    if (!conics[p]) {
      rec.fail("conic " + std::to_string(p) + " is degenerate");
      continue;
    }
    const auto& params = conics[p]->null_tangent_roots.real;
    std::vector<bool> used(params.size(), false);
    for (const auto& r : ctx.fb.norm_roots.real) {
      bool found = false;
      for (std::size_t q = 0; q < params.size() && !found; ++q) {
        if (used[q]) continue;
        bool same = r.backend() == params[q].backend()
                        ? same_root(r, params[q])
                        : std::fabs(r.approx() - params[q].approx()) <= tolerance() * (1 + std::fabs(r.approx()));
        if (same) used[q] = found = true;
      }
      rec.truth(found, 0, "conic " + std::to_string(p) + ": norm root " + r.to_string() + " is not a null-tangent parameter");
    }
    rec.attempt("conic " + std::to_string(p) + " tangents", [&] {
      for (const auto& l : conics[p]->null_tangents)
        rec.truth(is_null(l), 0, "conic " + std::to_string(p) + ": tangent " + l.to_string() + " is not null");
    });
  }
  return rec.finish();
}

CheckResult figure(const Context& ctx, const std::vector<std::optional<CouplerConic>>& conics) {
  Recorder rec("figure", "lines A_l B_l(t) concur at S(t); the reflection in the tangent maps every A_l to "
                         "B_complement(l)(t); tangent poles lie on a conic; joins of linked vertices are null");
  if (ctx.fb.signature() != Signature::Split) return rec.skip("null-circle relations need the split signature");
  if (conics.empty() || !conics[0]) return rec.skip("no coupler conic available");
  const CouplerConic& s = *conics[0];
  const auto& legs = ctx.fb.legs;
  std::vector<std::vector<Scalar>> pole_rows;
  for (const auto& t : ctx.samples) {
    rec.attempt("concurrency at " + at(t), [&] {
      ProjPoint st = coupler_point(s, t);
      for (std::size_t l = 0; l < legs.size(); ++l) {
        ProjLine line = join(legs[l].fixed_joint, ProjPoint(ctx.paths[l].evaluate(t)));
        Backend cb = common(line.backend(), st.backend());
        rec.truth(incident(ProjLine(line.rep().to_backend(cb)), in_backend(st, cb)), 0,
                  "leg " + std::to_string(l) + " line misses S(" + t.to_string() + ")");
      }
    });
    rec.attempt("reflection at " + at(t), [&] {
      ProjLine tangent = s.tangent_at(t);
      for (std::size_t l = 0; l < legs.size(); ++l) {
        if (!ctx.fb.complement[l]) continue;
        ProjPoint target(ctx.paths[*ctx.fb.complement[l]].evaluate(t));
        rec.points(reflect(tangent, legs[l].fixed_joint), target,
                   "reflection of leg " + std::to_string(l) + " fixed joint at " + at(t));
      }
      auto c = pole(tangent).coords();
      pole_rows.push_back({c[0] * c[0], c[1] * c[1], c[2] * c[2], c[0] * c[1], c[0] * c[2], c[1] * c[2]});
    });
  }
  if (pole_rows.size() >= 6) {
    pole_rows.resize(6);
    Scalar det = determinant(pole_rows);
    rec.truth(det.is_zero(), det.is_exact() ? 0.0 : std::fabs(det.to_double()),
              "tangent poles do not lie on a conic (determinant " + det.to_string() + ")");
  } else {
    rec.note("fewer than six usable samples for the pole conic");
  }
  if (has_six_labeled_legs(ctx.fb)) {
    for (std::size_t a = 0; a < legs.size(); ++a)
      for (std::size_t b = a + 1; b < legs.size(); ++b) {
        if (!labels_intersect(ctx.labels[a], ctx.labels[b])) continue;
        std::string name = to_string(ctx.labels[a]) + "-" + to_string(ctx.labels[b]);
        rec.attempt("fixed join " + name, [&] {
          rec.truth(is_null(join(legs[a].fixed_joint, legs[b].fixed_joint)), 0, "join of A" + name + " is not null");
        });
        rec.attempt("moving join " + name, [&] {
          rec.truth(is_null(join(legs[a].moving_joint_initial, legs[b].moving_joint_initial)), 0,
                    "join of initial B" + name + " is not null");
        });
        for (const auto& t : ctx.samples)
          rec.attempt("moving join " + name + " at " + at(t), [&] {
            ProjLine l = join(ProjPoint(ctx.paths[a].evaluate(t)), ProjPoint(ctx.paths[b].evaluate(t)));
            rec.truth(is_null(l), 0, "join of B" + name + " at " + at(t) + " is not null");
          });
      }
  }
  return rec.finish();
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed:
      return "passed";
    case CheckStatus::Failed:
      return "failed";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Failed; });
}

const CheckResult* VerificationReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<Scalar> default_samples() {
  return {Scalar::rational(-7, 3), Scalar::rational(-1, 2), Scalar::rational(1, 3), Scalar::rational(5, 4),
          Scalar::rational(5, 2),  Scalar::rational(7, 2),  Scalar::rational(13, 3)};
}

VerificationReport verify_linkage(const FourBar& fb, const VerifyOptions& options) {
  VerificationReport report;
  report.backend = fb.backend();
  report.signature = fb.signature();
  report.warnings = fb.warnings;

  Context ctx{fb, {}, {}, {}};
  for (const auto& t : options.samples.empty() ? default_samples() : options.samples)
    ctx.samples.push_back(t.to_backend(fb.backend()));
  for (const auto& leg : fb.legs) {
    ctx.paths.push_back(joint_path_polynomial(leg));
    ctx.labels.push_back(leg.label.value_or(Label{0, 0}));
  }

  std::vector<std::optional<CouplerConic>> conics;
  for (auto [i, j] : fb.complementary_pairs()) {
    try {
      conics.emplace_back(coupler_conic(fb.legs[i], fb.legs[j]));
      for (const auto& w : conics.back()->warnings) report.warnings.push_back(w);
    } catch (const Degenerate& e) {
      conics.emplace_back(std::nullopt);
      report.warnings.push_back(std::string("coupler conic: ") + e.what());
    }
  }

  report.checks.push_back(theorem1(ctx));
  report.checks.push_back(theorem2(ctx, conics));
  if (fb.signature() == Signature::Split) {
    report.checks.push_back(corollary1(ctx, conics));
    report.checks.push_back(corollary2(ctx));
    report.checks.push_back(corollary3(ctx, conics));
  } else {
    for (const char* id : {"corollary1", "corollary2", "corollary3"}) {
      CheckResult skipped;
      skipped.id = id;
      skipped.description = "null-circle statement";
      skipped.notes.push_back("the Hamiltonian signature has no real null points");
      report.checks.push_back(std::move(skipped));
    }
  }
  report.checks.push_back(figure(ctx, conics));
  return report;
}

}  // namespace splitquat
