// Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "splitquat/cli/app.hpp"
#include "splitquat/cli/parse.hpp"
#include "splitquat/errors.hpp"
#include "splitquat/verify.hpp"

using namespace splitquat;
using fixtures::qt;

namespace {

const Signature S = Signature::Split;
const Signature H = Signature::Hamiltonian;

mpq_class r(long n, long d = 1) { return mpq_class(n, d); }

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  template <class F>
  double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  void note(std::string s) { notes_.push_back(std::move(s)); }

  bool report(std::ostream& out) const {
    bool ok = failures_.empty();
    out << (ok ? "PASS" : "FAIL") << "  " << name_;
    for (const auto& n : notes_) out << "  [" << n << "]";
    out << "\n";
    for (const auto& f : failures_) out << "        - " << f << "\n";
    return ok;
  }

 private:
  std::string name_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

// Runs the function, turning library exceptions into failures.
void guarded(Criterion& c, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "splitquat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

bool has_pair(const std::vector<Factorization>& fs, const Quaternion& h1, const Quaternion& h2) {
  return std::any_of(fs.begin(), fs.end(), [&](const Factorization& f) { return f.h1 == h1 && f.h2 == h2; });
}

// Factorizations as printed in the reference examples, C = (t - h1)(t - h2).
std::vector<std::pair<Quaternion, Quaternion>> example2_pairs() {
  return {{qt(1, 0, 1, 0), qt(1, 0, 0, 2)},
          {qt(1, 0, r(8, 5), r(6, 5)), qt(1, 0, r(-3, 5), r(4, 5))},
          {qt(r(-1, 2), r(-3, 2), r(-1, 2), r(3, 2)), qt(r(5, 2), r(3, 2), r(3, 2), r(1, 2))},
          {qt(r(5, 2), r(3, 2), r(-1, 2), r(3, 2)), qt(r(-1, 2), r(-3, 2), r(3, 2), r(1, 2))},
          {qt(r(1, 2), r(1, 2), r(3, 2), r(1, 2)), qt(r(3, 2), r(-1, 2), r(-1, 2), r(3, 2))},
          {qt(r(3, 2), r(-1, 2), r(3, 2), r(1, 2)), qt(r(1, 2), r(1, 2), r(-1, 2), r(3, 2))}};
}

const char* kExample1 = "t^2 - (2+j+2k)t + (1+2i+j+2k)";
const char* kExample2 = "t^2 - (2+j+2k)t + (1-2i+j+2k)";

bool criterion1(std::ostream& out) {
  Criterion c("1 Example 1 (Hamiltonian): two factorizations, norm (t^2-2t+2)(t^2-2t+5)");
  std::optional<FactorizationSet> fs_;
  double t = c.timed([&] {
    guarded(c, [&] { fs_ = factorize(cli::parse_poly(kExample1, H, Backend::Exact)); });
  });
  if (!fs_) return c.report(out);
  const FactorizationSet& fs = *fs_;
  double t_cli = c.timed([&] { c.expect(run_cli({"factor", "--algebra", "hamilton", kExample1}) == 0, "CLI exit 0"); });
  c.expect(fs.factorizations.size() == 2, "expected 2 factorizations, got " + std::to_string(fs.factorizations.size()));
  c.expect(has_pair(fs.factorizations, qt(1, 0, 1, 0, H), qt(1, 0, 0, 2, H)), "missing (1+j)(1+2k)");
  c.expect(has_pair(fs.factorizations, qt(1, 0, r(8, 5), r(6, 5), H), qt(1, 0, r(-3, 5), r(4, 5), H)),
           "missing (1+8/5j+6/5k)(1-3/5j+4/5k)");
  c.expect(fs.norm == RealPoly::exact({2, -2, 1}) * RealPoly::exact({5, -2, 1}), "norm " + fs.norm.to_string());
  c.expect(fs.polynomial.backend() == Backend::Exact, "stayed in rational arithmetic");
  c.expect(t < 0.1 && t_cli < 0.1, "runtime " + seconds(t) + " / CLI " + seconds(t_cli));
  c.note(seconds(t) + ", CLI " + seconds(t_cli));
  return c.report(out);
}

bool criterion2(std::ostream& out) {
  Criterion c("2 Example 2 (split): six factorizations, norm t(t+1)(t-2)(t-3), labels");
  std::optional<FactorizationSet> fs_;
  double t = c.timed([&] { guarded(c, [&] { fs_ = factorize(cli::parse_poly(kExample2, S, Backend::Exact)); }); });
  if (!fs_) return c.report(out);
  const FactorizationSet& fs = *fs_;
  double t_cli = c.timed([&] { c.expect(run_cli({"factor", "--algebra", "split", kExample2}) == 0, "CLI exit 0"); });
  c.expect(fs.factorizations.size() == 6, "expected 6 factorizations, got " + std::to_string(fs.factorizations.size()));
  for (const auto& [h1, h2] : example2_pairs())
    c.expect(has_pair(fs.factorizations, h1, h2), "missing (" + h1.to_string() + ")(" + h2.to_string() + ")");
  RealPoly n = RealPoly::exact({0, 1}) * RealPoly::exact({1, 1}) * RealPoly::exact({-2, 1}) * RealPoly::exact({-3, 1});
  c.expect(fs.norm == n, "norm " + fs.norm.to_string());

  std::vector<Label> labels;
  for (const auto& f : fs.factorizations)
    if (f.label) labels.push_back(*f.label);
  std::sort(labels.begin(), labels.end());
  c.expect(labels == std::vector<Label>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, "labels are not all 2-subsets");
  for (std::size_t i = 0; i < fs.factorizations.size(); ++i) {
    auto j = fs.complement.at(i);
    c.expect(j.has_value(), "factorization " + std::to_string(i) + " has no complement");
    if (j && fs.factorizations[i].label && fs.factorizations[*j].label)
      c.expect(labels_disjoint(*fs.factorizations[i].label, *fs.factorizations[*j].label),
               "complementary labels intersect");
  }
  c.expect(t < 0.1 && t_cli < 0.1, "runtime " + seconds(t) + " / CLI " + seconds(t_cli));
  c.note(seconds(t) + ", CLI " + seconds(t_cli));
  return c.report(out);
}

bool criterion3(std::ostream& out) {
  Criterion c("3 Complementary factorization of (1+j, 1+2k) and involution");
  guarded(c, [&] {
    QuatPoly c2 = fixtures::example2();
    Factorization f{qt(1, 0, 1, 0), qt(1, 0, 0, 2), RealPoly::exact({-3, -2, 1}), std::nullopt};
    Factorization g = complementary(f, c2);
    c.expect(g.h1 == qt(1, 0, r(8, 5), r(6, 5)), "k1 = " + g.h1.to_string());
    c.expect(g.h2 == qt(1, 0, r(-3, 5), r(4, 5)), "k2 = " + g.h2.to_string());
    FactorizationSet fs = factorize(c2);
    for (const auto& x : fs.factorizations) {
      Factorization back = complementary(complementary(x, c2), c2);
      c.expect(back.h1 == x.h1 && back.h2 == x.h2, "involution fails for " + x.h1.to_string());
    }
    c.expect(fs.factorizations.size() == 6, "six factorizations");
  });
  return c.report(out);
}

bool criterion4(std::ostream& out) {
  Criterion c("4 Theorem 1 on legs 1-2 of Example 2: quadrances 1, 1, 9/25, 9/25; 20 samples");
  guarded(c, [&] {
    FourBar fb = build_linkage(fixtures::example2());
    auto find = [&](const Quaternion& h1) -> const Leg& {
      for (const auto& l : fb.legs)
        if (l.factorization.h1 == h1) return l;
      throw std::runtime_error("leg " + h1.to_string() + " not found");
    };
    const Leg& h = find(qt(1, 0, 1, 0));
    const Leg& k = find(qt(1, 0, r(8, 5), r(6, 5)));
    const Scalar one(1L), nine25 = Scalar::rational(9, 25);
    c.expect(quadrance(h.fixed_joint, h.moving_joint_initial) == one, "q(H1,H2)");
    c.expect(quadrance(k.fixed_joint, k.moving_joint_initial) == one, "q(K1,K2)");
    c.expect(quadrance(h.fixed_joint, k.fixed_joint) == nine25, "q(H1,K1)");
    c.expect(quadrance(h.moving_joint_initial, k.moving_joint_initial) == nine25, "q(H2,K2)");
    int checked = 0;
    for (long n = -10; n < 10; ++n) {
      Scalar t = Scalar::rational(2 * n + 1, 2);  // avoids the norm roots -1, 0, 2, 3
      ProjPoint h2 = joint_path(h, t), k2 = joint_path(k, t);
      c.expect(quadrance(h.fixed_joint, h2) == quadrance(k.fixed_joint, k2), "legs at t=" + t.to_string());
      c.expect(quadrance(h.fixed_joint, h2) == one, "leg quadrance at t=" + t.to_string());
      c.expect(quadrance(h.fixed_joint, k.fixed_joint) == quadrance(h2, k2), "sides at t=" + t.to_string());
      ++checked;
    }
    c.expect(checked == 20, "20 samples");
  });
  return c.report(out);
}

bool criterion5(std::ostream& out) {
  Criterion c("5 Corollaries on Example 2: null tangents, focal points, null quadrilateral, linked vertices");
  double t = c.timed([&] {
    guarded(c, [&] {
      FourBar fb = build_linkage(fixtures::example2());
      auto pairs = fb.complementary_pairs();
      CouplerConic s = coupler_conic(fb.legs[pairs[0].first], fb.legs[pairs[0].second]);
      std::vector<Scalar> params;
      for (const auto& x : s.null_tangent_roots.real) params.push_back(x.value());
      c.expect(params == std::vector<Scalar>{Scalar(-1L), Scalar(0L), Scalar(2L), Scalar(3L)},
               "null-tangent parameters");

      std::vector<ProjPoint> fixed;
      for (const auto& l : fb.legs) fixed.push_back(l.fixed_joint);
      std::vector<ProjPoint> meets;
      for (std::size_t a = 0; a < s.null_tangents.size(); ++a)
        for (std::size_t b = a + 1; b < s.null_tangents.size(); ++b) meets.push_back(meet(s.null_tangents[a], s.null_tangents[b]));
      c.expect(meets.size() == 6, "six meets of null tangents");
      for (const auto& m : meets)
        c.expect(std::find(fixed.begin(), fixed.end(), m) != fixed.end(), "meet " + m.to_string() + " is no fixed joint");
      for (const auto& f : fixed)
        c.expect(std::find(meets.begin(), meets.end(), f) != meets.end(), "fixed joint " + f.to_string() + " missed");

      ProjLine side(qt(0, 1, 0, 1));
      c.expect(is_null(side), "[i+k] is null");
      for (const auto& p : {qt(0, 0, 1, 0), qt(0, 1, 3, 1), qt(0, 3, -1, 3)}) {
        c.expect(incident(side, ProjPoint(p)), "[i+k] misses " + p.to_string());
        c.expect(std::find(fixed.begin(), fixed.end(), ProjPoint(p)) != fixed.end(), p.to_string() + " is a fixed joint");
      }

      VerificationReport v = verify_linkage(fb);
      for (const char* id : {"corollary1", "corollary2", "corollary3"}) {
        const CheckResult* r = v.find(id);
        c.expect(r && r->status == CheckStatus::Passed, std::string(id) + " passes");
        if (r)
          for (const auto& f : r->failures) c.expect(false, f);
      }

      // Linked vertices: for each root index, the fixed joints whose labels
      // omit it and the moving joints whose labels contain it are collinear.
      for (int idx = 1; idx <= 4; ++idx) {
        std::vector<ProjPoint> fx, mv;
        for (const auto& l : fb.legs) {
          bool in = (*l.label)[0] == idx || (*l.label)[1] == idx;
          (in ? mv : fx).push_back(in ? joint_path(l, Scalar::rational(1, 2)) : l.fixed_joint);
        }
        c.expect(fx.size() == 3 && collinear(fx[0], fx[1], fx[2]), "fixed joints omitting " + std::to_string(idx));
        c.expect(mv.size() == 3 && collinear(mv[0], mv[1], mv[2]), "moving joints containing " + std::to_string(idx));
      }
    });
  });
  c.expect(t < 1.0, "runtime " + seconds(t));
  c.note(seconds(t));
  return c.report(out);
}

double point_residual(const ProjPoint& a, const ProjPoint& b) {
  auto u = in_backend(a, Backend::Float).coords(), v = in_backend(b, Backend::Float).coords();
  auto d = [](const Scalar& s) { return s.to_double(); };
  double x = d(u[1]) * d(v[2]) - d(u[2]) * d(v[1]);
  double y = d(u[2]) * d(v[0]) - d(u[0]) * d(v[2]);
  double z = d(u[0]) * d(v[1]) - d(u[1]) * d(v[0]);
  return std::sqrt(x * x + y * y + z * z);
}

bool criterion6(std::ostream& out) {
  Criterion c("6 Property suite on random generic split polynomials");
  std::mt19937_64 rng(20240607);
  int accepted = 0, attempts = 0, exact_cases = 0, six = 0, degenerate = 0, comparisons = 0;
  double worst = 0;
  double t = c.timed([&] {
    while (accepted < 200 && attempts < 5000) {
      ++attempts;
      Quaternion h1 = oracle::random_quaternion(rng, S), h2 = oracle::random_quaternion(rng, S);
      QuatPoly poly = fixtures::expanded(h1, h2, oracle::product(h1, h2));
      if (!check_generic(poly).verdict) continue;
      try {
        FourBar fb = build_linkage(poly);
        const bool exact = fb.backend() == Backend::Exact;
        const std::size_t real = fb.norm_roots.real.size();
        const std::size_t expected = real == 4 ? 6 : 2;

        std::vector<std::optional<CouplerConic>> conics;
        for (auto [i, j] : fb.complementary_pairs()) conics.emplace_back(coupler_conic(fb.legs[i], fb.legs[j]));

        ++accepted;
        exact_cases += exact;
        six += fb.legs.size() == 6;
        c.expect(fb.legs.size() == expected, "count " + std::to_string(fb.legs.size()) + " with " +
                                                  std::to_string(real) + " real roots for " + poly.to_string());
        for (const auto& leg : fb.legs) {
          const Quaternion &a = leg.factorization.h1, &b = leg.factorization.h2;
          if (exact) {
            c.expect(fixtures::expanded(a, b, oracle::product(a, b)) == poly, "round trip " + poly.to_string());
          } else {
            QuatPoly back = QuatPoly::linear(a) * QuatPoly::linear(b);
            c.expect(back == poly.to_backend(Backend::Float), "float round trip " + poly.to_string());
          }
        }

        auto pairs = fb.complementary_pairs();
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const Leg &h = fb.legs[pairs[p].first], &k = fb.legs[pairs[p].second];
          const CouplerConic& s = *conics[p];
          int samples = 0;
          for (long n = 0; samples < 5 && n < 40; ++n) {
            Scalar tt = Scalar::rational(2 * n - 7, 5).to_backend(fb.backend());
            try {
              ProjLine mirror = s.tangent_at(tt);
              ProjPoint k2 = joint_path(k, tt), h2 = joint_path(h, tt);
              ProjPoint img_h = reflect(mirror, h.fixed_joint), img_k = reflect(mirror, k.fixed_joint);
              ++samples;
              comparisons += 2;
              if (exact) {
                c.expect(img_h == k2 && img_k == h2, "reflection at t=" + tt.to_string() + " for " + poly.to_string());
              } else {
                double res = std::max(point_residual(img_h, k2), point_residual(img_k, h2));
                worst = std::max(worst, res);
                c.expect(res < 1e-9, "residual " + std::to_string(res) + " for " + poly.to_string());
              }
            } catch (const Degenerate&) {
            } catch (const NullPoint&) {
            }
          }
          c.expect(samples == 5, "fewer than 5 usable parameters for " + poly.to_string());
        }

        for (int n = 0; n < 3; ++n) {
          Quaternion a = oracle::random_vector(rng, S), b = oracle::random_vector(rng, S);
          if (a.is_zero() || b.is_zero() || a.norm().is_zero() || b.norm().is_zero()) continue;
          ProjPoint pa(a), pb(b);
          c.expect(quadrance(rotate(h1, pa), rotate(h1, pb)) == quadrance(pa, pb), "isometry " + h1.to_string());
        }
      } catch (const Degenerate&) {
        ++degenerate;
      } catch (const std::exception& e) {
        c.expect(false, "exception " + std::string(e.what()) + " for " + poly.to_string());
        ++accepted;
      }
    }
  });
  c.expect(accepted >= 200, "only " + std::to_string(accepted) + " polynomials checked");
  c.expect(t < 30.0, "runtime " + seconds(t));
  std::ostringstream n;
  n << accepted << " polynomials (" << exact_cases << " exact, " << six << " with six factorizations, " << degenerate
    << " degenerate coupler curves skipped), " << comparisons << " reflection comparisons, max float residual "
    << worst << ", " << seconds(t);
  c.note(n.str());
  return c.report(out);
}

bool criterion7(std::ostream& out) {
  Criterion c("7 Degeneracy gates: t^2+1 and Hamiltonian (t-i)^2 are NonGeneric, exit 2");
  guarded(c, [&] {
    Quaternion i = qt(0, 1, 0, 0, H);
    QuatPoly sq = fixtures::expanded(i, i, oracle::product(i, i));
    c.expect(run_cli({"factor", "--algebra", "split", "t^2+1"}) == 2, "t^2+1 exit code");
    c.expect(run_cli({"factor", "--algebra", "hamilton", sq.to_string()}) == 2, sq.to_string() + " exit code");
    bool threw = false;
    try {
      factorize(cli::parse_poly("t^2+1", S, Backend::Exact));
    } catch (const NonGeneric&) {
      threw = true;
    }
    c.expect(threw, "t^2+1 throws NonGeneric");
    threw = false;
    try {
      factorize(sq);
    } catch (const NonGeneric&) {
      threw = true;
    }
    c.expect(threw, "(t-i)^2 throws NonGeneric");
  });
  return c.report(out);
}

}  // namespace

int main() {
  bool ok = true;
  for (auto f : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7}) ok &= f(std::cout);
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? 0 : 1;
}
