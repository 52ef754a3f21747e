#include "splitquat/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "splitquat/cli/emit.hpp"
#include "splitquat/cli/parse.hpp"
#include "splitquat/cli/svg.hpp"
#include "splitquat/errors.hpp"

namespace splitquat::cli {

namespace {

enum class Format { Json, Csv, Svg };

struct Options {
  Signature sig = Signature::Split;
  Backend backend = Backend::Exact;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<std::string> t_range;
  Format format = Format::Json;
  std::vector<std::string> tracers;
  std::optional<std::string> out_path;
  std::string poly;
  std::vector<std::string> points;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Svg: return "svg";
  }
  return "";
}

void require_format(const std::string& cmd, Format f, std::initializer_list<Format> allowed) {
  for (Format a : allowed)
    if (a == f) return;
  throw UsageError("format '" + std::string(format_name(f)) + "' is not available for '" + cmd + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::optional<CouplerConic>> conics_of(FourBar& fb) {
  std::vector<std::optional<CouplerConic>> out;
  for (auto [i, j] : fb.complementary_pairs()) {
    try {
      out.emplace_back(coupler_conic(fb.legs[i], fb.legs[j]));
    } catch (const Degenerate& e) {
      fb.warnings.push_back("legs " + leg_name(fb, i) + "/" + leg_name(fb, j) + ": " + e.what());
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

std::vector<Scalar> grid(const Scalar& a, const Scalar& b, int n) {
  if (n < 2) throw UsageError("--samples must be at least 2");
  std::vector<Scalar> out;
  const Scalar step = (b - a) / Scalar::from_int(n - 1, a.backend());
  for (int i = 0; i < n; ++i) out.push_back(a + step * Scalar::from_int(i, a.backend()));
  return out;
}

// Returns the report text and the exit code.
std::pair<std::string, int> dispatch(const std::string& cmd, const Options& o) {
  if (o.tol) set_tolerance(*o.tol);
  auto poly = [&] { return parse_poly(o.poly, o.sig, o.backend); };
  auto point = [&](std::size_t i) { return parse_point(o.points.at(i), o.sig, o.backend); };

  if (cmd == "factor") {
    require_format(cmd, o.format, {Format::Json, Format::Csv});
    FactorizationSet fs = factorize(poly());
    return {o.format == Format::Csv ? factor_csv(fs) : dump(factor_report(fs)), kOk};
  }
  if (cmd == "norm") {
    require_format(cmd, o.format, {Format::Json});
    QuatPoly c = poly();
    RealPoly n = norm_polynomial(c);
    return {dump(norm_report(c, n, real_roots(n))), kOk};
  }
  if (cmd == "linkage") {
    require_format(cmd, o.format, {Format::Json, Format::Svg});
    FourBar fb = build_linkage(poly());
    auto conics = conics_of(fb);
    return {o.format == Format::Svg ? linkage_svg(fb, conics) : dump(linkage_report(fb, conics)), kOk};
  }
  if (cmd == "verify") {
    require_format(cmd, o.format, {Format::Json});
    FourBar fb = build_linkage(poly());
    VerifyOptions vo;
    if (o.t_range) {
      auto [a, b] = parse_range(*o.t_range, fb.backend());
      vo.samples = grid(a, b, o.samples.value_or(7));
    }
    VerificationReport r = verify_linkage(fb, vo);
    return {dump(verify_report(fb, r)), r.passed() ? kOk : kVerificationFailed};
  }
  if (cmd == "simulate") {
    FourBar fb = build_linkage(poly());
    auto [a, b] = parse_range(o.t_range.value_or("-4:4"), fb.backend());
    std::vector<ProjPoint> tracers;
    for (const auto& t : o.tracers) tracers.push_back(parse_point(t, o.sig, fb.backend()));
    int n = o.samples.value_or(61);
    if (n < 2) throw UsageError("--samples must be at least 2");
    Trajectory traj = sample_motion(fb, a, b, n, tracers);
    switch (o.format) {
      case Format::Csv: return {trajectory_csv(fb, traj, tracers.size()), kOk};
      case Format::Svg: return {trajectory_svg(fb, traj), kOk};
      case Format::Json: return {dump(trajectory_report(fb, traj, tracers)), kOk};
    }
  }
  if (cmd == "midpoints") {
    require_format(cmd, o.format, {Format::Json});
    ProjPoint a = point(0), b = point(1);
    return {dump(midpoints_report(a, b, midpoints(a, b))), kOk};
  }
  if (cmd == "quad") {
    require_format(cmd, o.format, {Format::Json});
    ProjPoint a12 = point(0), a34 = point(1), b34 = point(2);
    return {dump(quadrilateral_report(a12, a34, b34, construct_equal_quadrilateral(a12, a34, b34))), kOk};
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Factor quadratic quaternion polynomials and analyse their four-bar linkages", "splitquat"};
  app.require_subcommand(1);

  const std::map<std::string, Signature> algebras{{"split", Signature::Split}, {"hamilton", Signature::Hamiltonian}};
  const std::map<std::string, Backend> backends{{"exact", Backend::Exact}, {"float", Backend::Float}};
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}};
  std::string algebra = "split", backend = "exact";
  app.add_option("--algebra", algebra, "split (default) or hamilton")->check(CLI::IsMember(algebras));
  app.add_option("--backend", backend, "exact (default) or float")->check(CLI::IsMember(backends));
  app.add_option("--tol", o.tol, "absolute tolerance of the float backend")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "number of motion parameters (simulate, verify with --t-range)");
  app.add_option("--t-range", o.t_range, "parameter range a:b, e.g. --t-range=-2:3");
  app.add_option("--format", o.format, "json (default), csv or svg")->transform(CLI::CheckedTransformer(formats))->option_text("TEXT:{json,csv,svg}");
  app.add_option("--tracer", o.tracers, "point carried along by the motion (simulate); repeatable");
  app.add_option("--out", o.out_path, "write the report to this file");

  auto poly_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("polynomial", o.poly, "e.g. \"t^2 - (2+j+2k)t + (1-2i+j+2k)\"")->required();
  };
  poly_command("factor", "list factorizations, labels and complementary pairs");
  poly_command("norm", "norm polynomial and its roots");
  poly_command("linkage", "joints, quadrances, coupler conic and focal points");
  poly_command("verify", "check the linkage theorems; exit 3 if any check fails");
  poly_command("simulate", "sample the motion over --t-range (default -4:4)");
  CLI::App* mid = app.add_subcommand("midpoints", "midpoints of two points");
  mid->fallthrough();
  mid->add_option("points", o.points, "two points, e.g. \"[j]\" \"[k]\"")->required()->expected(2);
  CLI::App* quad = app.add_subcommand("quad", "equal-quadrance quadrilateral from A12, A34, B34");
  quad->fallthrough();
  quad->add_option("points", o.points, "three points")->required()->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.sig = algebras.at(algebra);
  o.backend = backends.at(backend);

  const std::string cmd = app.get_subcommands().front()->get_name();
  auto fail = [&](int code, const std::string& type, const std::string& message) {
    if (o.format == Format::Json)
      err << error_report(type, message).dump() << "\n";
    else
      err << "splitquat: " << type << ": " << message << "\n";
    return code;
  };

  // --tol only applies to this invocation.
  struct RestoreTolerance {
    double saved = tolerance();
    ~RestoreTolerance() { set_tolerance(saved); }
  } restore;
  std::pair<std::string, int> result;
  try {
    result = dispatch(cmd, o);
  } catch (const ParseError& e) {
    return fail(kUsage, "ParseError", e.what());
  } catch (const NonGeneric& e) {
    return fail(kNonGeneric, "NonGeneric", e.what());
  } catch (const Unsupported& e) {
    return fail(kUsage, "Unsupported", e.what());
  } catch (const UsageError& e) {
    return fail(kUsage, "UsageError", e.what());
  } catch (const Degenerate& e) {
    return fail(kUsage, "Degenerate", e.what());
  } catch (const NullPoint& e) {
    return fail(kUsage, "NullPoint", e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, "Error", e.what());
  }

  if (o.out_path) {
    std::ofstream file(*o.out_path, std::ios::binary);
    if (!file || !(file << result.first) || !file.flush()) return fail(kUsage, "IOError", "cannot write " + *o.out_path);
  } else {
    out << result.first;
  }
  return result.second;
}

}  // namespace splitquat::cli
