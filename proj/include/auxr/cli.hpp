#pragma once

// Command-line front end. Needs CLI11.hpp and nlohmann/json (json.hpp) on the
// include path; everything else in include/auxr is standalone.
//
//   auxr r --s 0.5+10i [--method definition|hermite|gabcke-u] [--tol 1e-12]
//   auxr validate lemma --z 0.75
//   auxr validate prop --s -0.5-10i --z 2
//   auxr validate hermite --nu 0.25+0.5i --z 0.5-0.5i
//   auxr validate ode --nu 0.5 --z 1
//   auxr crosscheck --s 0.5+10i | --grid "-1,0,0.5;0,10" [--method ...]
//   auxr xray --t 10 --square 6 --res 512 --out fig1.ppm
//   auxr zeta --s 0.5
//
// Exit codes: 0 success, 1 validation failure or runtime error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "auxr/auxiliary.hpp"
#include "auxr/hermite.hpp"
#include "auxr/xray.hpp"
#include "auxr/zeta_anchor.hpp"

namespace auxr::cli {

/// Raised for malformed arguments; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i", "a+i"); no spaces.
inline Complex parse_complex(const std::string& text) {
  static const std::regex real_only(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)$)");
  static const std::regex imag_only(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
  static const std::regex full(
      R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
  std::smatch m;
  if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(text, m, imag_only)) {
    const double mag = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -mag : mag};
  }
  if (std::regex_match(text, m, full)) {
    const double mag = m[3].matched ? std::stod(m[3]) : 1.0;
    return {std::stod(m[1]), m[2] == "-" ? -mag : mag};
  }
  throw UsageError("not a complex literal (expected a+bi): '" + text + "'");
}

/// 15 significant digits.
inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline std::string fmt(Complex z) {
  std::string out = fmt(z.real());
  const double im = z.imag();
  out += (std::signbit(im) ? "-" : "+") + fmt(std::abs(im)) + "i";
  return out;
}

/// The value as printed, so JSON and text output agree digit for digit.
inline double printed(double x) { return std::stod(fmt(x)); }

inline nlohmann::json to_json(Complex z) {
  return {{"re", printed(z.real())}, {"im", printed(z.imag())}};
}

inline std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("bad number in list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

/// "sigma1,sigma2;t1,t2" -> all sigma + i t.
inline std::vector<Complex> parse_grid(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw UsageError("--grid expects \"sigma-list;t-list\"");
  const auto sigmas = parse_list(text.substr(0, semi));
  const auto ts = parse_list(text.substr(semi + 1));
  std::vector<Complex> out;
  for (double sg : sigmas)
    for (double t : ts) out.emplace_back(sg, t);
  return out;
}

inline RMethod parse_method(const std::string& name) {
  if (name == "definition") return RMethod::Definition;
  if (name == "hermite") return RMethod::HermiteForm;
  if (name == "gabcke-u") return RMethod::GabckeUForm;
  throw UsageError("unknown method '" + name + "' (definition|hermite|gabcke-u)");
}

inline const char* method_flag(RMethod m) {
  switch (m) {
    case RMethod::Definition: return "definition";
    case RMethod::HermiteForm: return "hermite";
    case RMethod::GabckeUForm: return "gabcke-u";
  }
  return "?";
}

/// AUXR_MAX_NODES, if set, caps quadrature budgets.
inline NodeCap node_cap_from_env() {
  const char* v = std::getenv("AUXR_MAX_NODES");
  if (v == nullptr || *v == '\0') return {};
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n <= 0) throw UsageError("AUXR_MAX_NODES must be a positive integer");
  return {n};
}

enum class Format { Text, Json, Csv };

struct Options {
  std::string s, z, nu, grid, out;
  std::vector<std::string> methods;
  std::optional<double> tol;
  double square = 6.0;
  long res = 512;
  double t = 10.0;
  bool json = false, csv = false;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

namespace detail {

inline Complex need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return parse_complex(value);
}

inline int cmd_r(const Options& o, std::ostream& out, std::ostream& err) {
  const Complex s = need(o.s, "--s");
  if (o.methods.size() > 1) throw UsageError("r takes a single --method");
  const RMethod m = o.methods.empty() ? RMethod::HermiteForm : parse_method(o.methods.front());
  const double tol = o.tol.value_or(1e-12);
  const REvalResult r = evaluate_r(m, s, tol, node_cap_from_env());
  switch (o.format()) {
    case Format::Json:
      out << nlohmann::json{{"s", to_json(s)},
                            {"method", method_flag(m)},
                            {"value", to_json(r.value)},
                            {"err", printed(r.err_estimate)},
                            {"nodes", r.nodes},
                            {"degraded", r.degraded}}
                 .dump()
          << "\n";
      break;
    case Format::Csv:
      out << "re,im,err,nodes,degraded\n"
          << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "," << fmt(r.err_estimate) << ","
          << r.nodes << "," << (r.degraded ? 1 : 0) << "\n";
      break;
    case Format::Text:
      out << fmt(r.value) << "\n";
      break;
  }
  if (r.degraded) err << "warning: requested tolerance " << fmt(tol) << " not reached (estimate "
                      << fmt(r.err_estimate) << ")\n";
  return 0;
}

struct Check {
  std::string name;
  double value;
};

inline int report_checks(const char* what, const std::vector<Check>& checks, double tol,
                         Format format, std::ostream& out) {
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.value <= tol;
  if (format == Format::Json) {
    nlohmann::json j{{"validate", what}, {"tol", printed(tol)}, {"pass", pass}};
    for (const auto& c : checks) j["residuals"][c.name] = printed(c.value);
    out << j.dump() << "\n";
  } else if (format == Format::Csv) {
    out << "check,residual\n";
    for (const auto& c : checks) out << c.name << "," << fmt(c.value) << "\n";
  } else {
    for (const auto& c : checks) out << c.name << " " << fmt(c.value) << "\n";
    out << (pass ? "pass" : "FAIL") << " (tol " << fmt(tol) << ")\n";
  }
  return pass ? 0 : 1;
}

inline int cmd_validate(const std::string& which, const Options& o, std::ostream& out) {
  const double tol = o.tol.value_or(1e-8);
  const NodeCap cap = node_cap_from_env();
  std::vector<Check> checks;
  if (which == "lemma") {
    const Complex z = need(o.z, "--z");
    checks.push_back({"residual", sinc_lemma_residual(z, cap.apply(sinc_spec(z, tol * 1e-2)))});
  } else if (which == "prop") {
    const Complex s = need(o.s, "--s");
    const Complex z = need(o.z, "--z");
    const double angles[] = {kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};
    const char* names[] = {"residual_pi/3", "residual_pi/2", "residual_2pi/3"};
    const Complex rhs = prop_inth_rhs(s, z);
    std::vector<Complex> lhs;
    for (int i = 0; i < 3; ++i) {
      const double anchor = prop_anchor(s, z, angles[i]);
      const QuadratureSpec spec = cap.apply(prop_spec(s, z, angles[i], tol * 1e-2, anchor));
      lhs.push_back(prop_inth_lhs(s, z, angles[i], spec, anchor).value);
      checks.push_back({names[i], std::abs(lhs.back() - rhs) / std::max(std::abs(rhs), 1e-300)});
    }
    double spread = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) spread = std::max(spread, rel_diff(lhs[i], lhs[j]));
    checks.push_back({"angle_spread", spread});
  } else if (which == "hermite") {
    const Complex nu = need(o.nu, "--nu");
    const Complex z = need(o.z, "--z");
    const HermiteOptions opt = cap.apply(HermiteOptions{});
    checks.push_back({"reflection", hermite_reflection_residual(nu, z, 1e-13, opt)});
    if (nu.real() < 0.0) {
      const Complex a = hermite_series(nu, z, 1e-13).value;
      const Complex b = hermite_integral(nu, z, opt.integral).value;
      checks.push_back({"series_vs_integral", rel_diff(a, b)});
    }
  } else if (which == "ode") {
    // U(a, z) with a = -nu - 1/2, i.e. w = D_nu(z).
    const Complex nu = need(o.nu, "--nu");
    const Complex z = need(o.z, "--z");
    const double ode_tol = o.tol.value_or(1e-5);
    checks.push_back({"ode", parabolic_u_ode_residual(-nu - 0.5, z, 1e-3, 1e-13,
                                                      cap.apply(HermiteOptions{}))});
    return report_checks("ode", checks, ode_tol, o.format(), out);
  } else {
    throw UsageError("validate expects lemma|prop|hermite|ode");
  }
  return report_checks(which.c_str(), checks, tol, o.format(), out);
}

inline nlohmann::json report_json(const CrossCheckReport& r) {
  nlohmann::json j{{"s", to_json(r.s)},
                   {"max_pairwise_rel_err", printed(r.max_pairwise_rel_err)},
                   {"pass", r.pass}};
  j["values"] = nlohmann::json::object();
  for (const auto& [m, e] : r.values) {
    if (e.result)
      j["values"][to_string(m)] = {{"re", printed(e.result->value.real())},
                                   {"im", printed(e.result->value.imag())},
                                   {"err", printed(e.result->err_estimate)}};
    else
      j["values"][to_string(m)] = {{"error", e.error}};
  }
  return j;
}

inline int cmd_crosscheck(const Options& o, std::ostream& out) {
  if (o.s.empty() == o.grid.empty()) throw UsageError("crosscheck needs exactly one of --s, --grid");
  const std::vector<Complex> points = o.grid.empty() ? std::vector<Complex>{parse_complex(o.s)}
                                                     : parse_grid(o.grid);
  std::set<RMethod> methods;
  for (const auto& name : o.methods) methods.insert(parse_method(name));
  if (o.methods.empty())
    methods = {RMethod::Definition, RMethod::HermiteForm, RMethod::GabckeUForm};
  if (methods.size() < 2) throw UsageError("crosscheck needs at least two distinct methods");
  const double tol = o.tol.value_or(1e-6);
  const NodeCap cap = node_cap_from_env();

  std::vector<CrossCheckReport> reports;
  for (Complex s : points) reports.push_back(crosscheck(s, methods, tol, cap));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;

  if (o.format() == Format::Json) {
    if (o.grid.empty()) {
      out << report_json(reports.front()).dump() << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      out << arr.dump() << "\n";
    }
  } else if (o.format() == Format::Csv) {
    out << "s_re,s_im,method,re,im,err,error\n";
    for (const auto& r : reports)
      for (const auto& [m, e] : r.values) {
        out << fmt(r.s.real()) << "," << fmt(r.s.imag()) << "," << method_flag(m) << ",";
        if (e.result)
          out << fmt(e.result->value.real()) << "," << fmt(e.result->value.imag()) << ","
              << fmt(e.result->err_estimate) << ",\n";
        else
          out << ",,,\"" << e.error << "\"\n";
      }
  } else {
    for (const auto& r : reports) {
      out << "s = " << fmt(r.s) << "  max_rel_err " << fmt(r.max_pairwise_rel_err) << "  "
          << (r.pass ? "pass" : "FAIL") << "\n";
      for (const auto& [m, e] : r.values) {
        out << "  " << method_flag(m) << " ";
        if (e.result)
          out << fmt(e.result->value) << "  err " << fmt(e.result->err_estimate) << "\n";
        else
          out << "error: " << e.error << "\n";
      }
    }
  }
  return pass ? 0 : 1;
}

inline std::string csv_path_for(const std::string& image_path) {
  const auto dot = image_path.find_last_of('.');
  const auto slash = image_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return image_path + ".csv";
  return image_path.substr(0, dot) + ".csv";
}

inline int cmd_xray(const Options& o, std::ostream& out) {
  if (!(o.square > 0.0)) throw UsageError("--square must be positive");
  if (o.res < 2) throw UsageError("--res must be at least 2");
  const GridSpec grid = GridSpec::square(o.square, o.res);
  HermiteOptions opt = node_cap_from_env().apply(HermiteOptions{});
  const FigureIntegrand f(o.t, o.tol.value_or(1e-4), opt);
  const GridValues values = eval_grid(f, grid);
  const XRayImage img = detect_zero_curves(values);
  const std::string path = o.out.empty() ? "xray.ppm" : o.out;
  write_image(img, path);
  if (o.csv) write_csv(values, csv_path_for(path));
  const Crossings axis = real_axis_crossings(f, -o.square, o.square, o.res);

  if (o.json) {
    out << nlohmann::json{{"t", printed(o.t)},
                          {"order", to_json(f.order())},
                          {"res", o.res},
                          {"square", printed(o.square)},
                          {"out", path},
                          {"pixels",
                           {{"re_zero", img.count(PixelClass::ReZero)},
                            {"im_zero", img.count(PixelClass::ImZero)},
                            {"both", img.count(PixelClass::Both)},
                            {"degraded", img.count(PixelClass::Degraded)}}},
                          {"real_axis_crossings", {{"re", axis.re}, {"im", axis.im}}}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << path << " (" << o.res << "x" << o.res << ", order " << fmt(f.order())
        << ")\n"
        << "re_zero " << img.count(PixelClass::ReZero) << "  im_zero "
        << img.count(PixelClass::ImZero) << "  both " << img.count(PixelClass::Both)
        << "  degraded " << img.count(PixelClass::Degraded) << "\n"
        << "real-axis crossings: re " << axis.re << "  im " << axis.im << "\n";
    if (o.csv) out << "wrote " << csv_path_for(path) << "\n";
  }
  return 0;
}

inline int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
  const Complex s = need(o.s, "--s");
  const double tol = o.tol.value_or(1e-12);
  const EvalResult r = zeta_via_r(s, node_cap_from_env().apply(definition_spec(s, tol)));
  err << "note: zeta is reconstructed through the classical functional-equation identity, "
         "an external check outside the R(s) representations\n";
  if (o.json)
    out << nlohmann::json{{"s", to_json(s)}, {"zeta", to_json(r.value)}, {"err", printed(r.err_estimate)}}
               .dump()
        << "\n";
  else if (o.csv)
    out << "re,im,err\n" << fmt(r.value.real()) << "," << fmt(r.value.imag()) << "," << fmt(r.err_estimate) << "\n";
  else
    out << fmt(r.value) << "\n";
  return 0;
}

}  // namespace detail

/// Runs one command line (args excludes the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Riemann auxiliary function toolkit", "auxr"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    auto* c = sub->add_flag("--csv", o.csv, "CSV output");
    j->excludes(c);
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "target tolerance")->check(CLI::PositiveNumber);
  };

  auto* r = app.add_subcommand("r", "evaluate R(s)");
  r->add_option("--s", o.s, "complex point a+bi");
  r->add_option("--method", o.methods, "definition|hermite|gabcke-u");
  add_tol(r);
  add_format(r);

  auto* validate = app.add_subcommand("validate", "check an identity by quadrature");
  validate->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> checks;
  for (const std::string name : {"lemma", "prop", "hermite", "ode"}) {
    auto* v = validate->add_subcommand(name);
    v->add_option("--z", o.z, "complex argument");
    if (name == "prop") v->add_option("--s", o.s, "complex order");
    if (name == "hermite" || name == "ode") v->add_option("--nu", o.nu, "complex order");
    add_tol(v);
    add_format(v);
    checks.emplace_back(name, v);
  }

  auto* cross = app.add_subcommand("crosscheck", "compare R(s) representations");
  cross->add_option("--s", o.s, "complex point a+bi");
  cross->add_option("--grid", o.grid, "\"sigma-list;t-list\"");
  cross->add_option("--method", o.methods, "repeatable; default all three");
  add_tol(cross);
  add_format(cross);

  auto* xray = app.add_subcommand("xray", "render an x-ray of the Hermite-form integrand");
  xray->add_option("--t", o.t, "s = 1/2 + i t");
  xray->add_option("--square", o.square, "half side of the square");
  xray->add_option("--res", o.res, "pixels per side");
  xray->add_option("--out", o.out, "output PPM path");
  add_tol(xray);
  add_format(xray);

  auto* zeta = app.add_subcommand("zeta", "zeta(s) from R(s) (external classical check)");
  zeta->add_option("--s", o.s, "complex point a+bi");
  add_tol(zeta);
  add_format(zeta);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'auxr --help' for usage\n";
    return 2;
  }

  try {
    if (r->parsed()) return detail::cmd_r(o, out, err);
    for (const auto& [name, v] : checks)
      if (v->parsed()) return detail::cmd_validate(name, o, out);
    if (cross->parsed()) return detail::cmd_crosscheck(o, out);
    if (xray->parsed()) return detail::cmd_xray(o, out);
    if (zeta->parsed()) return detail::cmd_zeta(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace auxr::cli
