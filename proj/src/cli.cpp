#include "okb/cli.hpp"

#include "okb/cone_lp.hpp"
#include "okb/cones.hpp"
#include "okb/error.hpp"
#include "okb/figure.hpp"
#include "okb/io.hpp"
#include "okb/okounkov.hpp"
#include "okb/verify.hpp"
#include "okb/weyl.hpp"
#include "okb/zariski.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace okb {

namespace {

const std::map<std::string, OutputFormat> kFormats = {
    {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}, {"svg", OutputFormat::kSvg}, {"tikz", OutputFormat::kTikz}};

void add_format(CLI::App* sub, CommandRequest& req, bool& json_flag, std::vector<std::string> allowed) {
  sub->add_flag("--json", json_flag, "JSON output");
  sub->add_option_function<std::string>(
         "--format",
         [&req, allowed](const std::string& name) {
           if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
             throw CLI::ValidationError("--format", "unsupported format '" + name + "'");
           }
           req.format = kFormats.at(name);
         },
         "output format")
      ->type_name("FMT");
}

}  // namespace

CommandRequest parse_command_line(const std::vector<std::string>& args) {
  CommandRequest req;
  bool json_flag = false;
  CLI::App app("Okounkov bodies on blow-ups of the plane", "okbody");
  app.require_subcommand(1, 1);

  const auto add_n = [&](CLI::App* sub, bool required) {
    CLI::Option* o = sub->add_option("-n", req.n, "number of blown-up points");
    if (required) o->required();
  };

  CLI::App* curves = app.add_subcommand("curves", "exceptional classes on X_n");
  add_n(curves, true);
  curves->add_flag("--histogram", req.histogram, "print the degree histogram");
  curves->add_flag("--oracle", req.oracle, "enumerate by the Diophantine conditions instead of the orbit");
  add_format(curves, req, json_flag, {"text", "json"});

  CLI::App* sesh = app.add_subcommand("seshadri", "Seshadri constant of n very general points");
  add_n(sesh, true);
  add_format(sesh, req, json_flag, {"text", "json"});

  CLI::App* test = app.add_subcommand("test", "cone membership tests");
  add_n(test, true);
  test->add_option("-D", req.divisor, "class d,m1,...,mn")->required();
  auto* g = test->add_option_group("predicate");
  g->add_flag_callback("--nef", [&] { req.test = ConeTest::kNef; });
  g->add_flag_callback("--big", [&] { req.test = ConeTest::kBig; });
  g->add_flag_callback("--ample", [&] { req.test = ConeTest::kAmple; });
  g->add_flag_callback("--psef", [&] { req.test = ConeTest::kPsef; });
  g->require_option(1);
  add_format(test, req, json_flag, {"text", "json"});

  CLI::App* zar = app.add_subcommand("zariski", "Zariski decomposition");
  add_n(zar, true);
  zar->add_option("-D", req.divisor, "class d,m1,...,mn")->required();
  add_format(zar, req, json_flag, {"text", "json"});

  CLI::App* body = app.add_subcommand("body", "Okounkov body");
  add_n(body, true);
  CLI::Option* dopt = body->add_option("-D", req.divisor, "class d,m1,...,mn");
  CLI::Option* dd = body->add_option("-d", req.d, "degree of L_{n,d,m}");
  CLI::Option* mm = body->add_option("-m", req.m, "multiplicity of L_{n,d,m}");
  dd->needs(mm);
  mm->needs(dd);
  dopt->excludes(dd)->excludes(mm);
  add_format(body, req, json_flag, {"text", "json"});

  CLI::App* dis = app.add_subcommand("dissect", "iterative dissection for n = 0..9");
  dis->add_option("--eps", req.eps, "multiplicity p/q");
  dis->add_option("--scale", req.scale, "figure unit length");
  dis->add_option("-o", req.output, "output file");
  add_format(dis, req, json_flag, {"json", "svg", "tikz"});

  CLI::App* nag = app.add_subcommand("nagata", "body predicted by Nagata's conjecture");
  add_n(nag, true);
  nag->add_option("-d", req.d, "degree")->required();
  nag->add_option("-m", req.m, "multiplicity")->required();
  add_format(nag, req, json_flag, {"text", "json"});

  CLI::App* ver = app.add_subcommand("verify", "seeded self-consistency suites");
  ver->add_option("--suite", req.suite, "suite name or 'all'");
  ver->add_option("--seed", req.seed, "random seed");
  add_format(ver, req, json_flag, {"text", "json"});

  std::vector<const char*> argv = {"okbody"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    req.subcommand = "help";
    req.output = help.str();
    return req;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  if (json_flag) {
    if (req.format && *req.format != OutputFormat::kJson) {
      throw std::invalid_argument("--json conflicts with --format");
    }
    req.format = OutputFormat::kJson;
  }
  if (req.subcommand == "body" && !req.divisor && !req.d) {
    throw std::invalid_argument("body needs -D or both -d and -m");
  }
  return req;
}

namespace {

int point_count(const CommandRequest& req, int lo, int hi) {
  const long n = *req.n;
  if (n < lo || n > hi) {
    throw std::invalid_argument("-n " + std::to_string(n) + " out of range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return static_cast<int>(n);
}

DivisorClass class_option(const CommandRequest& req, int n) {
  DivisorClass c = parse_divisor_class(*req.divisor);
  if (c.n() != n) {
    throw std::invalid_argument("-D " + *req.divisor + " has " + std::to_string(c.n() + 1) + " entries, expected " +
                                std::to_string(n + 1));
  }
  return c;
}

Rational rational_option(const std::string& flag, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(flag + " " + token + ": malformed rational");
  }
}

OutputFormat format_or(const CommandRequest& req, OutputFormat fallback) { return req.format.value_or(fallback); }

std::string combination_text(const std::vector<CurveClass>& gens, const RationalVector& lambda) {
  std::string s;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) == 0) continue;
    s += (s.empty() ? "" : " + ") + to_string(lambda(i)) + "*" + to_string(gens[static_cast<std::size_t>(i)]);
  }
  return s.empty() ? "0" : s;
}

int cmd_curves(const CommandRequest& req, std::ostream& out) {
  const int n = point_count(req, 1, 8);
  const std::vector<CurveClass> classes = req.oracle ? exceptional_classes_diophantine(n) : exceptional_classes(n);
  const auto hist = degree_histogram(classes);
  if (format_or(req, OutputFormat::kText) == OutputFormat::kJson) {
    json list = json::array();
    for (const CurveClass& c : classes) list.push_back(to_json(c.divisor_class()));
    json j{{"n", n}, {"count", classes.size()}, {"classes", std::move(list)}};
    if (req.histogram) {
      json h = json::object();
      for (const auto& [deg, count] : hist) h[std::to_string(deg)] = count;
      j["histogram"] = std::move(h);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const CurveClass& c : classes) out << c << "\n";
  out << classes.size() << " classes\n";
  if (req.histogram) {
    for (const auto& [deg, count] : hist) out << "degree " << deg << ": " << count << "\n";
  }
  return kExitOk;
}

int cmd_seshadri(const CommandRequest& req, std::ostream& out) {
  const int n = point_count(req, 1, kMaxPoints);
  const Rational eps = seshadri(n);
  if (format_or(req, OutputFormat::kText) == OutputFormat::kJson) {
    out << json{{"n", n}, {"seshadri", to_json(eps)}}.dump() << "\n";
  } else {
    out << to_string(eps) << "\n";
  }
  return kExitOk;
}

int cmd_test(const CommandRequest& req, std::ostream& out) {
  const int n = point_count(req, 0, kMaxPoints - 1);
  const DivisorClass d = class_option(req, n);
  const ConeModel& cone = ConeModel::get(n);
  bool result = false;
  std::string name;
  std::string certificate;
  switch (*req.test) {
    case ConeTest::kPsef: {
      name = "psef";
      const auto lambda = pseudoeffective_certificate(d);
      result = lambda.has_value();
      certificate = result ? "D = " + combination_text(cone.generators(), *lambda) : "LP infeasible";
      break;
    }
    case ConeTest::kNef: {
      name = "nef";
      const auto bad = nef_violation(d);
      result = !bad;
      certificate = result ? "D.C >= 0 for every generator"
                           : "D." + to_string(*bad) + " = " + to_string(intersect(d, *bad)) + " < 0";
      break;
    }
    case ConeTest::kAmple: {
      name = "ample";
      result = is_ample(d);
      if (result) {
        certificate = "D^2 = " + to_string(self_intersection(d)) + " > 0 and D.C > 0 for every generator";
      } else if (self_intersection(d) <= 0) {
        certificate = "D^2 = " + to_string(self_intersection(d)) + " <= 0";
      } else {
        for (const CurveClass& g : cone.generators()) {
          if (intersect(d, g) <= 0) {
            certificate = "D." + to_string(g) + " = " + to_string(intersect(d, g)) + " <= 0";
            break;
          }
        }
      }
      break;
    }
    case ConeTest::kBig: {
      name = "big";
      if (!is_pseudoeffective(d)) {
        certificate = "not pseudo-effective";
      } else {
        const ZariskiDecomposition z = zariski_decompose(d);
        result = self_intersection(z.positive) > 0;
        certificate = "P = " + to_string(z.positive) + ", P^2 = " + to_string(self_intersection(z.positive));
      }
      break;
    }
  }
  if (format_or(req, OutputFormat::kText) == OutputFormat::kJson) {
    out << json{{"class", to_json(d)}, {"test", name}, {"result", result}, {"certificate", certificate}}.dump(2)
        << "\n";
  } else {
    out << (result ? "true" : "false") << "\n" << certificate << "\n";
  }
  return kExitOk;
}

int cmd_zariski(const CommandRequest& req, std::ostream& out) {
  const int n = point_count(req, 0, kMaxPoints - 1);
  const ZariskiDecomposition z = zariski_decompose(class_option(req, n));
  if (format_or(req, OutputFormat::kText) == OutputFormat::kJson) {
    out << to_json(z).dump(2) << "\n";
    return kExitOk;
  }
  out << "D = " << z.input << "\n";
  out << "P = " << z.positive << "  P^2 = " << to_string(self_intersection(z.positive)) << "\n";
  for (const NegativeComponent& c : z.negative) {
    out << "N += " << to_string(c.coefficient) << " * " << c.curve << "  P.C = " << to_string(intersect(z.positive, c.curve))
        << "\n";
  }
  if (!z.negative.empty()) {
    out << "support Gram:";
    for (Eigen::Index i = 0; i < z.gram.rows(); ++i) {
      out << (i ? " | " : " ");
      for (Eigen::Index j = 0; j < z.gram.cols(); ++j) out << (j ? " " : "") << to_string(z.gram(i, j));
    }
    out << "  (negative definite)\n";
  }
  out << "P nef: " << (is_nef(z.positive) ? "yes" : "no") << "\n";
  return kExitOk;
}

template <typename Scalar>
void print_polygon(std::ostream& out, long n, const Polygon<Scalar>& p, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    out << polygon_to_json(n, p).dump(2) << "\n";
    return;
  }
  for (const Point<Scalar>& v : p.vertices()) out << "(" << to_string(v.x) << ", " << to_string(v.y) << ")\n";
  if (p.conjectural()) out << "conjectural\n";
}

int cmd_body(const CommandRequest& req, std::ostream& out) {
  const int n = point_count(req, 0, kMaxPoints);
  RationalPolygon p;
  if (req.divisor) {
    const DivisorClass d = class_option(req, n);
    if (n == kMaxPoints) {
      if (d.d() <= 0) throw std::invalid_argument("-D " + *req.divisor + ": degree must be positive on X_9");
      for (int i = 2; i <= n; ++i) {
        if (d.m(i) != d.m(1)) {
          throw MathError(MathErrorKind::kUnsupported, "n=9 bodies are available only for uniform classes");
        }
      }
      p = body_L(n, d.d(), d.m(1));
    } else {
      p = okounkov_body(d);
    }
  } else {
    p = body_L(n, rational_option("-d", *req.d), rational_option("-m", *req.m));
  }
  print_polygon(out, n, p, format_or(req, OutputFormat::kText));
  return kExitOk;
}

int cmd_dissect(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  const Dissection d = dissection(rational_option("--eps", req.eps));
  for (const std::string& w : d.warnings) err << "warning: " << w << "\n";
  if (!(req.scale > 0)) throw std::invalid_argument("--scale " + std::to_string(req.scale) + " must be positive");
  std::string text;
  switch (format_or(req, OutputFormat::kSvg)) {
    case OutputFormat::kJson:
      text = to_json(d).dump(2) + "\n";
      break;
    case OutputFormat::kTikz:
      text = emit_figure(d.bodies, FigureFormat::kTikz, req.scale);
      break;
    default:
      text = emit_figure(d.bodies, FigureFormat::kSvg, req.scale);
      break;
  }
  if (req.output) {
    std::ofstream file(*req.output);
    if (!file) throw std::invalid_argument("-o " + *req.output + ": cannot open for writing");
    file << text;
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_nagata(const CommandRequest& req, std::ostream& out) {
  if (*req.n < 9) throw std::invalid_argument("-n " + std::to_string(*req.n) + " out of range [9, inf)");
  const QuadraticPolygon p = nagata_strip(*req.n, rational_option("-d", *req.d), rational_option("-m", *req.m));
  print_polygon(out, *req.n, p, format_or(req, OutputFormat::kText));
  return kExitOk;
}

int cmd_verify(const CommandRequest& req, std::ostream& out) {
  const VerificationReport report = verify(req.suite, req.seed);
  if (format_or(req, OutputFormat::kText) == OutputFormat::kJson) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back({{"id", c.id}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
    }
    out << json{{"suite", report.suite}, {"seed", report.seed}, {"passed", report.passed()}, {"checks", checks}}.dump(2)
        << "\n";
  } else {
    out << to_text(report);
  }
  return report.exit_code();
}

}  // namespace

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.subcommand == "help") {
      out << req.output.value_or("");
      return kExitOk;
    }
    if (req.subcommand == "curves") return cmd_curves(req, out);
    if (req.subcommand == "seshadri") return cmd_seshadri(req, out);
    if (req.subcommand == "test") return cmd_test(req, out);
    if (req.subcommand == "zariski") return cmd_zariski(req, out);
    if (req.subcommand == "body") return cmd_body(req, out);
    if (req.subcommand == "dissect") return cmd_dissect(req, out, err);
    if (req.subcommand == "nagata") return cmd_nagata(req, out);
    if (req.subcommand == "verify") return cmd_verify(req, out);
    err << "error: unknown subcommand '" << req.subcommand << "'\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandRequest req;
  try {
    req = parse_command_line(args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(req, out, err);
}

}  // namespace okb
