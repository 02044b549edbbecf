// monopole_spectra: spectral curves, mass relations and verification
// reports as JSON or CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 numerical or integrity failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/acceptance.hpp"
#include "monopole/algebraic.hpp"
#include "monopole/charge2.hpp"
#include "monopole/cohomology.hpp"
#include "monopole/division.hpp"
#include "monopole/parallel.hpp"
#include "monopole/platonic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace monopole;

constexpr const char* kSchemaVersion = "1.0.0";

enum class Format { Json, Csv };

struct Output {
  Format format = Format::Json;
  std::string path;
  bool precision_report = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json cnum(cplx z) { return json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

json matrix(const BidegreeCurve& c) {
  json rows = json::array();
  for (int i = 0; i <= c.k; ++i) {
    json row = json::array();
    for (int j = 0; j <= c.k; ++j) row.push_back(cnum(c(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<std::string>> matrix_rows(const BidegreeCurve& c) {
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i <= c.k; ++i) {
    for (int j = 0; j <= c.k; ++j) {
      rows.push_back({std::to_string(i), std::to_string(j), num(c(i, j).real()), num(c(i, j).imag())});
    }
  }
  return rows;
}

json document(const std::string& command, json inputs, json outputs, json residuals) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"residuals", std::move(residuals)}};
}

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + out.path + "'");
  f << text;
}

void emit(const Output& out, const json& doc) { emit(out, doc.dump(2) + "\n"); }

// "p/q", integer or decimal text to double.
double parse_real(const std::string& text, const char* what) {
  if (text.find('/') != std::string::npos) {
    try {
      return parse_mass(text).get_d();
    } catch (const DomainError&) {
      throw UsageError(std::string(what) + " '" + text + "' is not a number");
    }
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw UsageError(std::string(what) + " '" + text + "' is not a number");
  }
  return v;
}

// Exact rational if the text is "p/q" or an integer.
std::optional<Rational> parse_exact(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789/-+") != std::string::npos) return std::nullopt;
  try {
    return parse_mass(text);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

PlatonicGroup parse_group(const std::string& g) { return g == "tetra" ? PlatonicGroup::Tetrahedral : PlatonicGroup::Octahedral; }

json tolerances(std::initializer_list<std::pair<const char*, double>> t) {
  json j = json::object();
  for (const auto& [k, v] : t) j[k] = num(v);
  return j;
}

// ---------------------------------------------------------------- curve2

struct Curve2Args {
  std::string mass, kappa, limit;
};

void cmd_curve2(const Curve2Args& a, const Output& out) {
  json inputs = json::object();
  if (!a.mass.empty()) inputs["mass"] = a.mass;
  if (!a.kappa.empty()) inputs["kappa"] = a.kappa;
  if (!a.limit.empty()) inputs["limit"] = a.limit;
  const bool has_m = !a.mass.empty(), has_k = !a.kappa.empty();
  const double m = has_m ? parse_real(a.mass, "mass") : 0.0;
  const double kappa = has_k ? parse_real(a.kappa, "kappa") : 0.0;
  json outputs = json::object(), residuals = json::object();
  BidegreeCurve curve;
  std::string normalized_by = "w^2";

  if (a.limit.empty()) {
    if (!has_m || !has_k) throw UsageError("curve2 needs --mass and --kappa (or --limit)");
    curve = curve_from_mass(m, kappa);
  } else if (a.limit == "axial") {
    if (!has_m || has_k) throw UsageError("--limit axial takes --mass only");
    curve = limit_axial(m);
  } else if (a.limit == "nullaron") {
    if (has_m || !has_k) throw UsageError("--limit nullaron takes --kappa only");
    curve = limit_nullaron(kappa);
  } else if (a.limit == "separation") {
    if (has_m || has_k) throw UsageError("--limit separation takes no parameters");
    curve = limit_separation();
  } else {  // euclid
    if (has_m || !has_k) throw UsageError("--limit euclid takes --kappa only");
    const EuclidCharge2 e = euclid_limit_charge2(kappa);
    json lf = json::array(), sf = json::array(), bp = json::array();
    for (double x : e.limit_form) lf.push_back(num(x));
    for (double x : e.standard_form) sf.push_back(num(x));
    for (double x : e.branch_points) bp.push_back(num(x));
    outputs["k"] = num(e.k);
    outputs["limit_form"] = lf;
    outputs["standard_form"] = sf;
    outputs["branch_points"] = bp;
    residuals["form_deviation"] = num(e.max_deviation);
    if (out.precision_report) residuals["tolerances"] = tolerances({{"form_deviation", 1e-12}});
    if (out.format == Format::Csv) {
      std::vector<std::vector<std::string>> rows;
      for (int i = 0; i <= 4; ++i) rows.push_back({std::to_string(i), lf[i], sf[i]});
      emit(out, csv({"power", "limit_form", "standard_form"}, rows));
    } else {
      emit(out, document("curve2", inputs, outputs, residuals));
    }
    return;
  }

  const BidegreeCurve normalized = curve.normalized_at(2, 0);
  outputs["bidegree"] = curve.k;
  outputs["coefficients"] = matrix(curve);
  outputs["normalized_by"] = normalized_by;
  outputs["normalized"] = matrix(normalized);
  residuals["reality_defect"] = num(curve.reality_defect());
  residuals["symmetry_defect"] = num(curve.symmetry_defect());
  if (a.limit.empty() && kappa > 0.0) {
    const Charge2Derived d = derived_params(m, kappa);
    outputs["derived"] = json{{"rho", num(d.rho)},      {"u", num(d.u)},         {"v", num(d.v)},
                              {"lambda", num(d.lambda)}, {"Lambda_sq", num(d.Lambda_sq)}, {"alpha", num(d.alpha)},
                              {"beta", num(d.beta)}};
    const Charge2Verification v = verify_triviality(m, kappa);
    outputs["cycle_integers"] = json{{"ell1", v.ell1}, {"ell2", v.ell2}};
    residuals["mass_residual"] = num(std::abs(v.mass_residual));
    residuals["cycle_integer_residual"] = num(v.ell_residual);
  }
  if (out.precision_report) {
    residuals["tolerances"] = tolerances({{"mass_residual", 1e-10}, {"cycle_integer_residual", 1e-6}, {"reality_defect", 1e-12}});
  }
  if (out.format == Format::Csv) {
    emit(out, csv({"i", "j", "re", "im"}, matrix_rows(normalized)));
  } else {
    emit(out, document("curve2", inputs, outputs, residuals));
  }
}

// ---------------------------------------------------------------- platonic

struct PlatonicArgs {
  std::string group, mass, alpha, beta;
};

void cmd_platonic(const PlatonicArgs& a, const Output& out) {
  const PlatonicGroup g = parse_group(a.group);
  json inputs{{"group", a.group}};
  if (a.mass.empty() == a.alpha.empty()) throw UsageError("platonic needs exactly one of --mass and --alpha");
  if (!a.beta.empty() && a.alpha.empty()) throw UsageError("--beta requires --alpha");
  json outputs = json::object(), residuals = json::object();
  double alpha = 0.0, m = -1.0;
  if (!a.mass.empty()) {
    inputs["mass"] = a.mass;
    m = parse_real(a.mass, "mass");
    const AlphaSolution s = alpha_from_mass(g, m);
    alpha = s.alpha;
    residuals["mass_relation"] = num(std::abs(s.residual));
  } else {
    inputs["alpha"] = a.alpha;
    alpha = parse_real(a.alpha, "alpha");
  }
  const double beta = a.beta.empty() ? 0.0 : parse_real(a.beta, "beta");
  if (!a.beta.empty()) inputs["beta"] = a.beta;
  const BidegreeCurve curve = ansatz_curve(g, alpha, beta);
  outputs["charge"] = charge(g);
  outputs["alpha"] = num(alpha);
  if (m >= 0.0) outputs["mass"] = num(m);
  outputs["coefficients"] = matrix(curve);
  residuals["reality_defect"] = num(curve.reality_defect());
  if (beta == 0.0) {
    const EllipticInvariants inv = quotient_invariants(g, alpha);
    outputs["g2"] = num(inv.g2());
    outputs["g3"] = num(inv.g3());
    outputs["j"] = num(j_invariant(g, alpha));
    outputs["pole_x"] = num(pole_x(g, alpha));
    outputs["mass_relation_rhs"] = num(mass_relation_rhs(g, alpha));
    if (const auto exact = parse_exact(a.alpha); exact && !a.alpha.empty() && sgn(*exact) > 0) {
      const Rational t = g == PlatonicGroup::Tetrahedral ? Rational(*exact * *exact) : *exact;
      const auto [g2, g3] = quotient_invariants_exact(g, t);
      outputs["exact"] = json{{"g2", g2.get_str()}, {"g3", g3.get_str()}, {"j", j_invariant_exact(g, t).get_str()}};
    }
    const HalfPeriods hp = half_periods(inv);
    outputs["periods"] = json{{"varpi", num(hp.varpi)}, {"varpi_prime", cnum(hp.varpi_prime)}, {"varpi1", cnum(hp.varpi1)}};
    if (m >= 0.0) {
      const CycleIntegers c = verify_cycle_integers(g, alpha, m);
      outputs["cycle_integers"] = json{{"ell1", c.ell1}, {"ell2", c.ell2}};
      residuals["cycle_integer_residual"] = num(c.residual);
      if (m > 0.0) residuals["pole_relation"] = num(std::abs(pole_relation_residual(g, alpha, m)));
    }
  }
  if (out.precision_report) {
    residuals["tolerances"] = tolerances({{"mass_relation", 1e-8}, {"cycle_integer_residual", 1e-6}, {"reality_defect", 1e-12}});
  }
  if (out.format == Format::Csv) {
    emit(out, csv({"i", "j", "re", "im"}, matrix_rows(curve)));
  } else {
    emit(out, document("platonic", inputs, outputs, residuals));
  }
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string group, mass_min, mass_max;
  int steps = 0;
};

void cmd_scan(const ScanArgs& a, const Output& out) {
  const PlatonicGroup g = parse_group(a.group);
  const double lo = parse_real(a.mass_min, "mass-min"), hi = parse_real(a.mass_max, "mass-max");
  if (!(lo > 0.0) || !(hi > lo)) throw UsageError("scan needs 0 < mass-min < mass-max");
  if (a.steps < 1) throw UsageError("scan needs --steps >= 1");
  const std::size_t n = static_cast<std::size_t>(a.steps) + 1;
  const auto rows = parallel_map(
      n,
      [&](std::size_t i) {
        const double m = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / a.steps;
        const QuotientCurve q = quotient_curve_for_mass(g, m);
        return std::vector<std::string>{num(m),     num(q.alpha),        num(q.inv.g2()),          num(q.inv.g3()),
                                        num(q.j),   std::to_string(q.ell1), num(std::abs(q.residual))};
      },
      thread_count());
  const std::vector<std::string> header{"m", "alpha", "g2", "g3", "j", "ell1", "residual"};
  if (out.format == Format::Csv) {
    emit(out, csv(header, rows));
    return;
  }
  json table = json::array();
  double worst = 0.0;
  for (const auto& r : rows) {
    json row = json::object();
    for (std::size_t k = 0; k < header.size(); ++k) row[header[k]] = r[k];
    table.push_back(row);
    worst = std::max(worst, std::stod(r[6]));
  }
  json residuals{{"max_mass_relation", num(worst)}};
  if (out.precision_report) residuals["tolerances"] = tolerances({{"max_mass_relation", 1e-8}});
  emit(out, document("scan",
                     json{{"group", a.group}, {"mass_min", a.mass_min}, {"mass_max", a.mass_max}, {"steps", a.steps}},
                     json{{"columns", header}, {"rows", table}}, residuals));
}

// ---------------------------------------------------------------- half-integer

struct HalfRow {
  std::string m;
  int r = 0;
  double alpha = 0.0, numeric = 0.0;
  std::string closed, minimal, determinant, new_factor;
};

HalfRow half_integer_row(PlatonicGroup g, int r) {
  HalfRow row;
  row.r = r;
  row.m = r % 2 == 0 ? std::to_string(r / 2) : std::to_string(r) + "/2";
  RationalPolynomial factor;
  if (r == 0) {
    // alpha(0) is the end of the interval, the root of the level-0 determinant.
    row.determinant = to_string(real_form(det_poly(multiplication_matrix(g, 0))));
    factor = squarefree_part(real_form(det_poly(multiplication_matrix(g, 0))));
    row.alpha = alpha_max(g);
    row.numeric = alpha_from_mass(g, 0.0).alpha;
  } else {
    const HalfIntegerAlpha h = half_integer_alpha(g, r);
    row.determinant = to_string(h.determinant);
    factor = h.new_factor;
    row.alpha = h.alpha;
    row.numeric = h.numeric_alpha;
  }
  row.new_factor = to_string(factor);
  const auto mp = minimal_polynomial(IntegerPolynomial(primitive_integer_coefficients(factor)), row.alpha);
  if (!mp) throw IntegrityError("half-integer: no minimal polynomial found for alpha");
  row.minimal = to_string(*mp);
  row.closed = closed_form(*mp, row.alpha).value_or("");
  return row;
}

void cmd_half_integer(const std::string& group, const std::string& max_m_text, const Output& out) {
  const PlatonicGroup g = parse_group(group);
  const double max_m = parse_real(max_m_text, "max-m");
  if (!(max_m >= 0.0) || max_m > 4.0) throw UsageError("--max-m must lie in [0, 4]");
  const int rmax = static_cast<int>(std::floor(2 * max_m + 1e-9));
  const auto rows = parallel_map(
      static_cast<std::size_t>(rmax + 1), [&](std::size_t r) { return half_integer_row(g, static_cast<int>(r)); },
      thread_count());
  const std::vector<std::string> header{"m", "alpha", "closed_form", "minimal_polynomial", "numeric_alpha", "residual"};
  std::vector<std::vector<std::string>> table;
  json jrows = json::array();
  double worst = 0.0;
  for (const auto& r : rows) {
    const double res = std::abs(r.alpha - r.numeric);
    worst = std::max(worst, res);
    table.push_back({r.m, num(r.alpha), r.closed, r.minimal, num(r.numeric), num(res)});
    jrows.push_back(json{{"m", r.m},
                         {"level", r.r},
                         {"alpha", num(r.alpha)},
                         {"closed_form", r.closed},
                         {"minimal_polynomial", r.minimal},
                         {"determinant", r.determinant},
                         {"new_factor", r.new_factor},
                         {"numeric_alpha", num(r.numeric)}});
  }
  if (out.format == Format::Csv) {
    emit(out, csv(header, table));
    return;
  }
  json residuals{{"max_alpha_disagreement", num(worst)}};
  if (out.precision_report) residuals["tolerances"] = tolerances({{"max_alpha_disagreement", 1e-8}});
  emit(out, document("half-integer", json{{"group", group}, {"max_m", max_m_text}}, json{{"rows", jrows}}, residuals));
}

// ---------------------------------------------------------------- rational

void cmd_rational(const std::string& group, const std::string& mass_text, long budget, const Output& out) {
  const PlatonicGroup g = parse_group(group);
  const auto mass = parse_exact(mass_text);
  if (!mass || sgn(*mass) <= 0) throw UsageError("--mass must be a positive rational p/q");
  const RationalMassAlpha r = alpha_for_rational_mass(g, *mass, budget);
  const auto mp = minimal_polynomial(r.polynomial.poly, r.alpha);
  std::string minimal = mp ? to_string(*mp) : "";
  std::string closed = mp ? closed_form(*mp, r.alpha).value_or("") : "";
  if (out.format == Format::Csv) {
    emit(out, csv({"group", "mass", "n", "k1", "degree", "alpha", "minimal_polynomial", "closed_form", "residual"},
                  {{group, mass->get_str(), std::to_string(r.polynomial.point.n), std::to_string(r.polynomial.point.k1),
                    std::to_string(r.polynomial.poly.degree()), num(r.alpha), minimal, closed,
                    num(std::abs(r.residual))}}));
    return;
  }
  json candidates = json::array();
  for (double c : r.candidates) candidates.push_back(num(c));
  json outputs{{"n", r.polynomial.point.n},
               {"k1", r.polynomial.point.k1},
               {"degree", r.polynomial.poly.degree()},
               {"alpha", num(r.alpha)},
               {"minimal_polynomial", minimal},
               {"minimal_degree", mp ? mp->degree() : 0},
               {"closed_form", closed},
               {"candidates", candidates},
               {"alpha_polynomial", to_string(r.polynomial.poly)}};
  json residuals{{"pole_relation", num(r.pole_residual)},
                 {"mass_relation", num(std::abs(r.residual))},
                 {"division", num(r.division_residual)}};
  if (out.precision_report) residuals["tolerances"] = tolerances({{"pole_relation", 1e-8}, {"division", 1e-6}});
  emit(out, document("rational", json{{"group", group}, {"mass", mass->get_str()}, {"budget", budget}}, outputs, residuals));
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const Output& out) {
  const auto results = acceptance::run_suite(suite);
  bool ok = true;
  json checks = json::array(), failures = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    ok = ok && r.passed;
    checks.push_back(json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) failures.push_back(r.suite);
    rows.push_back({r.suite, r.name, r.passed ? "PASS" : "FAIL", r.detail});
  }
  if (out.format == Format::Csv) {
    emit(out, csv({"suite", "name", "status", "detail"}, rows));
  } else {
    emit(out, document("verify", json{{"suite", suite}},
                       json{{"passed", ok}, {"checks", checks}, {"failures", failures}}, json::object()));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral curves of hyperbolic monopoles"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "Write to this file instead of stdout");
  app.add_flag("--precision-report", out.precision_report, "Add the tolerances to the residuals");

  Curve2Args c2;
  auto* curve2 = app.add_subcommand("curve2", "Charge-2 curve from mass and modulus");
  curve2->add_option("--mass", c2.mass, "Mass m >= 0");
  curve2->add_option("--kappa", c2.kappa, "Modulus 0 <= kappa < 1");
  curve2->add_option("--limit", c2.limit, "Limiting curve")->check(CLI::IsMember({"axial", "nullaron", "separation", "euclid"}));

  PlatonicArgs pa;
  auto* platonic = app.add_subcommand("platonic", "Tetrahedral (k=3) or octahedral (k=4) curve");
  platonic->add_option("--group", pa.group, "tetra or octa")->required()->check(CLI::IsMember({"tetra", "octa"}));
  platonic->add_option("--mass", pa.mass, "Mass m >= 0");
  platonic->add_option("--alpha", pa.alpha, "Curve parameter alpha");
  platonic->add_option("--beta", pa.beta, "Second parameter of the degree-4 family");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "alpha and quotient data over a mass range");
  scan->add_option("--group", sa.group, "tetra or octa")->required()->check(CLI::IsMember({"tetra", "octa"}));
  scan->add_option("--mass-min", sa.mass_min, "Smallest mass")->required();
  scan->add_option("--mass-max", sa.mass_max, "Largest mass")->required();
  scan->add_option("--steps", sa.steps, "Number of intervals (steps + 1 rows)")->required();

  std::string hg, hmax = "1.5";
  auto* half = app.add_subcommand("half-integer", "Algebraic alpha at half-integer masses");
  half->add_option("--group", hg, "tetra or octa")->required()->check(CLI::IsMember({"tetra", "octa"}));
  half->add_option("--max-m", hmax, "Largest mass (default 1.5)");

  std::string rg, rm;
  long budget = kDefaultDivisionBudget;
  auto* rational = app.add_subcommand("rational", "alpha at a rational mass via division polynomials");
  rational->add_option("--group", rg, "tetra or octa")->required()->check(CLI::IsMember({"tetra", "octa"}));
  rational->add_option("--mass", rm, "Mass p/q")->required();
  rational->add_option("--budget", budget, "Largest division order");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(acceptance::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  out.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    (void)thread_count();
    if (*curve2) cmd_curve2(c2, out);
    if (*platonic) cmd_platonic(pa, out);
    if (*scan) cmd_scan(sa, out);
    if (*half) cmd_half_integer(hg, hmax, out);
    if (*rational) cmd_rational(rg, rm, budget, out);
    if (*verify) return cmd_verify(suite, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
