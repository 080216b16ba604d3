// Command-line front end: every library operation behind a subcommand,
// with deterministic JSON/CSV reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cornerdet/dense.hpp"
#include "cornerdet/errors.hpp"
#include "cornerdet/fisher_hartwig.hpp"
#include "cornerdet/lattice.hpp"
#include "cornerdet/limits.hpp"
#include "cornerdet/report.hpp"
#include "cornerdet/symbols.hpp"
#include "cornerdet/toeplitz.hpp"

namespace cd = cornerdet;
using cd::Cplx;

namespace {

// ---------------------------------------------------------------------------
// literal parsing
// ---------------------------------------------------------------------------

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

double parse_double(const std::string& s) {
  if (s.empty()) throw cd::DomainError("empty number literal");
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw cd::DomainError("bad number literal '" + s + "'");
  }
  if (pos != s.size()) throw cd::DomainError("bad number literal '" + s + "'");
  return v;
}

long parse_int(const std::string& s) {
  if (s.empty()) throw cd::DomainError("empty integer literal");
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw cd::DomainError("bad integer literal '" + s + "'");
  }
  if (pos != s.size()) throw cd::DomainError("bad integer literal '" + s + "'");
  return v;
}

// "a+bi" | "a-bi" | "a" | "bi" | "i" | "-i"
Cplx parse_complex(const std::string& raw) {
  std::string s = strip_spaces(raw);
  if (s.empty()) throw cd::DomainError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'I') return Cplx(parse_double(s), 0.0);
  s.pop_back();  // drop the i
  // locate the sign separating real and imaginary parts: a '+'/'-' that is
  // not leading and not part of an exponent
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    std::string im = s;
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return Cplx(0.0, parse_double(im));
  }
  std::string re = s.substr(0, split);
  std::string im = s.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return Cplx(parse_double(re), parse_double(im));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "k1=c1,k2=c2,..."
std::map<int, Cplx> parse_laurent_body(const std::string& body) {
  std::map<int, Cplx> coeffs;
  if (strip_spaces(body).empty())
    throw cd::DomainError("empty Laurent coefficient list");
  for (const std::string& item : split(body, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw cd::DomainError("Laurent entry '" + item + "' is missing '='");
    int k = int(parse_int(strip_spaces(item.substr(0, eq))));
    coeffs[k] = parse_complex(item.substr(eq + 1));
  }
  return coeffs;
}

// fh:<delta>,<gamma> | hfh:[(t_re,t_im,alpha);...]*b:<laurent> | laurent:...
cd::SymbolSpec parse_symbol(const std::string& raw) {
  std::string s = strip_spaces(raw);
  if (s.rfind("fh:", 0) == 0) {
    std::vector<std::string> parts = split(s.substr(3), ',');
    if (parts.size() != 2)
      throw cd::DomainError("fh symbol needs exactly delta,gamma");
    return cd::SymbolSpec::pure_fh(parse_complex(parts[0]),
                                   parse_complex(parts[1]));
  }
  if (s.rfind("laurent:", 0) == 0)
    return cd::SymbolSpec::laurent(parse_laurent_body(s.substr(8)));
  if (s.rfind("hfh:", 0) == 0) {
    std::string body = s.substr(4);
    std::string smooth_body;
    size_t star = body.find("]*b:");
    if (star != std::string::npos) {
      smooth_body = body.substr(star + 4);
      body = body.substr(0, star + 1);
    }
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw cd::DomainError("hfh singularity list must be bracketed");
    std::vector<cd::FhSingularity> sing;
    for (const std::string& item : split(body.substr(1, body.size() - 2), ';')) {
      std::string t = item;
      if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw cd::DomainError("hfh singularity '" + item +
                              "' must be (t_re,t_im,alpha)");
      std::vector<std::string> f = split(t.substr(1, t.size() - 2), ',');
      if (f.size() != 3)
        throw cd::DomainError("hfh singularity '" + item +
                              "' must have three fields");
      sing.push_back({Cplx(parse_double(f[0]), parse_double(f[1])),
                      parse_double(f[2])});
    }
    cd::LaurentPolynomial smooth{{{0, Cplx(1.0, 0.0)}}};
    if (!smooth_body.empty())
      smooth = cd::LaurentPolynomial{parse_laurent_body(smooth_body)};
    return cd::SymbolSpec::hermitian_fh(sing, smooth);
  }
  throw cd::DomainError("unknown symbol literal '" + raw +
                        "' (expected fh:, hfh:, or laurent:)");
}

// rows "a,b;c,d" into an m0 x m0 block
void parse_block(const std::string& literal, cd::DenseMatrix& block) {
  const int m0 = block.rows();
  std::vector<std::string> rows = split(literal, ';');
  if (int(rows.size()) != m0)
    throw cd::DomainError("corner block needs " + std::to_string(m0) +
                          " rows, got " + std::to_string(rows.size()));
  for (int i = 0; i < m0; ++i) {
    std::vector<std::string> cells = split(rows[i], ',');
    if (int(cells.size()) != m0)
      throw cd::DomainError("corner block row " + std::to_string(i + 1) +
                            " needs " + std::to_string(m0) + " entries");
    for (int j = 0; j < m0; ++j) block(i, j) = parse_complex(cells[j]);
  }
}

struct CornerFlags {
  std::string corner;  // "m0=<k>"
  std::string e11, e12, e21, e22;

  cd::CornerPerturbation build() const {
    int m0 = 1;
    if (!corner.empty()) {
      std::string c = strip_spaces(corner);
      if (c.rfind("m0=", 0) != 0)
        throw cd::DomainError("--corner must look like m0=<k>");
      m0 = int(parse_int(c.substr(3)));
    }
    cd::CornerPerturbation p(m0);
    if (!e11.empty()) parse_block(e11, p.e11);
    if (!e12.empty()) parse_block(e12, p.e12);
    if (!e21.empty()) parse_block(e21, p.e21);
    if (!e22.empty()) parse_block(e22, p.e22);
    return p;
  }
};

std::vector<int> parse_n_list(const std::string& raw) {
  std::vector<int> out;
  for (const std::string& item : split(strip_spaces(raw), ','))
    out.push_back(int(parse_int(item)));
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw cd::DomainError("--n-list must be strictly increasing");
  return out;
}

void add_corner_flags(CLI::App* cmd, CornerFlags& f) {
  cmd->add_option("--corner", f.corner, "corner block size, m0=<k>");
  cmd->add_option("--E11", f.e11, "top-left block, rows a+bi,...;...");
  cmd->add_option("--E12", f.e12, "top-right block");
  cmd->add_option("--E21", f.e21, "bottom-left block");
  cmd->add_option("--E22", f.e22, "bottom-right block");
}

// ---------------------------------------------------------------------------
// report assembly
// ---------------------------------------------------------------------------

struct Sink {
  std::string format = "json";  // json|csv
  std::string path;             // empty = stdout
  int precision = 17;

  void validate() const {
    if (format != "json" && format != "csv")
      throw cd::DomainError("--format must be json or csv");
    if (precision < 1 || precision > 17)
      throw cd::DomainError("--precision must be within 1..17");
  }

  void write(const std::string& body) const {
    if (path.empty()) {
      std::fputs(body.c_str(), stdout);
      if (body.empty() || body.back() != '\n') std::fputs("\n", stdout);
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cd::DomainError("cannot open output file '" + path + "'");
    out << body;
    if (body.empty() || body.back() != '\n') out << "\n";
  }
};

void add_sink_flags(CLI::App* cmd, Sink& sink) {
  cmd->add_option("--format", sink.format, "json or csv");
  cmd->add_option("--output", sink.path, "write the report to this file");
  cmd->add_option("--precision", sink.precision, "significant digits (1..17)");
}

std::string matrix_json(const cd::DenseMatrix& m, int prec) {
  std::vector<std::string> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Cplx> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(cd::json_array_complex(row, prec));
  }
  return cd::json_array_raw(rows);
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_det(const std::string& symbol, int n, const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  Cplx oracle = cd::determinant(cd::build_toeplitz(s, n));
  bool pure = s.kind() == cd::SymbolKind::PureFH;
  Cplx exact = 0.0, asym = 0.0;
  if (pure) {
    cd::FHParams p(s.fh().delta, s.fh().gamma);
    exact = cd::fh_exact_det(p, n);
    asym = cd::fh_asymptotic_det(p, n);
  }
  if (sink.format == "csv") {
    cd::CsvWriter csv({"n", "exact", "oracle", "asymptotic"});
    csv.add_row({cd::format_integer(n),
                 pure ? cd::format_complex_literal(exact, sink.precision) : "",
                 cd::format_complex_literal(oracle, sink.precision),
                 pure ? cd::format_complex_literal(asym, sink.precision) : ""});
    sink.write(csv.str());
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n);
  if (pure) out.add_complex("exact", exact, sink.precision);
  out.add_complex("oracle", oracle, sink.precision);
  if (pure) out.add_complex("asymptotic", asym, sink.precision);
  sink.write(out.str());
  return 0;
}

int run_ratio(const std::string& symbol, const CornerFlags& cf, int n,
              const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  cd::CornerPerturbation p = cf.build();
  Cplx ratio = cd::perturbed_det_ratio_exact(s, p, n);
  cd::DenseMatrix t = cd::build_toeplitz(s, n);
  Cplx det_t = cd::determinant(t);
  Cplx det_te = cd::determinant(t + cd::build_perturbation(p, n));
  Cplx oracle = det_te / det_t;
  if (sink.format == "csv") {
    cd::CsvWriter csv({"n", "m0", "ratio", "oracle_ratio"});
    csv.add_row({cd::format_integer(n), cd::format_integer(p.m0),
                 cd::format_complex_literal(ratio, sink.precision),
                 cd::format_complex_literal(oracle, sink.precision)});
    sink.write(csv.str());
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n).add_integer("m0", p.m0);
  out.add_complex("ratio", ratio, sink.precision);
  out.add_complex("oracle_ratio", oracle, sink.precision);
  sink.write(out.str());
  return 0;
}

int run_limit(const std::string& symbol, const CornerFlags& cf,
              const std::string& n_list, const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  cd::CornerPerturbation p = cf.build();
  std::vector<int> ns = n_list.empty() ? std::vector<int>{} : parse_n_list(n_list);
  cd::LimitRatioReport rep = cd::limit_ratio_report(s, p, ns);
  if (sink.format == "csv") {
    cd::CsvWriter csv({"n", "ratio", "limit", "residual"});
    for (size_t i = 0; i < rep.samples.size(); ++i)
      csv.add_row({cd::format_integer(rep.samples[i].first),
                   cd::format_complex_literal(rep.samples[i].second, sink.precision),
                   cd::format_complex_literal(rep.limit_value, sink.precision),
                   cd::format_number(rep.residuals[i].second, sink.precision)});
    sink.write(csv.str());
    return 0;
  }
  std::vector<long long> ns_ll(ns.begin(), ns.end());
  std::vector<Cplx> ratios;
  std::vector<double> residuals;
  for (auto& [n, r] : rep.samples) ratios.push_back(r);
  for (auto& [n, r] : rep.residuals) residuals.push_back(r);
  cd::JsonBuilder out;
  out.add_complex("limit", rep.limit_value, sink.precision);
  out.add_raw("n", cd::json_array_integers(ns_ll));
  out.add_raw("ratio", cd::json_array_complex(ratios, sink.precision));
  out.add_raw("residual", cd::json_array_numbers(residuals, sink.precision));
  out.add_bool("monotone_decreasing", rep.monotone_decreasing);
  sink.write(out.str());
  return 0;
}

int run_inverse_corners(const std::string& symbol, int n, int m0,
                        const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  cd::InverseCorners c = cd::inverse_corners(s, n, m0);
  if (sink.format == "csv") {
    cd::CsvWriter csv({"block", "row", "col", "value"});
    auto emit = [&](const char* name, const cd::DenseMatrix& b) {
      for (int i = 0; i < m0; ++i)
        for (int j = 0; j < m0; ++j)
          csv.add_row({name, cd::format_integer(i + 1), cd::format_integer(j + 1),
                       cd::format_complex_literal(b(i, j), sink.precision)});
    };
    emit("s11", c.s11);
    emit("s12", c.s12);
    emit("s21", c.s21);
    emit("s22", c.s22);
    sink.write(csv.str());
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n).add_integer("m0", m0);
  out.add_raw("s11", matrix_json(c.s11, sink.precision));
  out.add_raw("s12", matrix_json(c.s12, sink.precision));
  out.add_raw("s21", matrix_json(c.s21, sink.precision));
  out.add_raw("s22", matrix_json(c.s22, sink.precision));
  sink.write(out.str());
  return 0;
}

int run_fh_entry(const std::string& symbol, int j, int n,
                 const std::string& side, const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  if (s.kind() != cd::SymbolKind::PureFH)
    throw cd::DomainError("fh-entry needs an fh:<delta>,<gamma> symbol");
  cd::FHParams p(s.fh().delta, s.fh().gamma);
  if (side != "top" && side != "bottom")
    throw cd::DomainError("--side must be top or bottom");
  const bool top = side == "top";
  if (j < (top ? 1 : 0) || j >= n)
    throw cd::DomainError("--j out of range for this side");
  // top: c_{j,n}; bottom: c_{n-j,n}
  Cplx exact = top ? cd::fh_last_col_entry(p, j, n)
                   : cd::fh_last_col_entry(p, n - j, n);
  cd::AsymptoticEntry ae = cd::fh_entry_asymptotic(
      p, j, top ? cd::EntrySide::Top : cd::EntrySide::Bottom);
  Cplx asym = ae.eval(n);
  double residual = std::abs(exact - asym);
  if (sink.format == "csv") {
    cd::CsvWriter csv({"n", "j", "side", "exact", "asymptotic", "residual"});
    csv.add_row({cd::format_integer(n), cd::format_integer(j), side,
                 cd::format_complex_literal(exact, sink.precision),
                 cd::format_complex_literal(asym, sink.precision),
                 cd::format_number(residual, sink.precision)});
    sink.write(csv.str());
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n).add_integer("j", j).add_string("side", side);
  out.add_complex("exact", exact, sink.precision);
  out.add_complex("asymptotic", asym, sink.precision);
  out.add_number("residual", residual, sink.precision);
  sink.write(out.str());
  return 0;
}

int run_verblunsky(const std::string& symbol, int n, const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  cd::PredictorData pd = cd::levinson_first_column(s, n);
  if (sink.format == "csv") {
    cd::CsvWriter csv({"j", "first_column", "alpha", "kappa"});
    std::string kappa = cd::format_number(pd.kappa, sink.precision);
    for (int j = 0; j < n; ++j)
      csv.add_row({cd::format_integer(j + 1),
                   cd::format_complex_literal(pd.first_column[j], sink.precision),
                   j + 1 < n ? cd::format_complex_literal(pd.verblunsky[j], sink.precision)
                             : "",
                   kappa});
    sink.write(csv.str());
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n);
  out.add_number("kappa", pd.kappa, sink.precision);
  out.add_raw("verblunsky", cd::json_array_complex(pd.verblunsky, sink.precision));
  out.add_raw("first_column", cd::json_array_complex(pd.first_column, sink.precision));
  sink.write(out.str());
  return 0;
}

int run_lattice(int n, bool cauchy_binet, const Sink& sink) {
  cd::BigInt gram = cd::gram_determinant(n);
  const bool degenerate = n < 2;
  cd::BigInt expected = cd::BigInt(n + 1) * (n + 1) * (n + 1);
  cd::CauchyBinetResult cb;
  if (cauchy_binet) cb = cd::cauchy_binet_check(n);
  if (sink.format == "csv") {
    if (cauchy_binet) {
      cd::CsvWriter csv({"n", "gram_det", "expected", "minor_abs"});
      for (const cd::BigInt& m : cb.minor_abs)
        csv.add_row({cd::format_integer(n), gram.str(),
                     degenerate ? "" : expected.str(), m.str()});
      sink.write(csv.str());
    } else {
      cd::CsvWriter csv({"n", "gram_det", "expected"});
      csv.add_row({cd::format_integer(n), gram.str(),
                   degenerate ? "" : expected.str()});
      sink.write(csv.str());
    }
    return 0;
  }
  cd::JsonBuilder out;
  out.add_integer("n", n);
  out.add_raw("gram_det", gram.str());
  if (degenerate)
    out.add_bool("degenerate", true);
  else
    out.add_raw("expected", expected.str());
  if (cauchy_binet) {
    std::vector<std::string> minors;
    for (const cd::BigInt& m : cb.minor_abs) minors.push_back(m.str());
    out.add_raw("minors", cd::json_array_raw(minors));
  }
  sink.write(out.str());
  return 0;
}

int run_sweep(const std::string& symbol, const CornerFlags& cf,
              const std::string& n_list, const Sink& sink) {
  cd::SymbolSpec s = parse_symbol(symbol);
  cd::CornerPerturbation p = cf.build();
  std::vector<int> ns = parse_n_list(n_list);
  if (ns.empty()) throw cd::DomainError("sweep needs a nonempty --n-list");

  bool pure = s.kind() == cd::SymbolKind::PureFH;
  bool have_limit = true;
  Cplx limit = 0.0;
  try {
    limit = cd::limit_ratio_report(s, p, {}).limit_value;
  } catch (const cd::UnsupportedSymbolError&) {
    have_limit = false;
  }

  struct Row {
    int n;
    Cplx exact_det, oracle_det, ratio;
    double residual;
  };
  std::vector<Row> rows;
  for (int n : ns) {
    Row r;
    r.n = n;
    if (pure) {
      cd::FHParams fp(s.fh().delta, s.fh().gamma);
      r.exact_det = cd::fh_exact_det(fp, n);
    }
    r.oracle_det = cd::determinant(cd::build_toeplitz(s, n));
    r.ratio = cd::perturbed_det_ratio_exact(s, p, n);
    r.residual = have_limit ? std::abs(r.ratio - limit) : 0.0;
    rows.push_back(r);
  }

  if (sink.format == "json") {
    std::vector<std::string> fragments;
    for (const Row& r : rows) {
      cd::JsonBuilder row;
      row.add_integer("n", r.n);
      if (pure) row.add_complex("exact_det", r.exact_det, sink.precision);
      row.add_complex("oracle_det", r.oracle_det, sink.precision);
      row.add_complex("ratio", r.ratio, sink.precision);
      if (have_limit) row.add_number("residual", r.residual, sink.precision);
      fragments.push_back(row.str());
    }
    cd::JsonBuilder out;
    if (have_limit) out.add_complex("limit", limit, sink.precision);
    out.add_raw("rows", cd::json_array_raw(fragments));
    sink.write(out.str());
    return 0;
  }
  cd::CsvWriter csv({"n", "exact_det", "oracle_det", "ratio", "limit", "residual"});
  for (const Row& r : rows)
    csv.add_row({cd::format_integer(r.n),
                 pure ? cd::format_complex_literal(r.exact_det, sink.precision) : "",
                 cd::format_complex_literal(r.oracle_det, sink.precision),
                 cd::format_complex_literal(r.ratio, sink.precision),
                 have_limit ? cd::format_complex_literal(limit, sink.precision) : "",
                 have_limit ? cd::format_number(r.residual, sink.precision) : ""});
  sink.write(csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Toeplitz determinants and inverses with corner perturbations"};
  app.require_subcommand(1);

  std::string symbol, n_list, side = "top";
  int n = 0, j = 1, m0 = 1;
  bool cauchy_binet = false;
  CornerFlags corner;
  Sink sink;

  CLI::App* det = app.add_subcommand("det", "determinants of T_n");
  det->add_option("--symbol", symbol, "symbol literal")->required();
  det->add_option("--n", n, "matrix order")->required();
  add_sink_flags(det, sink);

  CLI::App* ratio = app.add_subcommand("ratio", "det(T_n+E_n)/det T_n");
  ratio->add_option("--symbol", symbol, "symbol literal")->required();
  ratio->add_option("--n", n, "matrix order")->required();
  add_corner_flags(ratio, corner);
  add_sink_flags(ratio, sink);

  CLI::App* limit = app.add_subcommand("limit", "limit ratio and residual trend");
  limit->add_option("--symbol", symbol, "symbol literal")->required();
  limit->add_option("--n-list", n_list, "comma list of orders, ascending");
  add_corner_flags(limit, corner);
  add_sink_flags(limit, sink);

  CLI::App* ic = app.add_subcommand("inverse-corners", "corner blocks of T_n^{-1}");
  ic->add_option("--symbol", symbol, "symbol literal")->required();
  ic->add_option("--n", n, "matrix order")->required();
  ic->add_option("--m0", m0, "corner block size");
  add_sink_flags(ic, sink);

  CLI::App* fe = app.add_subcommand("fh-entry", "exact and asymptotic last-column entries");
  fe->add_option("--symbol", symbol, "fh:<delta>,<gamma> literal")->required();
  fe->add_option("--n", n, "matrix order")->required();
  fe->add_option("--j", j, "entry index");
  fe->add_option("--side", side, "top (c_{j,n}) or bottom (c_{n-j,n})");
  add_sink_flags(fe, sink);

  CLI::App* vb = app.add_subcommand("verblunsky", "Levinson recursion output");
  vb->add_option("--symbol", symbol, "Hermitian symbol literal")->required();
  vb->add_option("--n", n, "matrix order")->required();
  add_sink_flags(vb, sink);

  CLI::App* lat = app.add_subcommand("lattice", "exact lattice Gram determinant");
  lat->add_option("--n", n, "basis size")->required();
  lat->add_flag("--cauchy-binet", cauchy_binet, "also list maximal minors");
  add_sink_flags(lat, sink);

  CLI::App* sweep = app.add_subcommand("sweep", "determinants and ratios over an n-list");
  sweep->add_option("--symbol", symbol, "symbol literal")->required();
  sweep->add_option("--n-list", n_list, "comma list of orders, ascending")->required();
  add_corner_flags(sweep, corner);
  add_sink_flags(sweep, sink);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed() && sweep->count("--format") == 0) sink.format = "csv";
    sink.validate();
    if (det->parsed()) return run_det(symbol, n, sink);
    if (ratio->parsed()) return run_ratio(symbol, corner, n, sink);
    if (limit->parsed()) return run_limit(symbol, corner, n_list, sink);
    if (ic->parsed()) return run_inverse_corners(symbol, n, m0, sink);
    if (fe->parsed()) return run_fh_entry(symbol, j, n, side, sink);
    if (vb->parsed()) return run_verblunsky(symbol, n, sink);
    if (lat->parsed()) return run_lattice(n, cauchy_binet, sink);
    if (sweep->parsed()) return run_sweep(symbol, corner, n_list, sink);
    std::fprintf(stderr, "no subcommand selected\n");
    return 2;
  } catch (const cd::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cd::NumericError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
