// Command-line front end. Every subcommand streams machine-readable output
// (compact JSON, TSV, Matrix Market, or CSV); identical configuration yields
// byte-identical output unless --timing is requested. Exit codes: 0 success,
// 1 computation failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "redfib/asymptotics.hpp"
#include "redfib/determinant.hpp"
#include "redfib/matrix.hpp"
#include "redfib/matrix_io.hpp"
#include "redfib/numtheory.hpp"
#include "redfib/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace redfib;

namespace {

// Configuration problems (bad flag combinations, unknown names, unreadable
// inputs) exit with code 2; anything thrown during computation exits 1.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint32_t n = 1;
  std::string kind = "fibonacci";
  std::string sequence;  // inline comma/space separated values
  std::string preset;    // "power:<p>" or "log-shift"
  std::string file;      // one value per line
  std::string b = "0";   // corner offset for the variant kind
  double tol = 1e-10;
  std::string output;    // empty = stdout
  int digits = 0;        // 0 = use default (env or 30)
  bool timing = false;
};

int default_digits() {
  if (const char* env = std::getenv("REDFIB_DIGITS")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= 50) return v;
  }
  return kDefaultReportDigits;
}

int effective_digits(const Common& c) { return c.digits > 0 ? c.digits : default_digits(); }

void add_common(CLI::App* cmd, Common& c, bool with_sequence = true) {
  cmd->add_option("-n,--n", c.n, "matrix size");
  cmd->add_option("--kind", c.kind,
                  "matrix kind: classic | fibonacci | fibonacci-variant | generalized");
  if (with_sequence) {
    auto* seq = cmd->add_option("--sequence", c.sequence,
                                "inline weight sequence, e.g. \"1/2,1,3,4,5,6\"");
    auto* preset = cmd->add_option("--preset", c.preset,
                                   "named weight sequence: power:<p> | log-shift");
    auto* file = cmd->add_option("--sequence-file", c.file,
                                 "file with one weight per line (p/q or decimal)");
    seq->excludes(preset)->excludes(file);
    preset->excludes(file);
    cmd->add_option("--b", c.b, "corner offset for the fibonacci-variant kind");
  }
  cmd->add_option("--tol", c.tol, "numeric tolerance for refinement")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", c.output, "write output to this file instead of stdout");
  cmd->add_option("--digits", c.digits, "significant digits for decimal output (1-50)")
      ->check(CLI::Range(1, 50));
  cmd->add_flag("--timing", c.timing, "include elapsed milliseconds (breaks byte determinism)");
}

std::vector<Rational> parse_inline_sequence(const std::string& text) {
  std::vector<Rational> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream parts(token);
    std::string word;
    while (parts >> word) values.push_back(parse_rational(word));
  }
  return values;
}

MatrixSpec make_spec(const Common& c) {
  MatrixSpec spec;
  try {
    spec.kind = kind_from_name(c.kind);
    spec.n = c.n;
    if (spec.kind == MatrixKind::FibonacciVariant) spec.corner_offset_b = parse_rational(c.b);
    if (spec.kind == MatrixKind::Generalized) {
      if (!c.sequence.empty()) {
        spec.sequence.values = parse_inline_sequence(c.sequence);
      } else if (!c.preset.empty()) {
        if (c.preset.rfind("power:", 0) == 0) {
          const int p = std::stoi(c.preset.substr(6));
          if (p < 1 || p > 16) throw UsageFailure("preset power exponent must be in [1, 16]");
          for (std::uint32_t j = 1; j <= c.n; ++j) {
            BigInt v = 1;
            for (int e = 0; e < p; ++e) v *= j;
            spec.sequence.values.emplace_back(v);
          }
        } else if (c.preset == "log-shift") {
          // a_i = (i+1) / ln^2(i+1): irrational weights, carried as decimal
          // approximations and flagged so exact-only paths refuse them.
          const int digits = effective_digits(c);
          for (std::uint32_t j = 1; j <= c.n; ++j) {
            const Real v = Real(j + 1) / (log(Real(j + 1)) * log(Real(j + 1)));
            spec.sequence.values.push_back(parse_rational(decimal_string(v, digits)));
          }
          spec.sequence.approximate = true;
        } else {
          throw UsageFailure("unknown preset: " + c.preset);
        }
      } else if (!c.file.empty()) {
        std::ifstream in(c.file);
        if (!in) throw UsageFailure("cannot open sequence file: " + c.file);
        std::string line;
        while (std::getline(in, line)) {
          std::istringstream parts(line);
          std::string word;
          if (parts >> word) spec.sequence.values.push_back(parse_rational(word));
        }
      } else {
        throw UsageFailure("the generalized kind needs --sequence, --preset, or --sequence-file");
      }
    }
    spec.validate();
  } catch (const UsageFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageFailure(e.what());
  }
  return spec;
}

// Output sink: file when requested, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      m_file.open(path);
      if (!m_file) throw UsageFailure("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return m_file.is_open() ? m_file : std::cout; }

 private:
  std::ofstream m_file;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - m_start).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point m_start = clock::now();
};

void emit(const Common& c, const json& doc) {
  Sink sink(c.output);
  sink.stream() << doc.dump() << "\n";
}

json real_json(const Real& x, int digits) { return decimal_string(x, digits); }

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns normally on success and throws on failure.

void run_build(const Common& c, const std::string& format, bool exact) {
  const MatrixSpec spec = make_spec(c);
  const DivisorMatrix matrix = build(spec);
  Sink sink(c.output);
  if (format == "matrixmarket") {
    write_matrix_market(sink.stream(), matrix, exact, effective_digits(c));
  } else if (format == "csv") {
    write_csv(sink.stream(), matrix, effective_digits(c));
  } else {
    throw UsageFailure("build supports --format matrixmarket or csv");
  }
}

void run_det(const Common& c, const std::string& method) {
  const MatrixSpec spec = make_spec(c);
  const Stopwatch watch;
  const int digits = effective_digits(c);

  json doc;
  doc["n"] = spec.n;
  doc["kind"] = kind_name(spec.kind);
  doc["method"] = method;

  const DivisorMatrix matrix = build(spec);
  const bool approx = matrix.approximate();
  if (approx && method != "closed") {
    throw unsupported_exact(
        "approximate sequences support --method closed only (exact elimination and "
        "characteristic-polynomial routes are refused)");
  }

  const DetValue closed = det_closed_form(spec);
  Rational value;
  bool have_exact = false;
  if (method == "closed") {
    if (closed.exact) {
      value = closed.value;
      have_exact = true;
    }
  } else if (method == "elimination") {
    value = det_elimination(spec);
    have_exact = true;
  } else if (method == "charpoly") {
    value = charpoly(spec).poly(Rational(0));
    if (spec.n % 2 == 1) value = -value;
    have_exact = true;
  } else if (method == "all") {
    const Rational elim = det_elimination(spec);
    Rational chi0 = charpoly(spec).poly(Rational(0));
    if (spec.n % 2 == 1) chi0 = -chi0;
    const bool agree = (closed.value == elim) && (closed.value == chi0);
    doc["agree"] = agree;
    if (!agree) throw std::runtime_error("determinant methods disagree");
    value = closed.value;
    have_exact = true;
  } else {
    throw UsageFailure("unknown --method: " + method);
  }

  if (have_exact) {
    doc["determinant"] = rational_string(value);
    doc["decimal"] = decimal_string(value, digits);
    doc["exact"] = true;
  } else {
    doc["decimal"] = decimal_string(closed.value_real, digits);
    doc["exact"] = false;
  }
  if (c.timing) doc["elapsed_ms"] = watch.ms();
  emit(c, doc);
}

void run_charpoly(const Common& c) {
  const MatrixSpec spec = make_spec(c);
  const Stopwatch watch;
  const int digits = effective_digits(c);
  const CharPoly chi = charpoly(spec);

  json doc;
  doc["n"] = spec.n;
  doc["kind"] = kind_name(spec.kind);
  doc["degree"] = spec.n;
  json coeffs = json::array(), decimals = json::array();
  for (const Rational& v : chi.coefficients_descending()) {
    coeffs.push_back(rational_string(v));
    decimals.push_back(decimal_string(v, digits));
  }
  doc["coefficients"] = coeffs;  // descending powers, monic first
  doc["decimals"] = decimals;
  if (c.timing) doc["elapsed_ms"] = watch.ms();
  emit(c, doc);
}

void run_eig(const Common& c) {
  const MatrixSpec spec = make_spec(c);
  const Stopwatch watch;
  const int digits = effective_digits(c);
  const auto eigs = eigenvalues(spec, c.tol);

  json arr = json::array();
  for (const auto& e : eigs) {
    json row;
    row["i"] = e.index;
    row["lambda"] = real_json(e.value, digits);
    if (e.is_complex) row["imag"] = real_json(e.value_imag, digits);
    row["certified"] = e.certified;
    if (e.certified) {
      row["bracket_lo"] = rational_string(e.bracket.lo);
      row["bracket_hi"] = rational_string(e.bracket.hi);
    }
    if (e.multiplicity != 1) row["multiplicity"] = e.multiplicity;
    if (!e.right.empty()) row["residual"] = real_json(e.residual, digits);
    arr.push_back(row);
  }
  json doc;
  doc["n"] = spec.n;
  doc["kind"] = kind_name(spec.kind);
  doc["eigenvalues"] = arr;
  if (c.timing) doc["elapsed_ms"] = watch.ms();
  emit(c, doc);
}

void run_qplot(const Common& c, const std::string& from, const std::string& to,
               std::uint32_t points) {
  const MatrixSpec spec = make_spec(c);
  if (points < 2) throw UsageFailure("qplot needs --points >= 2");
  Real lo, hi;
  try {
    lo = to_real(parse_rational(from));
    hi = to_real(parse_rational(to));
  } catch (const std::exception& e) {
    throw UsageFailure(e.what());
  }
  if (!(lo < hi)) throw UsageFailure("qplot needs --from < --to");

  const DivisorMatrix matrix = build(spec);
  const int digits = effective_digits(c);
  const Real step = (hi - lo) / points;
  const Real guard = step / 2;  // skip samples hugging a pole

  Sink sink(c.output);
  std::ostream& out = sink.stream();
  out << "z\tq\n";
  for (std::uint32_t i = 0; i <= points; ++i) {
    const Real z = lo + step * i;
    bool near_pole = false;
    for (std::uint32_t k = 2; k <= spec.n; ++k)
      if (abs(z - to_real(matrix.weight(k))) < guard) near_pole = true;
    if (near_pole) continue;
    const QSample s = q_eval(spec, z);
    out << decimal_string(z, digits) << "\t" << decimal_string(s.q, digits) << "\n";
  }
}

void run_mertens(const Common& c, std::uint32_t n) {
  if (n == 0 || n > 10'000'000) throw UsageFailure("mertens supports 1 <= n <= 10^7");
  const MobiusTable table = mobius_sieve(n);
  json doc;
  doc["n"] = n;
  doc["mertens"] = table.mertens_at(n);
  emit(c, doc);
}

void run_constants(const Common& c, const std::string& series, double p, std::uint64_t nmax) {
  if (series.empty()) {
    json arr = json::array();
    const int digits = effective_digits(c);
    for (const AsymptoticReport& rep :
         {constant_C(c.tol), constant_C_phi(c.tol), constant_C0(c.tol)}) {
      json row;
      row["name"] = rep.name;
      row["value"] = real_json(rep.value, digits);
      row["error_bound"] = real_json(rep.error_bound, 3);
      row["k0"] = rep.truncation;
      arr.push_back(row);
    }
    emit(c, arr);
    return;
  }

  std::vector<SeriesSample> samples;
  if (series == "inverse-zeta") {
    samples = zeta_inverse_partial_sums(p, nmax);
  } else if (series == "log-squared") {
    samples = example2_partial_sums(nmax);
  } else {
    throw UsageFailure("unknown --series: " + series + " (inverse-zeta | log-squared)");
  }
  Sink sink(c.output);
  std::ostream& out = sink.stream();
  out << "n\tpartial\treference\n";
  out.precision(15);
  for (const auto& s : samples) out << s.n << "\t" << s.partial << "\t" << s.reference << "\n";
}

void run_scan(const Common& c, std::uint32_t nmax) {
  const auto rows = conjecture_scan(nmax, c.tol);
  const int digits = effective_digits(c);
  Sink sink(c.output);
  for (const auto& row : rows) {
    json doc;
    doc["n"] = row.n;
    doc["lambda1"] = real_json(row.lambda1, digits);
    doc["lambda1_in_unit"] = row.lambda1_in_unit;
    doc["upper_shift_ok"] = row.upper_shift_ok;
    sink.stream() << doc.dump() << "\n";
  }
}

void run_sparsity(const Common& c, std::uint64_t n) {
  const SparsityInfo info = nnz_count(n);
  json doc;
  doc["n"] = info.n;
  doc["nnz"] = info.exact;
  doc["estimate"] = info.estimate;
  doc["ratio"] = info.ratio;
  emit(c, doc);
}

void run_examples(const Common& c) {
  const int digits = c.digits > 0 ? c.digits : 6;

  json doc;
  json examples = json::array();
  const std::vector<std::pair<std::string, std::vector<Rational>>> sequences{
      {"increasing-integers", {2, 3, 4, 5, 6, 7}},
      {"half-start", {Rational(1, 2), 1, 3, 4, 5, 6}},
  };
  for (const auto& [name, seq] : sequences) {
    MatrixSpec spec;
    spec.kind = MatrixKind::Generalized;
    spec.n = 6;
    spec.sequence.values = seq;
    json row;
    row["name"] = name;
    json terms = json::array();
    for (const Rational& v : seq) terms.push_back(rational_string(v));
    row["sequence"] = terms;
    row["determinant"] = rational_string(det_closed_form(spec).value);
    json vals = json::array();
    for (const auto& e : eigen_generalized(spec, c.tol)) vals.push_back(real_json(e.value, digits));
    row["eigenvalues"] = vals;
    examples.push_back(row);
  }
  doc["example_spectra"] = examples;

  json table = json::array();
  for (std::uint32_t n = 3; n <= 11; ++n) {
    MatrixSpec spec;
    spec.kind = MatrixKind::Fibonacci;
    spec.n = n;
    json row;
    row["n"] = n;
    json vals = json::array();
    for (const auto& e : eigenvalues(spec, c.tol)) vals.push_back(real_json(e.value, digits));
    row["eigenvalues"] = vals;
    table.push_back(row);
  }
  doc["eigenvalue_table"] = table;
  emit(c, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor-pattern matrix toolkit: exact determinants, certified spectra, "
               "and asymptotic constants"};
  app.require_subcommand(1);

  Common common;

  std::string build_format = "matrixmarket";
  bool build_exact = false;
  CLI::App* cmd_build = app.add_subcommand("build", "construct a matrix and export it");
  add_common(cmd_build, common);
  cmd_build->add_option("--format", build_format, "matrixmarket | csv");
  cmd_build->add_flag("--exact", build_exact, "Matrix Market with exact rational values");

  std::string det_method = "all";
  CLI::App* cmd_det = app.add_subcommand("det", "determinant (closed form, elimination, "
                                                "characteristic polynomial, or all)");
  add_common(cmd_det, common);
  cmd_det->add_option("--method", det_method, "closed | elimination | charpoly | all");

  CLI::App* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  add_common(cmd_charpoly, common);

  CLI::App* cmd_eig = app.add_subcommand("eig", "eigenvalues with certified brackets");
  add_common(cmd_eig, common);

  std::string q_from = "-1", q_to = "10";
  std::uint32_t q_points = 200;
  CLI::App* cmd_qplot = app.add_subcommand("qplot", "sample the secular function over a range");
  add_common(cmd_qplot, common);
  cmd_qplot->add_option("--from", q_from, "left end of the sample range");
  cmd_qplot->add_option("--to", q_to, "right end of the sample range");
  cmd_qplot->add_option("--points", q_points, "number of sample intervals");

  CLI::App* cmd_mertens = app.add_subcommand("mertens", "Moebius partial sum M(n)");
  add_common(cmd_mertens, common, false);

  std::string series;
  double series_p = 2.0;
  std::uint64_t series_nmax = 1000000;
  CLI::App* cmd_constants =
      app.add_subcommand("constants", "limit constants with certified error bounds");
  add_common(cmd_constants, common, false);
  cmd_constants->add_option("--series", series,
                            "emit TSV partial sums instead: inverse-zeta | log-squared");
  cmd_constants->add_option("--p", series_p, "exponent for the inverse-zeta series");
  cmd_constants->add_option("--nmax", series_nmax, "series cutoff");

  std::uint32_t scan_nmax = 20;
  CLI::App* cmd_scan = app.add_subcommand("scan", "per-size spectral observations (JSON lines)");
  add_common(cmd_scan, common, false);
  cmd_scan->add_option("--nmax", scan_nmax, "largest size to scan");

  CLI::App* cmd_sparsity = app.add_subcommand("sparsity", "nonzero count vs density estimate");
  add_common(cmd_sparsity, common, false);

  CLI::App* cmd_examples =
      app.add_subcommand("examples", "reference six-term spectra and the n=3..11 table");
  add_common(cmd_examples, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_build->parsed()) run_build(common, build_format, build_exact);
    else if (cmd_det->parsed()) run_det(common, det_method);
    else if (cmd_charpoly->parsed()) run_charpoly(common);
    else if (cmd_eig->parsed()) run_eig(common);
    else if (cmd_qplot->parsed()) run_qplot(common, q_from, q_to, q_points);
    else if (cmd_mertens->parsed()) run_mertens(common, common.n);
    else if (cmd_constants->parsed()) run_constants(common, series, series_p, series_nmax);
    else if (cmd_scan->parsed()) run_scan(common, scan_nmax);
    else if (cmd_sparsity->parsed()) run_sparsity(common, common.n);
    else if (cmd_examples->parsed()) run_examples(common);
    return 0;
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
