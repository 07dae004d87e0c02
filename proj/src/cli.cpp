#include "tfreud/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/operators.hpp"
#include "tfreud/recurrence.hpp"
#include "tfreud/zeros.hpp"

namespace tfreud {

const char* const kTableSmallest[14] = {"0.4889", "0.2363", "0.1372", "0.0901", "0.0640", "0.0480", "0.0375",
                                        "0.0302", "0.0249", "0.0209", "0.0178", "0.0154", "0.0135", "0.0115"};
const char* const kTableLargest[14] = {"0.4889", "0.8808", "1.1103", "1.2740", "1.4024", "1.5088", "1.6002",
                                       "1.6804", "1.7522", "1.8174", "1.8771", "1.9323", "1.9843", "2.0393"};

namespace {

constexpr int kMaxDegree = 4096;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cell keeps its text; the kind decides how JSON renders it.
struct Cell {
  enum Kind { integer, number, boolean, null, text } kind;
  std::string s;
};

Cell cell(long v) { return {Cell::integer, std::to_string(v)}; }
Cell cell(bool v) { return {Cell::boolean, v ? "true" : "false"}; }
Cell cell_text(std::string v) { return {Cell::text, std::move(v)}; }
Cell cell_null() { return {Cell::null, ""}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json extra_meta = nlohmann::ordered_json::object();
};

class Writer {
 public:
  explicit Writer(const RunConfig& cfg) : cfg_(cfg) {}

  Cell num(const Real& v) const { return {Cell::number, cfg_.round ? v.to_fixed(*cfg_.round) : v.to_string()}; }

  void write(const Table& tab, std::ostream& os) const {
    if (cfg_.format == OutputFormat::csv) {
      write_csv(tab, os);
    } else {
      write_json(tab, os);
    }
  }

  void write_to(const Table& tab, const std::string& path, std::ostream& fallback) const {
    if (path.empty()) {
      write(tab, fallback);
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write(tab, f);
    if (!f) throw IoError("write to '" + path + "' failed");
  }

 private:
  static void write_csv(const Table& tab, std::ostream& os) {
    for (size_t i = 0; i < tab.columns.size(); ++i) os << (i ? "," : "") << tab.columns[i];
    os << '\n';
    for (const auto& row : tab.rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].s;
      os << '\n';
    }
  }

  void write_json(const Table& tab, std::ostream& os) const {
    nlohmann::ordered_json doc;
    doc["meta"] = {{"command", cfg_.command},
                   {"z", cfg_.z},
                   {"n_max", cfg_.n_max},
                   {"bits", cfg_.effective_bits()},
                   {"version", kVersion}};
    for (const auto& [k, v] : tab.extra_meta.items()) doc["meta"][k] = v;
    doc["data"] = nlohmann::ordered_json::array();
    for (const auto& row : tab.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (size_t i = 0; i < row.size(); ++i) {
        const Cell& c = row[i];
        switch (c.kind) {
          case Cell::integer: obj[tab.columns[i]] = std::stol(c.s); break;
          case Cell::boolean: obj[tab.columns[i]] = c.s == "true"; break;
          case Cell::null: obj[tab.columns[i]] = nullptr; break;
          // Decimal strings keep every digit.
          case Cell::number:
          case Cell::text: obj[tab.columns[i]] = c.s; break;
        }
      }
      doc["data"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
  }

  const RunConfig& cfg_;
};

RecurrenceTable coefficient_table(const RunConfig& cfg, int n_max) {
  const PrecisionContext ctx(cfg.effective_bits());
  auto scope = ctx.scope();
  return chebyshev_coeffs(Real(cfg.z), n_max, ctx, cfg.guard_bits);
}

int cmd_moments(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  PrecisionScope scope(cfg.effective_bits());
  const MomentSequence mseq(Real(cfg.z), 2 * cfg.n_max + 1);
  Table tab{{"n", "mu_n"}, {}};
  for (int n = 0; n <= mseq.max_index(); ++n) tab.rows.push_back({cell(static_cast<long>(n)), w.num(mseq[n])});
  w.write_to(tab, cfg.out, out);
  return 0;
}

int cmd_coeffs(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  const RecurrenceTable tbl = coefficient_table(cfg, cfg.n_max);
  PrecisionScope scope(cfg.effective_bits());
  Table tab{{"n", "a_n", "b_n", "h_n", "a_n_ratio", "b_n_ratio"}, {}};
  for (int n = 0; n <= cfg.n_max; ++n) {
    std::vector<Cell> row{cell(static_cast<long>(n)), w.num(tbl.a(n)), w.num(tbl.b(n)), w.num(tbl.h(n))};
    if (n == 0) {
      row.push_back(cell_null());
      row.push_back(cell_null());
    } else {
      const auto [ra, rb] = asymptotic_ratio(tbl, n);
      row.push_back(w.num(ra));
      row.push_back(w.num(rb));
    }
    tab.rows.push_back(std::move(row));
  }
  w.write_to(tab, cfg.out, out);
  return 0;
}

int cmd_zeros(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  if (cfg.table_check) {
    const auto rows = table_check(cfg.n_max, cfg.effective_bits());
    Table tab{{"n", "smallest", "table_smallest", "smallest_ok", "largest", "table_largest", "largest_ok"}, {}};
    bool all = true;
    for (const auto& r : rows) {
      const auto i = static_cast<size_t>(r.n - 1);
      tab.rows.push_back({cell(static_cast<long>(r.n)), cell_text(r.smallest), cell_text(kTableSmallest[i]),
                          cell(r.smallest_ok), cell_text(r.largest), cell_text(kTableLargest[i]), cell(r.largest_ok)});
      all = all && r.smallest_ok && r.largest_ok;
    }
    w.write_to(tab, cfg.out, out);
    return all ? 0 : static_cast<int>(ExitCode::verification_failed);
  }
  const RecurrenceTable tbl = coefficient_table(cfg, cfg.n_max);
  PrecisionScope scope(cfg.effective_bits());
  Table tab;
  if (cfg.all_zeros) {
    tab.columns = {"n", "k", "x_nk"};
  } else {
    tab.columns = {"n", "smallest", "largest"};
  }
  for (int n = 1; n <= cfg.n_max; ++n) {
    const ZeroSet zs = zeros(tbl, n);
    if (cfg.all_zeros) {
      for (int k = 0; k < n; ++k) {
        tab.rows.push_back({cell(static_cast<long>(n)), cell(static_cast<long>(k + 1)), w.num(zs.x[static_cast<size_t>(k)])});
      }
    } else {
      tab.rows.push_back({cell(static_cast<long>(n)), w.num(zs.smallest()), w.num(zs.largest())});
    }
  }
  w.write_to(tab, cfg.out, out);
  return 0;
}

Table density_table(const Writer& w, const Real& t, int points, bool with_t) {
  const DensityModel m(t);
  const Real norm = m.normalization();
  Table tab;
  if (with_t) tab.columns.push_back("t");
  for (const char* c : {"x", "w", "omega", "normalization", "support_end"}) tab.columns.push_back(c);
  for (int i = 1; i <= points; ++i) {
    const Real x = m.beta_t * Real(i) / (points + 1);
    std::vector<Cell> row;
    if (with_t) row.push_back(w.num(t));
    for (const Real& v : {x, m.w(x), m(x), norm, m.beta_t}) row.push_back(w.num(v));
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

int cmd_density(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  PrecisionScope scope(128);
  Table tab = density_table(w, Real(cfg.t), cfg.points, false);
  tab.extra_meta["t"] = cfg.t;
  w.write_to(tab, cfg.out, out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  SuiteConfig sc;
  sc.z_values = {cfg.z};
  sc.n_max = cfg.n_max;
  sc.bits = cfg.bits;
  sc.guard_bits = cfg.guard_bits;
  sc.epsilon = cfg.epsilon;
  sc.t = cfg.t;
  sc.fault = cfg.fault;
  const VerificationReport rep = run_verification(sc);
  Table tab{{"name", "n_lo", "n_hi", "z_values", "max_residual", "tolerance", "pass"}, {}};
  for (const auto& r : rep.records) {
    std::string zs;
    for (double z : r.z_values) {
      std::ostringstream s;
      s << z;
      zs += (zs.empty() ? "" : ";") + s.str();
    }
    tab.rows.push_back({cell_text(r.name), cell(static_cast<long>(r.n_lo)), cell(static_cast<long>(r.n_hi)),
                        cell_text(zs), cell_text(r.max_residual.to_string(6)), cell_text(r.tolerance.to_string(6)),
                        cell(r.pass)});
  }
  tab.extra_meta["pass"] = rep.pass();
  w.write_to(tab, cfg.out, out);
  return rep.pass() ? 0 : static_cast<int>(ExitCode::verification_failed);
}

int cmd_figures(const RunConfig& cfg, const Writer& w, std::ostream& out) {
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path("figures") : std::filesystem::path(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
  const std::string ext = cfg.format == OutputFormat::csv ? ".csv" : ".json";
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const Table& tab) {
    const std::string path = (dir / (name + ext)).string();
    w.write_to(tab, path, out);
    written.push_back(path);
  };

  {
    PrecisionScope scope(128);
    Table all;
    for (double t : {0.5, 1.0, 2.0}) {
      Table part = density_table(w, Real(t), cfg.points, true);
      all.columns = part.columns;
      for (auto& r : part.rows) all.rows.push_back(std::move(r));
    }
    emit("fig1_density", all);
  }

  const RecurrenceTable tbl = coefficient_table(cfg, cfg.n_max);
  PrecisionScope scope(cfg.effective_bits());
  Table extremes{{"n", "x_n1", "x_nn"}, {}};
  Table transforms{{"n", "x_n1_pow_m1_2", "x_n1_pow_m2", "n2_x_n1", "x_nn_cubed", "x_nn_over_n_third"}, {}};
  Table ptilde{{"n", "x_nn", "ptilde_nn", "ratio"}, {}};
  Table cheb{{"n", "y_n1", "w_n", "y_n1_over_w_n", "y_nn", "eigen_max_diff"}, {}};
  for (int n = 1; n <= cfg.n_max; ++n) {
    const ZeroSet zs = zeros(tbl, n);
    const Real& x1 = zs.smallest();
    const Real& xn = zs.largest();
    const Real rn(n);
    extremes.rows.push_back({cell(static_cast<long>(n)), w.num(x1), w.num(xn)});
    transforms.rows.push_back({cell(static_cast<long>(n)), w.num(1 / sqrt(x1)), w.num(1 / (x1 * x1)),
                               w.num(rn * rn * x1), w.num(xn * xn * xn), w.num(xn / root(rn, 3))});
    const ChebyshevComparison cc = chebyshev_comparison(n);
    cheb.rows.push_back({cell(static_cast<long>(n)), w.num(cc.closed_form.front()), w.num(cc.w), w.num(cc.y1_over_w),
                         w.num(cc.closed_form.back()), w.num(cc.max_diff)});
    const Real pt = ptilde_zeros(n).back();
    ptilde.rows.push_back({cell(static_cast<long>(n)), w.num(xn), w.num(pt), w.num(xn / pt)});
  }
  emit("fig2_extreme_zeros", extremes);
  emit("fig3_transformed_zeros", transforms);
  emit("fig4_chebyshev_comparison", cheb);
  emit("fig5_ptilde_comparison", ptilde);
  for (const auto& p : written) out << p << '\n';
  return 0;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

int fail(std::ostream& err, ExitCode code, const std::string& kind, const std::string& msg) {
  err << "tfreud: error: " << kind << ": " << one_line(msg) << '\n';
  return static_cast<int>(code);
}

}  // namespace

void RunConfig::validate() const {
  if (!std::isfinite(z) || !(z > 0)) throw DomainError("--z must be a positive finite number");
  if (n_max < 1 || n_max > kMaxDegree) throw DomainError("--n-max must lie in 1.." + std::to_string(kMaxDegree));
  if (bits != 0 && (bits < PrecisionContext::kMinBits || bits > (1 << 20))) {
    throw DomainError("--bits must lie in " + std::to_string(PrecisionContext::kMinBits) + "..1048576");
  }
  if (!std::isfinite(epsilon) || !(epsilon > 0)) throw DomainError("--epsilon must be positive");
  if (!std::isfinite(t) || !(t > 0)) throw DomainError("--t must be positive");
  if (points < 1 || points > 100000) throw DomainError("--points must lie in 1..100000");
  if (round && (*round < 0 || *round > 1000)) throw DomainError("--round must lie in 0..1000");
  if (guard_bits && *guard_bits < 0) throw DomainError("--guard-bits must be non-negative");
  if (table_check && command != "zeros") throw DomainError("--table-check applies to the zeros command");
  if (table_check && z != 1.0) throw DomainError("--table-check compares values at z = 1");
  if (all_zeros && command != "zeros") throw DomainError("--all-zeros applies to the zeros command");
  if (fault && command != "verify") throw DomainError("--fault-inject applies to the verify command");
}

int RunConfig::effective_bits() const { return bits > 0 ? bits : PrecisionContext::policy_bits(n_max); }

std::vector<TableCheckRow> table_check(int n_max, int bits) {
  const int top = std::min(n_max, 14);
  const PrecisionContext ctx(bits);
  auto scope = ctx.scope();
  const RecurrenceTable tbl = chebyshev_coeffs(Real(1), top, ctx);
  std::vector<TableCheckRow> rows;
  for (int n = 1; n <= top; ++n) {
    const ZeroSet zs = zeros(tbl, n);
    const auto i = static_cast<size_t>(n - 1);
    TableCheckRow r{n, zs.smallest().to_fixed(4), zs.largest().to_fixed(4), false, false};
    r.smallest_ok = r.smallest == kTableSmallest[i];
    r.largest_ok = r.largest == kTableLargest[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Truncated Freud orthogonal polynomials: moments, recurrences, zeros and checks", "tfreud"};
  std::string format = "csv";
  std::string fault;
  app.add_option("command", cfg.command, "moments | coeffs | zeros | density | verify | figures")
      ->required()
      ->check(CLI::IsMember({"moments", "coeffs", "zeros", "density", "verify", "figures"}));
  app.add_option("--z", cfg.z, "weight parameter z > 0");
  app.add_option("--n-max", cfg.n_max, "largest degree");
  app.add_option("--bits", cfg.bits, "working precision in bits (default: 128 + 16 n_max)");
  app.add_option("--epsilon", cfg.epsilon, "slack in the largest-zero bound");
  app.add_option("--t", cfg.t, "density parameter t > 0");
  app.add_option("--points", cfg.points, "density grid size");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "output file (figures: directory)");
  app.add_flag("--table-check", cfg.table_check, "compare zeros with the reference tables");
  app.add_flag("--all-zeros", cfg.all_zeros, "emit every zero, not only the extremes");
  app.add_option("--round", cfg.round, "fixed decimals instead of full precision");
  app.add_option("--fault-inject", fault, "perturb a coefficient, e.g. a:3:1e-6");
  app.add_option("--guard-bits", cfg.guard_bits, "extra bits for the moment-to-coefficient stage");
  app.set_version_flag("--version", kVersion);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(err, ExitCode::usage, "usage", e.what());
  }

  try {
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!fault.empty()) cfg.fault = FaultSpec::parse(fault);
    cfg.validate();
  } catch (const DomainError& e) {
    return fail(err, ExitCode::usage, "config", e.what());
  }

  const Writer w(cfg);
  try {
    if (cfg.command == "moments") return cmd_moments(cfg, w, out);
    if (cfg.command == "coeffs") return cmd_coeffs(cfg, w, out);
    if (cfg.command == "zeros") return cmd_zeros(cfg, w, out);
    if (cfg.command == "density") return cmd_density(cfg, w, out);
    if (cfg.command == "verify") return cmd_verify(cfg, w, out);
    return cmd_figures(cfg, w, out);
  } catch (const PrecisionExhausted& e) {
    return fail(err, ExitCode::numerical, "precision", e.what());
  } catch (const InstabilityError& e) {
    return fail(err, ExitCode::numerical, "instability", e.what());
  } catch (const ConvergenceError& e) {
    return fail(err, ExitCode::numerical, "convergence", e.what());
  } catch (const IoError& e) {
    return fail(err, ExitCode::usage, "io", e.what());
  } catch (const DomainError& e) {
    return fail(err, ExitCode::usage, "config", e.what());
  } catch (const std::exception& e) {
    return fail(err, ExitCode::numerical, "internal", e.what());
  }
}

}  // namespace tfreud
