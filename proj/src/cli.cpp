#include "psibound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "psibound/bounds.hpp"
#include "psibound/certify.hpp"
#include "psibound/gammaseq.hpp"
#include "psibound/oracle.hpp"

namespace psibound::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct Options {
  int prec = 0;  // 0: environment or default
  std::string format = "text";
  int sig_digits = 5;
};

/// Output rows. Every row has the same keys in the same order; `text_columns`
/// picks what the human table shows.
struct Table {
  std::vector<std::string> text_columns;
  std::vector<Json> rows;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw DomainError("unknown format '" + s + "' (text, csv or json)");
}

PrecisionContext make_context(const Options& o) {
  int digits = PrecisionContext::kDefaultDigits;
  if (const char* env = std::getenv(kPrecisionEnv); env && *env) {
    try {
      digits = std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError(std::string(kPrecisionEnv) + " is not an integer: '" + env + "'");
    }
  }
  if (o.prec != 0) digits = o.prec;
  return PrecisionContext(digits);
}

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Table& t, Format f, std::ostream& out) {
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : t.rows) arr.push_back(r);
    out << arr.dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    if (t.rows.empty()) return;
    bool first = true;
    for (const auto& [k, v] : t.rows.front().items()) {
      out << (first ? "" : ",") << csv_escape(k);
      first = false;
    }
    out << "\n";
    for (const auto& r : t.rows) {
      first = true;
      for (const auto& [k, v] : r.items()) {
        out << (first ? "" : ",") << csv_escape(cell_text(v));
        first = false;
      }
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.text_columns.size());
  for (std::size_t i = 0; i < t.text_columns.size(); ++i) {
    width[i] = t.text_columns[i].size();
    for (const auto& r : t.rows) width[i] = std::max(width[i], cell_text(r.value(t.text_columns[i], Json())).size());
  }
  auto line = [&](auto&& cell) {
    for (std::size_t i = 0; i < t.text_columns.size(); ++i) {
      const std::string s = cell(i);
      out << s;
      if (i + 1 < t.text_columns.size()) out << std::string(width[i] - s.size() + 2, ' ');
    }
    out << "\n";
  };
  line([&](std::size_t i) { return t.text_columns[i]; });
  for (const auto& r : t.rows) line([&](std::size_t i) { return cell_text(r.value(t.text_columns[i], Json())); });
}

Real parse_point(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_real(parse_rational(text));
  return parse_real(text);
}

// --- constants -------------------------------------------------------------

Table cmd_constants(const PrecisionContext& ctx, int sig) {
  const ThresholdSet& t = thresholds(ctx);
  const X0Solution& x0 = solve_x0(ctx);
  Table table{{"name", "value", "definition", "tolerance"}, {}};
  auto add = [&](const std::string& name, const Real& v, const std::string& def, const std::string& tol) {
    Json r;
    r["name"] = name;
    r["value"] = format_full(v, ctx);
    r["display"] = format_sig(v, sig);
    r["definition"] = def;
    r["tolerance"] = tol;
    table.rows.push_back(std::move(r));
  };
  const std::string closed = "closed form, " + format_sig(ctx.epsilon(), 1);
  const std::string evaluated = "evaluated, " + format_sig(ctx.epsilon(), 1);
  auto root_tol = [&](const RootInfo& info) {
    return "bracket (" + to_string(info.bracket_lo) + ", " + to_string(info.bracket_hi) + "), width " +
           format_sig(info.tolerance, 2);
  };
  ScopedPrecision guard(ctx);
  add("a1", t.a1, "(40+3*sqrt(205))/105", closed);
  add("a2", t.a2, "(40-3*sqrt(205))/105", closed);
  add("a0", t.a0.value, "root of psi(1) = L(0,a)", root_tol(t.a0));
  add("a0p", t.a0_prime, "(45-4pi^2+3sqrt(4pi^4-80pi^2+405))/(30(pi^2-9))", closed);
  add("a0pp", t.a0_double_prime.value, "root of psi''(1) = L_xx(0,a)", root_tol(t.a0_double_prime));
  add("x0", x0.x0.value, "root of psi'(x+1) = L_x(x,a0)", root_tol(x0.x0));
  add("F_a0(x0)", x0.F_at_x0, "psi(x0+1) - L(x0,a0)", evaluated);
  add("gamma", euler_gamma(ctx), "H_N - psi_asymptotic(N+1)", evaluated);
  add("zeta3", zeta3(ctx), "-psi''(1)/2", evaluated);
  for (const char* a : {"a1", "4/5", "1/2", "1/3", "4/15", "inf"}) {
    add(std::string("c0(") + a + ")", c0(ParamA::parse(a), ctx), "L(0,a) + gamma", evaluated);
  }
  for (const char* a : {"a1", "1/2", "inf"}) {
    add(std::string("c1(") + a + ")", c1(ParamA::parse(a), ctx), "1 - L(1,a)", evaluated);
  }
  return table;
}

// --- eval ------------------------------------------------------------------

Table cmd_eval(const std::string& x_text, const std::string& a_text, int order, const PrecisionContext& ctx,
               int sig) {
  if (order < 0 || order > 3) throw DomainError("--order must be 0, 1, 2 or 3");
  const ParamA a = ParamA::parse(a_text);
  ScopedPrecision guard(ctx);
  const Real x = parse_point(x_text);
  Table table{{"name", "value"}, {}};
  auto add = [&](const std::string& name, const Real& v) {
    Json r;
    r["name"] = name;
    r["value"] = format_full(v, ctx);
    r["display"] = format_sig(v, sig);
    table.rows.push_back(std::move(r));
  };
  add("L(x,a)", approximant(x, a, ctx));
  static const char* names[] = {"L", "L_x", "L_xx", "L_xxx"};
  for (int k = 1; k <= order; ++k) add(std::string(names[k]) + "(x,a)", approximant_partial_x(k, x, a, ctx));
  static const char* psi_names[] = {"psi(x+1)", "psi'(x+1)", "psi''(x+1)", "psi'''(x+1)"};
  add(psi_names[order], polygamma(order, x + 1, ctx));
  add("residual", residual(order, x, a, ctx));
  return table;
}

// --- bounds ----------------------------------------------------------------

struct BoundsResult {
  Table table;
  bool failed = false;
};

BoundsResult cmd_bounds(const std::string& target, const std::string& x_text, long n, const std::string& a_text,
                        const PrecisionContext& ctx, int sig) {
  Enclosure e;
  Real oracle;
  Json where;
  {
    ScopedPrecision guard(ctx);
    if (target == "harmonic") {
      if (n < 1) throw DomainError("harmonic bounds need --n >= 1");
      const ParamA a = ParamA::parse(a_text.empty() ? "a1" : a_text);
      e = harmonic_enclosure(n, a, ctx);
      oracle = harmonic_real(n, ctx);
      where["n"] = n;
      where["a"] = a.label();
    } else {
      if (x_text.empty()) throw DomainError(target + " bounds need --x");
      const Real x = parse_point(x_text);
      where["x"] = x_text;
      if (target == "psi") {
        if (a_text.empty()) {
          e = psi_enclosure(x, ctx);
        } else {
          const ParamA a = ParamA::parse(a_text);
          e = psi_enclosure_offset(x, a, ctx);
          where["a"] = a.label();
        }
        oracle = polygamma(0, x + 1, ctx);
      } else if (target == "psi1" || target == "psi2") {
        const int k = target == "psi1" ? 1 : 2;
        e = polygamma_bounds(k, x, ctx);
        oracle = polygamma(k, x + 1, ctx);
      } else {
        throw DomainError("unknown bounds target '" + target + "' (psi, psi1, psi2, harmonic)");
      }
    }
  }
  ScopedPrecision guard(ctx);
  const Verdict v = containment(e, oracle, oracle_epsilon(ctx));
  BoundsResult result;
  result.failed = v == Verdict::Fail;
  result.table.text_columns = {"name", "value", "display", "verdict"};
  auto add = [&](const std::string& name, const Real& value, const std::string& verdict) {
    Json r;
    r["name"] = name;
    r["value"] = format_full(value, ctx);
    r["display"] = format_sig(value, sig);
    r["verdict"] = verdict;
    r["justification"] = std::string(to_string(e.justification));
    r["target"] = std::string(to_string(e.target));
    for (const auto& [k, w] : where.items()) r[k] = cell_text(w);
    result.table.rows.push_back(std::move(r));
  };
  add("lo", e.lo, "");
  add("hi", e.hi, "");
  add("width", e.width(), "");
  add("oracle", oracle, std::string(to_string(v)));
  return result;
}

// --- gamma-table -------------------------------------------------------------

Table cmd_gamma_table(const std::vector<std::string>& seqs, const std::vector<long>& ns, const PrecisionContext& ctx,
                      int sig, Format f) {
  std::vector<SequenceId> ids;
  for (const auto& s : seqs) ids.push_back(SequenceId::parse(s));
  for (long n : ns) {
    for (const auto& id : ids) {
      if (n < id.min_n()) throw DomainError("sequence " + id.name() + " needs n >= " + std::to_string(id.min_n()));
    }
  }
  const ErrorTable t = error_table(ids, ns, ctx);
  ScopedPrecision guard(t.ctx);
  Table table;
  if (f == Format::Text) {
    // One row per n, one column per sequence.
    table.text_columns.push_back("n");
    for (const auto& id : ids) table.text_columns.push_back("|" + id.name() + " - gamma|");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      Json r;
      r["n"] = std::to_string(ns[i]);
      for (std::size_t j = 0; j < ids.size(); ++j) r[table.text_columns[j + 1]] = format_sig(t.cells[i][j].abs_error, sig);
      table.rows.push_back(std::move(r));
    }
    return table;
  }
  for (std::size_t j = 0; j < ids.size(); ++j) {
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const SequenceSample& s = t.cells[i][j];
      Json r;
      r["id"] = ids[j].name();
      r["n"] = s.n;
      r["value"] = format_full(s.value, ctx);
      r["error"] = format_full(s.error, ctx);
      r["abs_error"] = format_full(s.abs_error, ctx);
      r["display"] = format_sig(s.abs_error, sig);
      table.rows.push_back(std::move(r));
    }
  }
  return table;
}

// --- order -------------------------------------------------------------------

Table cmd_order(const std::string& seq, long n, const PrecisionContext& ctx, int sig) {
  const SequenceId id = SequenceId::parse(seq);
  if (n < id.min_n()) throw DomainError("sequence " + id.name() + " needs n >= " + std::to_string(id.min_n()));
  const OrderEstimate est = order_estimate(id, n, ctx);
  ScopedPrecision guard(ctx);
  Table table{{"id", "n", "display", "theoretical"}, {}};
  Json r;
  r["id"] = id.name();
  r["n"] = n;
  r["value"] = format_full(est.p_hat, ctx);
  r["display"] = format_sig(est.p_hat, sig);
  r["theoretical"] = id.theoretical_order();
  table.rows.push_back(std::move(r));
  return table;
}

// --- certify -----------------------------------------------------------------

int cmd_certify(const std::string& filter, const std::string& source, const std::string& constants_path, Format f,
                std::ostream& out) {
  const ProofConstants constants =
      constants_path.empty() ? ProofConstants::builtin() : ProofConstants::load(constants_path);
  const CertifyReport report = verify_all({filter, source}, constants);
  if (f == Format::Text) {
    double total = 0;
    for (const auto& c : report.claims) {
      total += c.seconds;
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.source << "] " << to_string(c.assertion) << ": "
          << c.detail << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
      out.unsetf(std::ios_base::floatfield);
    }
    std::size_t passed = 0;
    for (const auto& c : report.claims) passed += c.pass ? 1 : 0;
    out << passed << "/" << report.claims.size() << " claims passed (" << std::fixed << std::setprecision(3) << total
        << " s)\n";
    out.unsetf(std::ios_base::floatfield);
  } else {
    Table table;
    for (const auto& c : report.claims) {
      Json r;
      r["name"] = c.name;
      r["source"] = c.source;
      r["assertion"] = std::string(to_string(c.assertion));
      r["verdict"] = c.pass ? "PASS" : "FAIL";
      r["detail"] = c.detail;
      r["witness"] = c.witness ? to_string(*c.witness) : "";
      table.rows.push_back(std::move(r));
    }
    emit(table, f, out);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds for psi and harmonic numbers from a parametric logarithmic approximant"};
  app.name("psibound");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--prec", opt.prec, "significant decimal digits (default 50, or $PSIBOUND_PREC)");
  app.add_option("--format", opt.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--sig-digits", opt.sig_digits, "display rounding")->check(CLI::PositiveNumber);

  auto* constants = app.add_subcommand("constants", "thresholds a1, a2, a0, a0', a0'', x0, gamma, zeta(3), c0, c1");

  auto* eval = app.add_subcommand("eval", "L(x,a), its x-partials, psi^(k)(x+1) and the residual");
  std::string x_text, a_text = "a1";
  int order = 0;
  eval->add_option("--x", x_text, "point x > -1")->required();
  eval->add_option("--a", a_text, "parameter: decimal, p/q, a1, a0, a0p, a0pp or inf");
  eval->add_option("--order", order, "derivative order 0..3");

  auto* bounds = app.add_subcommand("bounds", "certified enclosure and oracle containment");
  std::string target, bx, ba;
  long bn = 0;
  bounds->add_option("target", target, "psi, psi1, psi2 or harmonic")->required();
  bounds->add_option("--x", bx, "point x");
  bounds->add_option("--n", bn, "harmonic index n");
  bounds->add_option("--a", ba, "parameter (psi offset form, harmonic)");

  auto* table = app.add_subcommand("gamma-table", "|sequence - gamma| table");
  std::vector<std::string> seqs{"delta", "tau", "l:a1", "l:1/2"};
  std::vector<long> ns{1, 2, 5, 10, 50, 100, 200, 500};
  table->add_option("--seq", seqs, "sequence ids: sigma, theta, tau, delta, u, v, alpha, detemple, toth, mu, "
                                   "classical, l:<a>")
      ->delimiter(',');
  table->add_option("--n", ns, "row indices")->delimiter(',');

  auto* order_cmd = app.add_subcommand("order", "empirical convergence order log2(|e_n|/|e_2n|)");
  std::string oseq;
  long on = 0;
  order_cmd->add_option("--seq", oseq, "sequence id")->required();
  order_cmd->add_option("--n", on, "n")->required();

  auto* certify = app.add_subcommand("certify", "exact certification of the proof polynomial claims");
  std::string filter, source, constants_path;
  certify->add_option("--filter", filter, "keep claims whose name contains this");
  certify->add_option("--source", source, "keep claims with this source tag");
  certify->add_option("--constants", constants_path, "alternative constants file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format f = parse_format(opt.format);
    if (certify->parsed()) return cmd_certify(filter, source, constants_path, f, out);
    const PrecisionContext ctx = make_context(opt);
    if (constants->parsed()) {
      emit(cmd_constants(ctx, opt.sig_digits), f, out);
    } else if (eval->parsed()) {
      emit(cmd_eval(x_text, a_text, order, ctx, opt.sig_digits), f, out);
    } else if (bounds->parsed()) {
      const BoundsResult r = cmd_bounds(target, bx, bn, ba, ctx, opt.sig_digits);
      emit(r.table, f, out);
      if (r.failed) return 1;
    } else if (table->parsed()) {
      emit(cmd_gamma_table(seqs, ns, ctx, opt.sig_digits, f), f, out);
    } else if (order_cmd->parsed()) {
      emit(cmd_order(oseq, on, ctx, opt.sig_digits), f, out);
    }
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace psibound::cli
