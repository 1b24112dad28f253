// Command-line front-end.  Parses sequence specs, dispatches to the
// library, and emits deterministic CSV/JSON: floats go through the
// 17-significant-digit formatter, key order is fixed, and no timestamps
// ever reach an output stream.  Every value of a table is computed before
// the first byte is printed, so a DomainExceeded mid-grid aborts the whole
// emission instead of leaving a silently truncated file.
//
// Exit codes: 0 success, 2 input/usage error, 3 range error (a query left
// the region the materialized data determines).

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orlicz/associated.hpp"
#include "orlicz/conjugation.hpp"
#include "orlicz/dual_sequence.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/growth.hpp"
#include "orlicz/n_function.hpp"
#include "orlicz/n_to_sequence.hpp"
#include "orlicz/piecewise_convex.hpp"
#include "orlicz/relations.hpp"
#include "orlicz/report.hpp"
#include "orlicz/seq_spec.hpp"
#include "orlicz/weight_sequence.hpp"

namespace {

using namespace orlicz;
using ojson = nlohmann::ordered_json;

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "inconclusive";
  }
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

double parse_num(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v))
    throw InvalidParameter(what + ": '" + text + "' is not a finite number");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, at - start));
    start = at + 1;
  }
}

// "a:b:step", both ends included (the right end with a step*1e-9 slack so
// e.g. 1:3:0.5 lands exactly on 3).
std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3)
    throw InvalidParameter("grid must be a:b:step, got '" + text + "'");
  const double a = parse_num(parts[0], "grid start");
  const double b = parse_num(parts[1], "grid end");
  const double step = parse_num(parts[2], "grid step");
  if (!(step > 0.0)) throw InvalidParameter("grid step must be positive");
  if (!(a <= b)) throw InvalidParameter("grid start exceeds grid end");
  if ((b - a) / step > 1e6) throw InvalidParameter("grid has over 1e6 points");
  std::vector<double> pts;
  for (std::size_t i = 0;; ++i) {
    const double t = a + static_cast<double>(i) * step;
    if (t > b + step * 1e-9) break;
    pts.push_back(std::min(t, b));
  }
  return pts;
}

WeightSequence load_sequence(const std::string& spec_text) {
  return make_sequence(parse_spec_string(spec_text));
}

NFunction completed(const WeightSequence& m) {
  return principalize(phi_structure(m), m.label()).F;
}

void print_csv(const std::string& header, const std::vector<std::string>& rows) {
  std::string buf = header;
  buf += '\n';
  for (const auto& r : rows) {
    buf += r;
    buf += '\n';
  }
  std::cout << buf;
}

ojson witnesses_json(const std::map<std::string, double>& w) {
  ojson out = ojson::object();
  for (const auto& [k, v] : w) out[k] = v;
  return out;
}

ojson report_json(const ConditionReport& r) {
  ojson out;
  out["condition"] = r.condition;
  out["verdict"] = verdict_str(r.verdict);
  out["witnesses"] = witnesses_json(r.witnesses);
  out["counterexample"] = r.counterexample ? ojson(*r.counterexample) : ojson(nullptr);
  out["route"] = r.route;
  out["note"] = r.note;
  return out;
}

std::string report_details(const ConditionReport& r) {
  std::string parts;
  if (r.counterexample) parts += "cex=" + fmt_double(*r.counterexample);
  for (const auto& [k, v] : r.witnesses) {
    if (!parts.empty()) parts += ", ";
    parts += k + "=" + fmt_double(v);
  }
  if (!r.note.empty()) {
    if (!parts.empty()) parts += " | ";
    parts += r.note;
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Expression mini-language for from-nfunction.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' number]            exponent is a numeric literal
//   base   := number | 't' | '(' expr ')' | 'exp' '(' expr ')' | 'log' '(' expr ')'
//
// Evaluation runs on dual numbers, so every expression carries its exact
// derivative and the extraction can take the bisection route.

struct DualNum {
  double v = 0.0;
  double d = 0.0;
};

class Expr {
 public:
  virtual ~Expr() = default;
  virtual DualNum eval(DualNum t) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

class NumExpr : public Expr {
 public:
  explicit NumExpr(double c) : c_(c) {}
  DualNum eval(DualNum) const override { return {c_, 0.0}; }

 private:
  double c_;
};

class VarExpr : public Expr {
 public:
  DualNum eval(DualNum t) const override { return t; }
};

class BinExpr : public Expr {
 public:
  BinExpr(char op, ExprPtr a, ExprPtr b) : op_(op), a_(std::move(a)), b_(std::move(b)) {}
  DualNum eval(DualNum t) const override {
    const DualNum x = a_->eval(t);
    const DualNum y = b_->eval(t);
    switch (op_) {
      case '+': return {x.v + y.v, x.d + y.d};
      case '-': return {x.v - y.v, x.d - y.d};
      case '*': return {x.v * y.v, x.d * y.v + x.v * y.d};
      default:  return {x.v / y.v, (x.d * y.v - x.v * y.d) / (y.v * y.v)};
    }
  }

 private:
  char op_;
  ExprPtr a_, b_;
};

class PowExpr : public Expr {
 public:
  PowExpr(ExprPtr a, double p) : a_(std::move(a)), p_(p) {}
  DualNum eval(DualNum t) const override {
    const DualNum x = a_->eval(t);
    return {std::pow(x.v, p_), p_ * std::pow(x.v, p_ - 1.0) * x.d};
  }

 private:
  ExprPtr a_;
  double p_;
};

class FunExpr : public Expr {
 public:
  FunExpr(bool is_exp, ExprPtr a) : is_exp_(is_exp), a_(std::move(a)) {}
  DualNum eval(DualNum t) const override {
    const DualNum x = a_->eval(t);
    if (is_exp_) {
      const double e = std::exp(x.v);
      return {e, e * x.d};
    }
    return {std::log(x.v), x.d / x.v};
  }

 private:
  bool is_exp_;
  ExprPtr a_;
};

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw InvalidParameter("expression: trailing input at '" + s_.substr(pos_) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(v))
      throw InvalidParameter("expression: expected a number at '" + s_.substr(pos_) + "'");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  ExprPtr expr() {
    ExprPtr e;
    if (eat('-'))
      e = std::make_shared<BinExpr>('-', std::make_shared<NumExpr>(0.0), term());
    else
      e = term();
    while (true) {
      if (eat('+')) e = std::make_shared<BinExpr>('+', e, term());
      else if (eat('-')) e = std::make_shared<BinExpr>('-', e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (eat('*')) e = std::make_shared<BinExpr>('*', e, factor());
      else if (eat('/')) e = std::make_shared<BinExpr>('/', e, factor());
      else return e;
    }
  }

  ExprPtr factor() {
    ExprPtr e = base();
    if (eat('^')) e = std::make_shared<PowExpr>(e, number());
    return e;
  }

  ExprPtr base() {
    skip_ws();
    if (pos_ >= s_.size()) throw InvalidParameter("expression: unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) throw InvalidParameter("expression: missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return std::make_shared<NumExpr>(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string name = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (name == "t") return std::make_shared<VarExpr>();
      if (name == "exp" || name == "log") {
        if (!eat('(')) throw InvalidParameter("expression: " + name + " needs '('");
        ExprPtr e = expr();
        if (!eat(')')) throw InvalidParameter("expression: missing ')'");
        return std::make_shared<FunExpr>(name == "exp", e);
      }
      throw InvalidParameter("expression: unknown symbol '" + name + "'");
    }
    throw InvalidParameter("expression: unexpected character '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

AbstractNFunction expr_function(const std::string& text) {
  ExprPtr ast = ExprParser(text).parse();
  AbstractNFunction g;
  g.value = [ast](double t) { return ast->eval({t, 1.0}).v; };
  g.derivative = [ast](double t) { return ast->eval({t, 1.0}).d; };
  g.domain_max = std::numeric_limits<double>::infinity();
  g.label = text;
  return g;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void run_eval(const std::string& fn, const std::string& seq, const std::string& grid) {
  const WeightSequence m = load_sequence(seq);
  const std::vector<double> ts = parse_grid(grid);
  std::vector<std::string> rows;
  rows.reserve(ts.size());
  for (const double t : ts) {
    std::string value;
    if (fn == "sigma") value = std::to_string(counting(m, t));
    else if (fn == "omega") value = fmt_double(omega(m, t));
    else if (fn == "phi") value = fmt_double(phi(m, t));
    else value = fmt_double(omega_tilde(m, t));
    rows.push_back(fmt_double(t) + "," + value);
  }
  print_csv("t,value", rows);
}

void run_relate(const std::string& lhs, const std::string& rhs, const std::string& relation) {
  static const std::map<std::string, FnRelation> kRel = {
      {"preceq_c", FnRelation::PreceqC}, {"sim_c", FnRelation::SimC},
      {"preceq", FnRelation::Preceq},    {"sim", FnRelation::Sim},
      {"ess", FnRelation::EssStronger}};
  const WeightSequence ml = load_sequence(lhs);
  const WeightSequence mr = load_sequence(rhs);
  const NFunction fl = completed(ml);
  const NFunction fr = completed(mr);
  const FnRelation rel = kRel.at(relation);
  const RelateOptions opt;
  const RelationEvidence ev = relate_nfunctions(view(fl), view(fr), rel, opt);
  ojson out;
  out["lhs"] = ml.label();
  out["rhs"] = mr.label();
  out["relation"] = to_string(rel);
  out["verdict"] = verdict_str(ev.verdict);
  out["witnesses"] = witnesses_json(ev.witnesses);
  out["counterexample"] = ev.counterexample ? ojson(*ev.counterexample) : ojson(nullptr);
  out["note"] = ev.note;
  out["probe"] = {{"t_min", opt.t_min},
                  {"points", opt.points},
                  {"scale_pow_min", opt.min_scale_pow},
                  {"scale_pow_max", opt.max_scale_pow},
                  {"rel_tol", opt.rel_tol}};
  std::cout << out.dump(2) << "\n";
}

void run_conjugate(const std::string& seq, const std::string& route, const std::string& grid) {
  const WeightSequence m = load_sequence(seq);
  const std::vector<double> ss = parse_grid(grid);
  std::function<double(double)> f;
  if (route == "right_inverse") {
    const auto pair = std::make_shared<ConjugatePair>(complementary(completed(m)));
    f = [pair](double s) { return pair->conjugate.value(s); };
  } else if (route == "young") {
    const auto F = std::make_shared<NFunction>(completed(m));
    f = [F](double s) { return F->conjugate_value(s); };
  } else {
    f = [&m](double s) { return legendre_phi_star(m, s); };
  }
  std::vector<std::string> rows;
  rows.reserve(ss.size());
  for (const double s : ss) rows.push_back(fmt_double(s) + "," + fmt_double(f(s)));
  print_csv("s,value", rows);
}

void run_dual(const std::string& seq, const std::string& emit, const std::string& grid) {
  const WeightSequence m = load_sequence(seq);
  const DualSequence ds = dual(m);
  if (emit == "quotients") {
    const auto& lq = ds.dual.log_quotients();
    std::vector<std::string> rows;
    for (std::size_t j = 1; j < lq.size(); ++j)
      rows.push_back(std::to_string(j) + "," + fmt_double(lq[j]));
    print_csv("j,log_quotient", rows);
    return;
  }
  if (emit == "sigma") {
    if (grid.empty()) throw InvalidParameter("dual --emit sigma needs --grid");
    const std::vector<double> ts = parse_grid(grid);
    std::vector<std::string> rows;
    rows.reserve(ts.size());
    for (const double t : ts)
      rows.push_back(fmt_double(t) + "," + std::to_string(sigma_dual(ds, t)));
    print_csv("t,value", rows);
    return;
  }
  const SandwichReport r = sandwich_check(ds);
  std::vector<std::string> rows;
  rows.push_back("points," + std::to_string(r.points));
  rows.push_back("d_threshold," + std::to_string(ds.d_threshold));
  rows.push_back("min_gap," + fmt_double(r.min_gap));
  rows.push_back("max_gap," + fmt_double(r.max_gap));
  rows.push_back("tail_ratio_dev," + fmt_double(r.tail_ratio_dev));
  rows.push_back(std::string("lower_ok,") + bool_str(r.lower_ok));
  rows.push_back(std::string("upper_ok,") + bool_str(r.upper_ok));
  rows.push_back(std::string("gap <= 1 everywhere,") + bool_str(r.lower_ok && r.upper_ok));
  print_csv("key,value", rows);
}

void run_from_nfunction(const std::string& expr, std::size_t horizon, const std::string& emit) {
  const AbstractNFunction g = expr_function(expr);
  if (emit == "sequence") {
    const WeightSequence m = associated_sequence(g, horizon);
    const auto& lq = m.log_quotients();
    std::vector<std::string> rows;
    for (std::size_t j = 1; j < lq.size(); ++j)
      rows.push_back(std::to_string(j) + "," + fmt_double(lq[j]));
    print_csv("j,log_quotient", rows);
    return;
  }
  if (emit == "trace") {
    const MaximizerTrace tr = maximizer_points(g, horizon);
    std::vector<std::string> rows;
    for (std::size_t j = 0; j < tr.t_points.size(); ++j)
      rows.push_back(std::to_string(j) + "," + fmt_double(tr.t_points[j]));
    print_csv("j,t_j", rows);
    return;
  }
  const SandwichSuite s = sandwich_suite(g, horizon);
  std::vector<std::string> rows;
  rows.push_back("grid_points," + std::to_string(s.grid_points));
  rows.push_back("A," + fmt_double(s.A));
  rows.push_back("B," + fmt_double(s.B));
  rows.push_back(std::string("chain1,") + bool_str(s.chain1));
  rows.push_back(std::string("chain2,") + bool_str(s.chain2));
  rows.push_back(std::string("chain3,") + bool_str(s.chain3));
  rows.push_back(std::string("count_ok,") + bool_str(s.count_ok));
  rows.push_back(std::string("phi_bounded,") + bool_str(s.phi_bounded));
  print_csv("key,value", rows);
}

std::vector<ConditionReport> run_condition_checks(const WeightSequence& m,
                                                  const std::vector<std::string>& tokens) {
  std::set<std::string> seen;
  std::vector<ConditionReport> reports;
  for (const auto& tok : tokens) {
    if (!seen.insert(tok).second)
      throw InvalidParameter("duplicate condition '" + tok + "'");
    if (tok == "delta2") reports.push_back(check_delta2(m));
    else if (tok == "nabla2") reports.push_back(check_nabla2(m));
    else if (tok == "deltasq") reports.push_back(check_delta_square(m));
    else if (tok == "delta3") reports.push_back(check_delta3(m));
    else if (tok == "deltaprime") {
      const DeltaPrimeReport dp = check_delta_prime(m);
      reports.push_back(dp.function_probe);
      reports.push_back(dp.density_monotonicity);
    } else {
      throw InvalidParameter("unknown condition '" + tok +
                             "' (expected delta2,nabla2,deltasq,delta3,deltaprime)");
    }
  }
  return reports;
}

void run_check(const std::string& seq, const std::string& conditions, const std::string& out) {
  const WeightSequence m = load_sequence(seq);
  const std::vector<ConditionReport> reports = run_condition_checks(m, split(conditions, ','));
  if (out == "json") {
    ojson j;
    j["sequence"] = m.label();
    j["horizon"] = m.horizon();
    j["reports"] = ojson::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::size_t wc = 9, wv = 7, wr = 5;
  for (const auto& r : reports) {
    wc = std::max(wc, r.condition.size());
    wv = std::max(wv, verdict_str(r.verdict).size());
    wr = std::max(wr, r.route.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w + 2), ' ');
    return s;
  };
  std::string buf = "sequence " + m.label() + ", horizon " + std::to_string(m.horizon()) + "\n";
  buf += pad("condition", wc) + pad("verdict", wv) + pad("route", wr) + "details\n";
  for (const auto& r : reports) {
    buf += pad(r.condition, wc) + pad(verdict_str(r.verdict), wv) +
           pad(r.route.empty() ? "-" : r.route, wr) + report_details(r) + "\n";
  }
  std::cout << buf;
}

void run_audit(const std::string& seq) {
  const WeightSequence m = load_sequence(seq);
  const std::vector<ConditionReport> reports = run_condition_checks(
      m, {"delta2", "nabla2", "deltasq", "delta3", "deltaprime"});
  const ImplicationAudit audit = implication_audit(reports);
  ojson j;
  j["sequence"] = m.label();
  j["horizon"] = m.horizon();
  j["verdicts"] = ojson::object();
  for (const auto& r : reports) j["verdicts"][r.condition] = verdict_str(r.verdict);
  j["checked"] = audit.checked;
  j["violations"] = audit.violations;
  j["consistent"] = audit.consistent();
  std::cout << j.dump(2) << "\n";
}

void run_families(std::size_t horizon) {
  struct Row {
    std::string name;
    SequenceSpec spec;
  };
  std::vector<Row> table = {
      {"gevrey{0.5}", {"gevrey", {{"s", 0.5}}, horizon, {}}},
      {"gevrey{1}", {"gevrey", {{"s", 1.0}}, horizon, {}}},
      {"gevrey{2}", {"gevrey", {{"s", 2.0}}, horizon, {}}},
      {"qgevrey{2,2}", {"qgevrey", {{"q", 2.0}, {"n", 2.0}}, horizon, {}}},
      {"qgevrey{3,2}", {"qgevrey", {{"q", 3.0}, {"n", 2.0}}, horizon, {}}},
  };
  auto letter = [](Verdict v) {
    switch (v) {
      case Verdict::Holds: return "H";
      case Verdict::Fails: return "F";
      default: return "I";
    }
  };
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string buf = "built-in weight-sequence families, horizon " + std::to_string(horizon) + "\n\n";
  buf += pad("family", 14) + pad("mg", 4) + pad("delta2", 8) + pad("nabla2", 8) +
         pad("deltasq", 9) + pad("delta3", 8) + pad("deltaprime", 12) +
         pad("deltaprime_f", 14) + "notes\n";
  for (const auto& row : table) {
    const WeightSequence m = make_sequence(row.spec);
    const ConditionReport mg = has_mg(m);
    std::vector<ConditionReport> reports = run_condition_checks(
        m, {"delta2", "nabla2", "deltasq", "delta3", "deltaprime"});
    std::string note;
    try {
      const ImplicationAudit audit = implication_audit(reports);
      note = audit.consistent() ? "audit consistent" : "audit: " + audit.violations.front();
    } catch (const IncompleteReports&) {
      note = "audit skipped (undecided verdicts)";
    }
    buf += pad(row.name, 14) + pad(letter(mg.verdict), 4);
    for (const auto& r : reports) {
      const std::size_t w = r.condition == "delta_2" ? 8
                          : r.condition == "nabla_2" ? 8
                          : r.condition == "delta_square" ? 9
                          : r.condition == "delta_3" ? 8
                          : r.condition == "delta_prime" ? 12 : 14;
      buf += pad(letter(r.verdict), w);
    }
    buf += note + "\n";
  }
  std::cout << buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight sequences, associated N-functions, conjugates, duals, growth conditions"};
  app.require_subcommand(1);

  const char* seq_help = "sequence spec: family:key=value,... or @file.json "
                         "(families: gevrey:s=..., qgevrey:q=...,n=..., explicit:lq=v;v;...)";

  auto* c_eval = app.add_subcommand("eval", "evaluate sigma/omega/phi/omega_tilde on a grid (CSV)");
  std::string e_fn, e_seq, e_grid, e_out = "csv";
  c_eval->add_option("--fn", e_fn, "sigma|omega|phi|omega_tilde")
      ->required()
      ->check(CLI::IsMember({"sigma", "omega", "phi", "omega_tilde"}));
  c_eval->add_option("--seq", e_seq, seq_help)->required();
  c_eval->add_option("--grid", e_grid, "a:b:step, both ends included")->required();
  c_eval->add_option("--out", e_out, "output format")->check(CLI::IsMember({"csv"}));

  auto* c_relate = app.add_subcommand("relate", "compare two completed N-functions (JSON report)");
  std::string r_lhs, r_rhs, r_relation, r_report = "json";
  c_relate->add_option("--lhs", r_lhs, seq_help)->required();
  c_relate->add_option("--rhs", r_rhs, seq_help)->required();
  c_relate->add_option("--relation", r_relation, "preceq_c|sim_c|preceq|sim|ess")
      ->required()
      ->check(CLI::IsMember({"preceq_c", "sim_c", "preceq", "sim", "ess"}));
  c_relate->add_option("--report", r_report, "report format")->check(CLI::IsMember({"json"}));

  auto* c_conj = app.add_subcommand("conjugate", "evaluate a complementary function on a grid (CSV)");
  std::string j_seq, j_route, j_grid, j_out = "csv";
  c_conj->add_option("--seq", j_seq, seq_help)->required();
  c_conj->add_option("--route", j_route, "right_inverse|young|legendre")
      ->required()
      ->check(CLI::IsMember({"right_inverse", "young", "legendre"}));
  c_conj->add_option("--grid", j_grid, "a:b:step over the conjugate argument")->required();
  c_conj->add_option("--out", j_out, "output format")->check(CLI::IsMember({"csv"}));

  auto* c_dual = app.add_subcommand("dual", "dual sequence: quotients, counting, or sandwich report");
  std::string d_seq, d_emit, d_grid, d_out = "csv";
  c_dual->add_option("--seq", d_seq, seq_help)->required();
  c_dual->add_option("--emit", d_emit, "quotients|sigma|sandwich")
      ->required()
      ->check(CLI::IsMember({"quotients", "sigma", "sandwich"}));
  c_dual->add_option("--grid", d_grid, "a:b:step (sigma only)");
  c_dual->add_option("--out", d_out, "output format")->check(CLI::IsMember({"csv"}));

  auto* c_from = app.add_subcommand("from-nfunction",
                                    "extract the weight sequence of a convex expression in t");
  std::string f_expr, f_emit;
  std::size_t f_horizon = 64;
  c_from->add_option("--expr", f_expr,
                     "expression in t: numbers, + - * / ^, exp(...), log(...), parentheses")
      ->required();
  c_from->add_option("--horizon", f_horizon, "number of indices to extract");
  c_from->add_option("--emit", f_emit, "sequence|trace|sandwich")
      ->required()
      ->check(CLI::IsMember({"sequence", "trace", "sandwich"}));

  auto* c_check = app.add_subcommand("check", "growth-condition verdicts for one sequence");
  std::string k_seq, k_conditions = "delta2,nabla2,deltasq,delta3,deltaprime", k_out = "json";
  c_check->add_option("--seq", k_seq, seq_help)->required();
  c_check->add_option("--conditions", k_conditions,
                      "comma list from delta2,nabla2,deltasq,delta3,deltaprime");
  c_check->add_option("--out", k_out, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* c_audit = app.add_subcommand("audit", "verdicts plus implication cross-check (JSON)");
  std::string a_seq;
  c_audit->add_option("--seq", a_seq, seq_help)->required();

  auto* c_fam = app.add_subcommand("families", "verdict matrix of the built-in families");
  std::size_t fam_horizon = 1024;
  c_fam->add_option("--horizon", fam_horizon, "horizon for every row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_eval) run_eval(e_fn, e_seq, e_grid);
    else if (*c_relate) run_relate(r_lhs, r_rhs, r_relation);
    else if (*c_conj) run_conjugate(j_seq, j_route, j_grid);
    else if (*c_dual) run_dual(d_seq, d_emit, d_grid);
    else if (*c_from) run_from_nfunction(f_expr, f_horizon, f_emit);
    else if (*c_check) run_check(k_seq, k_conditions, k_out);
    else if (*c_audit) run_audit(a_seq);
    else run_families(fam_horizon);
    return 0;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
