#include "commands.hpp"

#include <iostream>
#include <numeric>

#include "op_spec.hpp"
#include "qfock/linalg.hpp"
#include "qfock/roots_of_unity.hpp"
#include "qfock/verify.hpp"

namespace qfock::cli {

namespace {

RootDatum datum(const RunConfig& cfg) {
  if (cfg.type.empty() || cfg.rank == 0) throw UsageError("--type and --rank are required");
  try {
    return build_root_datum(parse_family(cfg.type), cfg.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void warn_coprimality(const RootDatum& d, int l, Emitter& out) {
  if (l < 1 || std::gcd(l, d.coxeter) == 1) return;
  const std::string msg = "gcd(l, N) = " + std::to_string(std::gcd(l, d.coxeter)) + " for l = " +
                          std::to_string(l) + ", N = " + std::to_string(d.coxeter) +
                          "; the irreducibility hypothesis does not hold";
  std::cerr << "warning: " << msg << '\n';
  out.emit(Json{{"record", "warning"}, {"kind", "coprimality"}, {"l", l}, {"coxeter", d.coxeter}, {"message", msg}});
}

Json eta_json(const QElement& eta) { return Json(eta); }

Json check_json(const CheckResult& c) {
  return Json{{"record", "check"},          {"suite", c.suite},   {"name", c.name},
              {"passed", c.passed},         {"informational", c.informational},
              {"checks", c.checks},         {"residual_terms", c.residual_terms},
              {"detail", c.detail}};
}

int emit_report(const SuiteReport& rep, Emitter& out) {
  long checks = 0;
  for (const auto& c : rep.results) {
    out.emit(check_json(c));
    checks += c.checks;
  }
  out.emit(Json{{"record", "summary"},
                {"suite", rep.suite},
                {"results", rep.results.size()},
                {"checks", checks},
                {"failures", rep.failures()},
                {"passed", rep.passed()}});
  return rep.passed() ? 0 : 1;
}

std::vector<std::string> cyclotomic_strings(const std::vector<CyclotomicNum>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

SuiteReport det_suite(const RootDatum& d, int lmax) {
  SuiteReport rep;
  rep.suite = "det";
  const LaurentZ det = qcartan_det(d);
  {
    CheckResult c;
    c.suite = "det";
    c.name = d.name() + " cofactor = Bareiss";
    c.checks = 1;
    c.passed = det == bareiss_determinant(qcartan(d));
    c.detail = to_string(det);
    rep.results.push_back(c);
  }
  for (const auto& f : det_closed_forms(d)) {
    CheckResult c;
    c.suite = "det";
    c.name = d.name() + " " + f.label + " " + f.formula;
    c.checks = 1;
    c.passed = f.value == det;
    c.informational = f.informational;
    c.detail = to_string(f.value);
    rep.results.push_back(c);
  }
  CheckResult scan;
  scan.suite = "det";
  scan.name = d.name() + " nonvanishing l<=" + std::to_string(lmax);
  std::vector<int> skipped;
  for (int l = 1; l <= lmax; ++l) {
    if (std::gcd(l, d.coxeter) != 1) {
      skipped.push_back(l);
      continue;
    }
    const auto s = detq_nonvanishing(d, l, 2 * l);
    scan.checks += s.kmax;
    if (!s.zeros.empty()) {
      scan.passed = false;
      scan.residual_terms += static_cast<long>(s.zeros.size());
      if (scan.detail.empty()) scan.detail = "zero at l=" + std::to_string(l) + " k=" + std::to_string(s.zeros[0]);
    }
  }
  if (scan.passed) scan.detail = std::to_string(scan.checks) + " evaluations, " + std::to_string(skipped.size()) + " non-coprime l skipped";
  rep.results.push_back(scan);
  return rep;
}

}  // namespace

int cmd_rootdata(const RunConfig& cfg, Emitter& out) {
  const RootDatum d = datum(cfg);
  const LaurentZ det = qcartan_det(d);
  out.emit(Json{{"record", "rootdata"},
                {"type", d.name()},
                {"rank", d.rank},
                {"coxeter", d.coxeter},
                {"positive_roots", d.positive_roots.size()},
                {"theta", eta_json(d.theta)},
                {"cartan", d.cartan},
                {"det", to_string(det)}});
  int status = 0;
  for (const auto& f : det_closed_forms(d)) {
    const bool match = f.value == det;
    if (!match && !f.informational) status = 1;
    out.emit(Json{{"record", "det_closed_form"},
                  {"label", f.label},
                  {"formula", f.formula},
                  {"value", to_string(f.value)},
                  {"matches", match},
                  {"informational", f.informational}});
  }
  if (cfg.l >= 1) {
    warn_coprimality(d, cfg.l, out);
    const auto s = detq_nonvanishing(d, cfg.l, 2 * cfg.l);
    out.emit(Json{{"record", "det_scan"},
                  {"l", s.l},
                  {"kmax", s.kmax},
                  {"zeros", s.zeros},
                  {"values", cyclotomic_strings(s.values)}});
  }
  return status;
}

int cmd_act(const RunConfig& cfg, Emitter& out) {
  const RootDatum d = datum(cfg);
  if (cfg.ops.empty()) throw UsageError("act needs at least one --op");
  std::vector<OpSpec> ops;
  for (const auto& text : cfg.ops) {
    try {
      ops.push_back(parse_op(text, d.rank));
    } catch (const ParseError& e) {
      throw InputError(std::string("in --op '") + text + "': " + e.what());
    }
  }
  FockQ v;
  if (cfg.state.empty() || cfg.state == "vac") {
    v = promote(vacuum(d));
  } else {
    try {
      v = parse_state(cfg.state, d);
    } catch (const ParseError& e) {
      throw InputError(std::string("in --state: ") + e.what());
    }
  }
  const std::string input = to_string(v);
  for (const auto& op : ops) v = apply_op(d, op, v);

  Json terms = Json::array();
  for (const auto& [b, c] : v.terms) {
    terms.push_back(Json{{"coeff", to_string(c)},
                         {"lambda", to_string(b.lambda)},
                         {"eta", eta_json(b.eta)},
                         {"energy", energy(d, b)}});
  }
  out.emit(Json{{"record", "act"},
                {"type", d.name()},
                {"ops", cfg.ops},
                {"input", input},
                {"result", to_string(v)},
                {"in_lattice", in_lattice(v)},
                {"terms", terms}});
  return 0;
}

int cmd_character(const RunConfig& cfg, Emitter& out) {
  const RootDatum d = datum(cfg);
  const int depth = cfg.depth.value_or(4);
  if (depth < 0) throw UsageError("--depth must be >= 0");
  const auto ch = character(d, depth);
  std::vector<long> totals(static_cast<std::size_t>(depth) + 1, 0);
  for (const auto& [w, mult] : ch) {
    out.emit(Json{{"record", "weight"}, {"eta", eta_json(w.eta)}, {"energy", w.energy}, {"multiplicity", mult}});
    totals[w.energy] += mult;
  }
  for (int e = 0; e <= depth; ++e) {
    out.emit(Json{{"record", "energy_total"}, {"type", d.name()}, {"energy", e}, {"dimension", totals[e]}});
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, Emitter& out) {
  const std::string& s = cfg.suite;
  if (s == "id") {
    SuiteReport rep{"id", {}};
    for (int r = 1; r <= cfg.rmax.value_or(5); ++r) rep.results.push_back(verify_lemma_id(r));
    return emit_report(rep, out);
  }
  if (s == "rfact") {
    SuiteReport rep{"rfact", {}};
    for (int r = 2; r <= cfg.rmax.value_or(4); ++r) {
      for (auto& c : verify_rfact(r, cfg.degree.value_or(4))) rep.results.push_back(std::move(c));
    }
    return emit_report(rep, out);
  }
  const RootDatum d = datum(cfg);
  if (s == "det") return emit_report(det_suite(d, cfg.lmax.value_or(30)), out);
  if (s == "drinfeld") {
    DrinfeldOptions opt;
    opt.depth = cfg.depth.value_or(opt.depth);
    opt.rmax = cfg.rmax.value_or(opt.rmax);
    opt.smax = cfg.smax.value_or(opt.smax);
    return emit_report(verify_drinfeld(d, opt), out);
  }
  if (s == "product") {
    return emit_report(verify_product_suite(d, cfg.rmax.value_or(3), cfg.depth.value_or(2), cfg.nmax.value_or(2)), out);
  }
  if (s == "lattice") {
    return emit_report(verify_lattice(d, cfg.depth.value_or(3), cfg.nmax.value_or(2), cfg.rmax.value_or(3)), out);
  }
  if (s == "r1") return emit_report(verify_r1(d, cfg.range.value_or(2)), out);
  if (s == "character") return emit_report(verify_character(d, cfg.depth.value_or(6)), out);
  throw UsageError("unknown suite '" + s + "'");
}

int cmd_rootofunity(const RunConfig& cfg, Emitter& out) {
  const RootDatum d = datum(cfg);
  const int depth = cfg.depth.value_or(4);
  const std::string& a = cfg.action;
  if (cfg.l < 0 || (cfg.l == 0 && a != "kernel")) throw UsageError("--l >= 1 is required for " + a);
  warn_coprimality(d, cfg.l, out);

  if (a == "scan") {
    const auto s = detq_nonvanishing(d, cfg.l, 2 * cfg.l);
    out.emit(Json{{"record", "det_scan"}, {"l", s.l}, {"kmax", s.kmax}, {"zeros", s.zeros},
                  {"values", cyclotomic_strings(s.values)}});
    return s.zeros.empty() ? 0 : 1;
  }
  if (a == "dual") {
    int status = 0;
    for (int k = 1; k <= depth; ++k) {
      for (int i = 0; i < d.rank; ++i) {
        try {
          const auto h = dual_heisenberg(d, i, k, cfg.l);
          out.emit(Json{{"record", "dual"}, {"i", i + 1}, {"k", k}, {"coeffs", cyclotomic_strings(h.coeffs)}});
        } catch (const CoprimalityViolation& e) {
          status = 1;
          out.emit(Json{{"record", "dual_singular"}, {"i", i + 1}, {"k", e.k()}, {"det", to_string(e.det())},
                        {"message", e.what()}});
        }
      }
    }
    return status;
  }
  if (a == "kernel") {
    const auto h = heisenberg_kernel(d, cfg.l, depth);
    out.emit(Json{{"record", "heisenberg_kernel"}, {"l", cfg.l}, {"depth", depth},
                  {"kernel_dims", h.kernel_dims}, {"singular_k", h.singular_k}});
    return std::all_of(h.kernel_dims.begin(), h.kernel_dims.end(), [](int x) { return x == 0; }) ? 0 : 1;
  }
  if (a == "search") {
    const auto s = singular_vector_search(d, cfg.l, depth);
    out.emit(Json{{"record", "singular_search"}, {"l", cfg.l}, {"depth", depth},
                  {"stable_dims", s.stable_dims}, {"singular_found", s.found()}});
    for (const auto& v : s.candidates) {
      Json terms = Json::array();
      for (const auto& [b, c] : v.terms) {
        terms.push_back(Json{{"coeff", to_string(c)}, {"lambda", to_string(b.lambda)}, {"eta", eta_json(b.eta)}});
      }
      out.emit(Json{{"record", "singular_candidate"}, {"terms", terms}});
    }
    return s.found() ? 1 : 0;
  }
  if (a == "irreducible") {
    const auto rep = certify_irreducible(d, cfg.l, depth);
    Json rec{{"record", "irreducible"},
             {"type", d.name()},
             {"l", rep.l},
             {"depth", rep.depth},
             {"coprime", rep.coprime},
             {"det_zeros", rep.det_checks.zeros},
             {"heisenberg_kernel_dims", rep.heisenberg.kernel_dims},
             {"singular_k", rep.heisenberg.singular_k},
             {"dual_delta_ok", rep.dual_delta_ok},
             {"weight_dims_ok", rep.weight_dims_ok}};
    if (rep.search) {
      rec["stable_dims"] = rep.search->stable_dims;
      rec["singular_found"] = rep.search->found();
    }
    rec["irreducible_to_depth"] = rep.irreducible_to_depth();
    out.emit(rec);
    return rep.irreducible_to_depth() ? 0 : 1;
  }
  throw UsageError("unknown rootofunity action '" + a + "'");
}

}  // namespace qfock::cli
