#include "freediv/cli/runner.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "freediv/analysis/analysis.hpp"
#include "freediv/complexes/complexes.hpp"
#include "freediv/error.hpp"
#include "freediv/logder/logder.hpp"
#include "freediv/ring/parse.hpp"
#include "freediv/ring/weights.hpp"

namespace freediv::cli {

namespace {

using nlohmann::json;

std::string count(std::size_t k, const char* noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

std::string times_f(const Rational& c) {
  if (c == 1) return "f";
  if (c == -1) return "-f";
  return c.get_str() + "*f";
}

// Thrown by a prerequisite that could not be established; the dependent check is skipped.
struct Skip {
  std::string reason;
};

class Session {
 public:
  explicit Session(const AnalysisRequest& req) : req_(req) {
    validate(req);
    ring_ = VarSet::base(req.vars);
    Polynomial f = parse_polynomial(req.f, ring_);
    d_.emplace(f, req.weights);
    for (const auto& t : req.operators) ops_.push_back(parse_operator_with_s(t, ring_));
    if (req.basis)
      for (const auto& t : *req.basis) given_basis_.push_back(VectorField::from_operator(parse_operator(t, ring_)));
  }

  const DivisorSpec& d() const { return *d_; }

  std::string str(const Polynomial& p) const {
    std::size_t n = p.ambient().size();
    return p.to_string(req_.order == "lex" ? TermOrder::lex(n) : TermOrder::degrevlex(n));
  }
  json strs(const std::vector<Polynomial>& ps) const {
    json a = json::array();
    for (const auto& p : ps) a.push_back(str(p));
    return a;
  }
  json fields(const std::vector<VectorField>& vs) const {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v.to_string());
    return a;
  }
  json vec(const Vec& v) const { return strs(v); }
  // Reduced basis in the requested order.
  json gb(const SubmoduleGB& m) const {
    std::size_t n = m.ring().size();
    return strs(m.with_order(req_.order == "lex" ? TermOrder::lex(n) : TermOrder::degrevlex(n)).ideal_basis());
  }

  const std::optional<DiffOperator>& euler() {
    if (!euler_done_) {
      euler_ = find_euler(d());
      euler_done_ = true;
    }
    return euler_;
  }
  const DiffOperator& need_euler() {
    if (!euler()) throw Skip{"no Euler field found"};
    return *euler_;
  }
  const LogDerModule& theta() {
    if (!theta_) theta_ = compute_theta(d());
    return *theta_;
  }
  const std::vector<VectorField>& need_basis() {
    if (!basis_done_) {
      basis_done_ = true;
      if (!given_basis_.empty()) {
        try {
          saito_ = saito_criterion(d(), given_basis_);
        } catch (const NotLogarithmicError& e) {
          basis_error_ = e.what();
        }
        if (saito_ && (saito_->is_basis || saito_->is_local_basis_at_origin)) basis_ = given_basis_;
        if (!basis_ && basis_error_.empty()) basis_error_ = "the given fields fail Saito's criterion";
      } else {
        basis_ = find_saito_basis(d(), true);
        if (basis_) saito_ = saito_criterion(d(), *basis_);
        else basis_error_ = "no Saito basis among the computed logarithmic fields";
      }
    }
    if (!basis_) throw Skip{basis_error_};
    return *basis_;
  }
  const std::vector<VectorField>& need_theta_basis() {
    if (!theta_basis_) theta_basis_ = split_logder(d(), need_basis(), need_euler());
    return *theta_basis_;
  }

  json squarefree() {
    return {{"squarefree", true}, {"summary", "f is reduced"}};
  }

  json weights() {
    auto w = d().weights() ? d().weights() : find_weights(d().f());
    if (!w) return {{"weighted_homogeneous", false}, {"summary", "not weighted homogeneous"}};
    long deg = weighted_degree(d().f(), *w).degree;
    std::string s;
    for (long x : *w) s += (s.empty() ? "" : ",") + std::to_string(x);
    return {{"weighted_homogeneous", true},
            {"weights", *w},
            {"degree", deg},
            {"summary", "weights (" + s + "), degree " + std::to_string(deg)}};
  }

  json euler_check() {
    if (!euler()) return {{"found", false}, {"summary", "no Euler field"}};
    return {{"found", true}, {"field", euler_->to_string()}, {"summary", "E = " + euler_->to_string()}};
  }

  json theta_check() {
    const auto& g = theta().generators;
    return {{"generators", fields(g)}, {"summary", count(g.size(), "generator")}};
  }

  json logder_check() {
    auto g = compute_logder(d()).generators;
    return {{"generators", fields(g)}, {"summary", count(g.size(), "generator")}};
  }

  json saito() {
    try {
      need_basis();
    } catch (const Skip& s) {
      json out = {{"is_basis", false}, {"summary", "no basis: " + s.reason}};
      if (saito_) out["determinant"] = str(saito_->determinant);
      return out;
    }
    json out = {{"basis", fields(*basis_)},
                {"is_basis", saito_->is_basis},
                {"local_basis_at_origin", saito_->is_local_basis_at_origin},
                {"determinant", str(saito_->determinant)}};
    std::string summary;
    if (saito_->det_scalar) {
      out["determinant_over_f"] = saito_->det_scalar->get_str();
      summary = "free, det = " + times_f(*saito_->det_scalar);
    } else {
      summary = "basis of the germ at the origin only, det = " + str(saito_->determinant);
    }
    out["summary"] = summary;
    return out;
  }

  json koszul() {
    auto r = koszul_check(d(), need_basis());
    std::string summary = "dim " + std::to_string(r.dim) + ", " + (r.is_koszul_free ? "Koszul free" : "not Koszul free");
    if (!saito_->is_basis) summary += " (germ basis at the origin)";
    return {{"symbols", strs(r.symbols)},
            {"dim", r.dim},
            {"koszul_free", r.is_koszul_free},
            {"germ_basis_only", !saito_->is_basis},
            {"summary", summary}};
  }

  json rees() {
    auto r = rees_kernel(d());
    json out = {{"kernel", gb(r.kernel)},
                {"degree1_part", strs(r.degree1_part)},
                {"linear_type", r.is_linear_type},
                {"summary", r.is_linear_type ? "linear type" : "not linear type"}};
    if (r.witness) {
      out["witness"] = str(*r.witness);
      out["summary"] = "not linear type, witness " + str(*r.witness);
    }
    return out;
  }

  json linear_type() {
    const auto& th = theta().generators;
    json ops = json::array();
    for (const auto& p : ops_) {
      json o = {{"operator", p.to_string()}, {"in_ann", annfs_membership(d(), p)}};
      if (p.s_degree() <= 0 && !p.is_zero()) {
        auto w = linear_type_witness_check(d(), p, th);
        o["colon_ideal"] = gb(w.colon_ideal);
        o["symbol_in_theta_ideal"] = w.in_theta_ideal;
        o["certifies_non_linear_type"] = w.in_ann && !w.in_theta_ideal;
        o["note"] = "colon ideal computed in the polynomial ring; membership in the local ring at a point is not decided";
      }
      ops.push_back(o);
    }
    auto rep = annfs_report(d(), th, euler(), {});
    json claims = json::array();
    for (const auto& c : rep.claims)
      claims.push_back({{"statement", c.statement}, {"inclusion_verified", c.inclusion_verified}, {"equality", c.equality}});
    std::size_t certs = 0, members = 0, verified = 0;
    for (const auto& o : ops) {
      members += o["in_ann"].get<bool>();
      certs += o.contains("certifies_non_linear_type") && o["certifies_non_linear_type"].get<bool>();
    }
    for (const auto& c : rep.claims) verified += c.inclusion_verified;
    std::string summary = std::to_string(verified) + "/" + std::to_string(rep.claims.size()) + " inclusions verified";
    if (!ops.empty())
      summary += ", " + std::to_string(members) + "/" + std::to_string(ops.size()) + " operators annihilate f^s";
    if (certs) summary += ", " + std::to_string(certs) + (certs == 1 ? " certifies" : " certify") + " that Ann f^s has symbols outside <sigma(Theta_f)>";
    return {{"operators", ops}, {"claims", claims}, {"summary", summary}};
  }

  json isolated_kernel() {
    try {
      bool ok = isolated_singularity_kernel_check(d());
      return {{"applicable", true},
              {"kernel_equals_cross_terms", ok},
              {"cross_terms", strs(cross_terms(d()))},
              {"summary", ok ? "kernel generated by the cross terms" : "kernel differs from the cross terms"}};
    } catch (const InapplicableError& e) {
      return {{"applicable", false}, {"summary", std::string("inapplicable: ") + e.what()}};
    }
  }

  json exactness(const ExactnessReport& r) const {
    json a = json::array();
    for (const auto& p : r.positions) {
      json o = {{"position", p.position}, {"status", to_string(p.status)}};
      if (p.witness) o["witness"] = vec(*p.witness);
      a.push_back(o);
    }
    return a;
  }

  json complex_summary(const ChainComplex& c) const {
    auto ex = verify_exactness_commutative(c);
    return {{"ranks", c.ranks}, {"d2", verify_d2(c)}, {"exact", ex.exact_at_positive_positions()}, {"positions", exactness(ex)}};
  }

  ChainComplex koszul_der_log() {
    std::vector<Polynomial> sym;
    for (const auto& v : need_basis()) sym.push_back(v.symbol());
    return build_koszul(sym, cotangent_varset(ring_));
  }
  ChainComplex koszul_xi() {
    std::vector<Polynomial> sym;
    for (const auto& v : need_theta_basis()) sym.push_back(v.symbol());
    sym.push_back(d().f().embed(cotangent_varset(ring_)));
    return build_koszul(sym);
  }

  json koszul_complex() {
    json out = {{"der_log", complex_summary(koszul_der_log())}};
    std::string summary = std::string("Der(log f) symbols: ") + (out["der_log"]["exact"].get<bool>() ? "exact" : "not exact");
    try {
      out["xi"] = complex_summary(koszul_xi());
      summary += std::string(", Xi_f: ") + (out["xi"]["exact"].get<bool>() ? "exact" : "not exact");
    } catch (const Skip& s) {
      out["xi"] = "skipped: " + s.reason;
    }
    out["summary"] = summary;
    return out;
  }

  json spencer_mode(SpencerMode mode) {
    auto r = verify_spencer_resolution(d(), need_theta_basis(), need_euler(), mode);
    return {{"d2", r.d2},
            {"augmentation", r.augmentation},
            {"graded_matches_koszul", r.graded_matches},
            {"graded_exact", r.graded_exact},
            {"positions", exactness(r.exactness)},
            {"ranks", r.spencer.ranks},
            {"certified", r.certified()},
            {"summary", r.summary()}};
  }

  json spencer() {
    json out = {{"theta_basis", fields(need_theta_basis())},
                {"theta", spencer_mode(SpencerMode::theta)},
                {"xi", spencer_mode(SpencerMode::xi)}};
    out["summary"] = "Theta_f: " + out["theta"]["summary"].get<std::string>() +
                     "; Xi_f: " + out["xi"]["summary"].get<std::string>();
    return out;
  }

  json product() {
    Polynomial g;
    if (req_.product_f) {
      g = parse_polynomial(*req_.product_f, VarSet::base(req_.product_vars));
    } else {
      VarSet extra = VarSet::base({ring_.fresh_name("w")});
      g = Polynomial::variable(extra, 0);
    }
    auto r = product_stability_report(d().f(), g);
    return {{"partner", str(g)},
            {"f_koszul", r.f_koszul},
            {"g_koszul", r.g_koszul},
            {"product_koszul", r.product_koszul},
            {"dummy_koszul", r.dummy_koszul},
            {"holds", r.holds},
            {"summary", std::string(r.holds ? "verdicts stable" : "verdicts NOT stable") + " (product " +
                            (r.product_koszul ? "Koszul free" : "not Koszul free") + ")"}};
  }

  json dispatch(Check c) {
    switch (c) {
      case Check::squarefree: return squarefree();
      case Check::weights: return weights();
      case Check::euler: return euler_check();
      case Check::theta: return theta_check();
      case Check::logder: return logder_check();
      case Check::saito: return saito();
      case Check::koszul: return koszul();
      case Check::rees: return rees();
      case Check::linear_type: return linear_type();
      case Check::isolated_kernel: return isolated_kernel();
      case Check::koszul_complex: return koszul_complex();
      case Check::spencer: return spencer();
      case Check::product: return product();
    }
    throw InvariantError("unhandled check");
  }

  VarSet ring_;

 private:
  const AnalysisRequest& req_;
  std::optional<DivisorSpec> d_;
  std::vector<OperatorWithS> ops_;
  std::vector<VectorField> given_basis_;

  bool euler_done_ = false, basis_done_ = false;
  std::optional<DiffOperator> euler_;
  std::optional<LogDerModule> theta_;
  std::optional<std::vector<VectorField>> basis_, theta_basis_;
  std::optional<SaitoResult> saito_;
  std::string basis_error_;
};

}  // namespace

json run(const AnalysisRequest& req, const RunOptions& opts) {
  Session s(req);
  json checks = json::object();
  for (Check c : req.checks.empty() ? all_checks() : req.checks) {
    auto start = std::chrono::steady_clock::now();
    json result;
    try {
      result = s.dispatch(c);
      result["status"] = "ok";
    } catch (const Skip& skip) {
      result = {{"status", "skipped"}, {"summary", "skipped: " + skip.reason}};
    } catch (const InapplicableError& e) {
      result = {{"status", "inapplicable"}, {"summary", std::string("inapplicable: ") + e.what()}};
    } catch (const NotLogarithmicError& e) {
      result = {{"status", "failed"}, {"summary", std::string("failed: ") + e.what()}};
    } catch (const LieClosureError& e) {
      result = {{"status", "failed"}, {"summary", std::string("failed: ") + e.what()}};
    }
    if (opts.timings)
      result["time_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    checks[to_string(c)] = result;
  }
  json input = {{"vars", req.vars}, {"f", s.str(s.d().f())}, {"order", req.order}};
  if (!req.name.empty()) input["name"] = req.name;
  return {{"schema", 1}, {"input", input}, {"checks", checks}};
}

std::string render_text(const json& report) {
  std::string out;
  const auto& in = report["input"];
  if (in.contains("name")) out += in["name"].get<std::string>() + "\n";
  out += "f = " + in["f"].get<std::string>() + "\n";
  // Keep dependency order rather than the alphabetical order of the JSON object.
  for (Check c : all_checks()) {
    std::string name = to_string(c);
    if (!report["checks"].contains(name)) continue;
    const auto& r = report["checks"][name];
    out += "  " + name + ": " + r["summary"].get<std::string>() + "\n";
  }
  return out;
}

json export_complex(const AnalysisRequest& req, std::string_view kind) {
  Session s(req);
  try {
    if (kind == "koszul") return complex_to_json(s.koszul_der_log());
    if (kind == "koszul_xi") return complex_to_json(s.koszul_xi());
    if (kind == "spencer_theta") return complex_to_json(build_spencer(s.d(), s.need_theta_basis(), false));
    if (kind == "spencer_xi") return complex_to_json(build_spencer(s.d(), s.need_theta_basis(), true));
  } catch (const Skip& skip) {
    throw InapplicableError(skip.reason);
  }
  throw ParseError("unknown complex kind '" + std::string(kind) + "' (koszul, koszul_xi, spencer_theta, spencer_xi)", 1, 1);
}

}  // namespace freediv::cli
