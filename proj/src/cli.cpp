#include "hdglab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hdglab/complex_literal.hpp"
#include "hdglab/dispersion.hpp"
#include "hdglab/global_assembly.hpp"
#include "hdglab/hrt_local.hpp"
#include "hdglab/linalg.hpp"
#include "hdglab/stability_lab.hpp"

namespace hdglab {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

Complex complex_arg(const std::string &name, const std::string &text) {
  const auto z = parse_complex(text);
  if (!z) throw UsageError("invalid complex literal for " + name + ": '" + text + "'");
  return *z;
}

std::string num(double x) { return format_real(x); }

// JSON numbers cannot hold inf/nan; those are written as strings.
json jnum(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

void emit(const Common &c, const std::string &text, std::ostream &out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + c.out + "'");
  f << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

// local-matrix ---------------------------------------------------------------

struct LocalArgs {
  std::string system = "helmholtz";
  std::string shape = "square";
  int p = 0;
  std::string k = "1", tau = "1";
  double h = 1.0;
};

std::string block_text(const std::string &name, const CMatrix &m,
                       const std::vector<std::string> &rows, const std::vector<std::string> &cols) {
  std::ostringstream s;
  s << name << " " << m.rows() << "x" << m.cols() << "\n";
  s << "row";
  for (const auto &c : cols) s << "," << c;
  s << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s << rows[i];
    for (Eigen::Index j = 0; j < m.cols(); ++j) s << "," << format_complex(m(i, j));
    s << "\n";
  }
  return s.str();
}

json block_json(const CMatrix &m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

int cmd_local_matrix(const LocalArgs &a, const Common &c, std::ostream &out) {
  const Complex k = complex_arg("--k", a.k);
  const Complex tau = complex_arg("--tau", a.tau);
  if (!(a.h > 0.0)) throw UsageError("--h must be positive");
  const Shape shape = parse_shape(a.shape);
  ElementMatrixSet em;
  if (a.system == "helmholtz")
    em = assemble_helmholtz_local({k, tau, a.h, a.p, shape});
  else if (a.system == "maxwell")
    em = assemble_maxwell_local({k, tau, a.h, a.p, shape});
  else
    em = assemble_hrt_local({k, a.h, a.p});
  const SingularValueBounds sv = extreme_singular_values(em.A_ii);
  const auto &ri = em.interior_dof_labels;
  const auto &rt = em.trace_dof_labels;
  if (c.format == "json") {
    json j;
    j["system"] = a.system;
    j["shape"] = to_string(em.shape);
    j["p"] = a.p;
    j["k"] = {k.real(), k.imag()};
    j["tau"] = {em.tau.real(), em.tau.imag()};
    j["h"] = a.h;
    j["interior_dofs"] = ri;
    j["trace_dofs"] = rt;
    j["A_ii"] = block_json(em.A_ii);
    j["A_it"] = block_json(em.A_it);
    j["A_ti"] = block_json(em.A_ti);
    j["A_tt"] = block_json(em.A_tt);
    j["sigma_min"] = sv.sigma_min;
    j["sigma_min_normalized"] = sv.normalized();
    emit(c, dump(j), out);
  } else {
    std::string text = block_text("A_ii", em.A_ii, ri, ri) + block_text("A_it", em.A_it, ri, rt) +
                       block_text("A_ti", em.A_ti, rt, ri) + block_text("A_tt", em.A_tt, rt, rt);
    text += "sigma_min," + num(sv.sigma_min) + "\n";
    text += "sigma_min_normalized," + num(sv.normalized()) + "\n";
    emit(c, text, out);
  }
  return 0;
}

// stability sweeps -------------------------------------------------------------

const char *record_header = "kh_re,kh_im,tau_re,tau_im,p,shape,sigma_min,sigma_min_normalized\n";

std::string records_text(const std::vector<StabilityRecord> &recs, const Common &c) {
  if (c.format == "json") {
    json arr = json::array();
    for (const auto &r : recs)
      arr.push_back({{"kh_re", r.kh.real()},
                     {"kh_im", r.kh.imag()},
                     {"tau_re", r.tau.real()},
                     {"tau_im", r.tau.imag()},
                     {"p", r.p},
                     {"shape", to_string(r.shape)},
                     {"sigma_min", r.sigma_min},
                     {"sigma_min_normalized", r.sigma_min_normalized}});
    return dump(arr);
  }
  std::string s = record_header;
  for (const auto &r : recs)
    s += num(r.kh.real()) + "," + num(r.kh.imag()) + "," + num(r.tau.real()) + "," +
         num(r.tau.imag()) + "," + std::to_string(r.p) + "," + std::string(to_string(r.shape)) + "," +
         num(r.sigma_min) + "," + num(r.sigma_min_normalized) + "\n";
  return s;
}

struct SweepKhArgs {
  std::string shape = "tet";
  int p = 0;
  std::string tau = "1";
  double start = 0.01, stop = 20.0;
  int count = 2000;
};

int cmd_sweep_kh(const SweepKhArgs &a, const Common &c, std::ostream &out) {
  const Complex tau = complex_arg("--tau", a.tau);
  SweepGrid grid{{"kh", a.start, a.stop, a.count}, std::nullopt};
  try {
    grid.axis1.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  emit(c, records_text(sweep_kh(parse_shape(a.shape), a.p, tau, grid, 1.0, c.threads), c), out);
  return 0;
}

struct SweepTauArgs {
  std::string shape = "tet";
  int p = 0;
  std::string kh = "1";
  double re_start = -2, re_stop = 2, im_start = -2, im_stop = 2;
  int re_count = 201, im_count = 201;
};

int cmd_sweep_tau(const SweepTauArgs &a, const Common &c, std::ostream &out) {
  const Complex kh = complex_arg("--kh", a.kh);
  SweepGrid grid{{"tau_re", a.re_start, a.re_stop, a.re_count},
                 SweepAxis{"tau_im", a.im_start, a.im_stop, a.im_count}};
  try {
    grid.axis1.validate();
    grid.axis2->validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  emit(c, records_text(sweep_tau_plane(parse_shape(a.shape), a.p, kh, grid, c.threads), c), out);
  return 0;
}

// dispersion -------------------------------------------------------------------

struct DispersionArgs {
  std::string method = "hdg";
  int p = 0;
  double kh = std::numbers::pi / 4;
  std::string tau = "1";
  int theta_count = 181;
  int dim = 2;
  std::string summary;
};

int cmd_dispersion(const DispersionArgs &a, const Common &c, std::ostream &out,
                   std::ostream &err) {
  DispersionProblem prob;
  prob.method = parse_method(a.method);
  prob.p = a.p;
  prob.tau = prob.method == Method::hrt ? Complex(0.0) : complex_arg("--tau", a.tau);
  prob.dimension = a.dim;
  if (!(a.kh > 0.0)) throw UsageError("--kh must be positive");
  if (a.theta_count < 2) throw UsageError("--theta-count must be at least 2");
  if (a.dim == 1 && prob.method == Method::hrt) throw UsageError("HRT lattice is two-dimensional");
  const auto thetas = a.dim == 1 ? std::vector<double>{0.0} : uniform_angles(a.theta_count);
  const auto results = solve_angles(prob, a.kh, thetas, c.threads);
  const ErrorMetrics m = error_metrics(a.kh, results);
  json summary = {{"eps_disp", m.eps_disp},
                  {"eps_dissip", m.eps_dissip},
                  {"eps_total", m.eps_total},
                  {"valid", m.valid}};

  if (c.format == "json") {
    json rows = json::array();
    for (const auto &r : results)
      rows.push_back({{"theta", r.theta},
                      {"kh_num_re", r.k_h.real()},
                      {"kh_num_im", r.k_h.imag()},
                      {"residual", r.converged ? r.residual : -1.0}});
    json j = summary;
    j["method"] = to_string(prob.method);
    j["p"] = prob.p;
    j["kh"] = a.kh;
    j["tau_re"] = prob.tau.real();
    j["tau_im"] = prob.tau.imag();
    j["results"] = rows;
    emit(c, dump(j), out);
  } else {
    std::string s = "theta,kh,tau_re,tau_im,p,method,kh_num_re,kh_num_im,residual\n";
    for (const auto &r : results)
      s += num(r.theta) + "," + num(a.kh) + "," + num(prob.tau.real()) + "," +
           num(prob.tau.imag()) + "," + std::to_string(prob.p) + "," + to_string(prob.method) +
           "," + num(r.k_h.real()) + "," + num(r.k_h.imag()) + "," +
           num(r.converged ? r.residual : -1.0) + "\n";
    emit(c, s, out);
    if (!a.summary.empty()) {
      std::ofstream f(a.summary, std::ios::binary);
      if (!f) throw UsageError("cannot open summary file '" + a.summary + "'");
      f << dump(summary);
    } else {
      err << summary.dump() << "\n";
    }
  }
  return m.valid ? 0 : 1;
}

// optimal-tau --------------------------------------------------------------------

struct OptimalTauArgs {
  int p = 0;
  double kh = std::numbers::pi / 4;
  std::string branch = "pos";
  int n_angles = 181;
};

int cmd_optimal_tau(const OptimalTauArgs &a, const Common &c, std::ostream &out) {
  if (!(a.kh > 0.0)) throw UsageError("--kh must be positive");
  TauSearchDomain domain;
  domain.n_angles = a.n_angles;
  const TauBranch b = a.branch == "pos" ? TauBranch::im_pos : TauBranch::im_neg;
  const OptimalTau r = optimal_tau_search(a.p, a.kh, b, domain, c.threads);
  json j = {{"tau_re", r.tau.real()}, {"tau_im", r.tau.imag()}, {"eps_total", jnum(r.eps_total)}};
  emit(c, dump(j), out);
  return std::isfinite(r.eps_total) ? 0 : 1;
}

// condition ------------------------------------------------------------------------

struct ConditionArgs {
  int n = 4;
  int p = 0;
  std::string tau = "1";
  double start = 4.0, stop = 5.0;
  int count = 401;
};

int cmd_condition(const ConditionArgs &a, const Common &c, std::ostream &out) {
  const Complex tau = complex_arg("--tau", a.tau);
  if (a.count < 2 || !(a.start < a.stop)) throw UsageError("k sweep needs count >= 2 and start < stop");
  if (a.n < 1) throw UsageError("--n must be positive");
  const auto samples = condition_sweep({a.n}, tau, a.p, a.start, a.stop, a.count, c.threads);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto &s : samples) arr.push_back({{"k", s.k}, {"cond", jnum(s.cond)}});
    emit(c, dump(arr), out);
  } else {
    std::string s = "k,cond\n";
    for (const auto &x : samples) s += num(x.k) + "," + num(x.cond) + "\n";
    emit(c, s, out);
  }
  return 0;
}

// verify-theorem1 ----------------------------------------------------------------------

int cmd_theorem1(int samples, const Common &c, std::ostream &out) {
  if (samples < 1) throw UsageError("--samples must be positive");
  const Theorem1Report r = verify_theorem1_samples(samples, c.seed, c.threads);
  json bad = json::array();
  for (const auto &s : r.counterexamples)
    bad.push_back({{"k_re", s.k.real()},
                   {"k_im", s.k.imag()},
                   {"tau_re", s.tau.real()},
                   {"tau_im", s.tau.imag()},
                   {"p", s.p},
                   {"shape", to_string(s.shape)},
                   {"local_normalized", s.local_normalized},
                   {"global_normalized", s.global_normalized}});
  json j = {{"samples", r.samples},
            {"seed", c.seed},
            {"violations", r.violations},
            {"min_local_normalized", r.min_local_normalized},
            {"min_global_normalized", r.min_global_normalized},
            {"counterexamples", bad}};
  emit(c, dump(j), out);
  return r.violations == 0 ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"HDG / HRT stability and dispersion lab", "hdglab"};
  app.require_subcommand(1);

  Common common;
  LocalArgs local;
  auto *lm = app.add_subcommand("local-matrix", "Print the element matrix blocks");
  lm->set_help_flag("--help", "Print this help message and exit"); // frees --h for the mesh size
  lm->add_option("--system", local.system)->check(CLI::IsMember({"helmholtz", "maxwell", "hrt"}));
  lm->add_option("--shape", local.shape);
  lm->add_option("--p", local.p);
  lm->add_option("--k", local.k);
  lm->add_option("--tau", local.tau);
  lm->add_option("--h", local.h);
  add_common(lm, common);

  SweepKhArgs skh;
  auto *sk = app.add_subcommand("sweep-kh", "Smallest singular value of A_ii over real kh");
  sk->add_option("--shape", skh.shape);
  sk->add_option("--p", skh.p);
  sk->add_option("--tau", skh.tau);
  sk->add_option("--kh-start", skh.start);
  sk->add_option("--kh-stop", skh.stop);
  sk->add_option("--kh-count", skh.count);
  add_common(sk, common);

  SweepTauArgs stp;
  auto *st = app.add_subcommand("sweep-tau-plane", "Smallest singular value of A_ii over complex tau");
  st->add_option("--shape", stp.shape);
  st->add_option("--p", stp.p);
  st->add_option("--kh", stp.kh);
  st->add_option("--re-start", stp.re_start);
  st->add_option("--re-stop", stp.re_stop);
  st->add_option("--re-count", stp.re_count);
  st->add_option("--im-start", stp.im_start);
  st->add_option("--im-stop", stp.im_stop);
  st->add_option("--im-count", stp.im_count);
  add_common(st, common);

  DispersionArgs dsp;
  auto *ds = app.add_subcommand("dispersion", "Discrete wavenumbers over propagation angles");
  ds->add_option("--method", dsp.method)->check(CLI::IsMember({"hdg", "hrt"}));
  ds->add_option("--p", dsp.p);
  ds->add_option("--kh", dsp.kh);
  ds->add_option("--tau", dsp.tau);
  ds->add_option("--theta-count", dsp.theta_count);
  ds->add_option("--dim", dsp.dim)->check(CLI::IsMember({1, 2}));
  ds->add_option("--summary", dsp.summary, "Write the error summary JSON here (default stderr)");
  add_common(ds, common);

  OptimalTauArgs opt;
  auto *ot = app.add_subcommand("optimal-tau", "Search tau minimizing the total wavenumber error");
  ot->add_option("--p", opt.p);
  ot->add_option("--kh", opt.kh);
  ot->add_option("--branch", opt.branch)->check(CLI::IsMember({"pos", "neg"}));
  ot->add_option("--n-angles", opt.n_angles);
  add_common(ot, common);

  ConditionArgs cnd;
  auto *cn = app.add_subcommand("condition", "Condition number of the condensed global matrix");
  cn->add_option("--n", cnd.n);
  cn->add_option("--p", cnd.p);
  cn->add_option("--tau", cnd.tau);
  cn->add_option("--k-start", cnd.start);
  cn->add_option("--k-stop", cnd.stop);
  cn->add_option("--k-count", cnd.count);
  add_common(cn, common);

  int samples = 200;
  auto *th = app.add_subcommand("verify-theorem1", "Random unisolvency check");
  th->add_option("--samples", samples);
  add_common(th, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) { // --help
      app.exit(e, out, err);
      return 0;
    }
    err << "hdglab: " << e.what() << "\n" << "run 'hdglab --help' for usage\n";
    return 2;
  }

  try {
    if (*lm) return cmd_local_matrix(local, common, out);
    if (*sk) return cmd_sweep_kh(skh, common, out);
    if (*st) return cmd_sweep_tau(stp, common, out);
    if (*ds) return cmd_dispersion(dsp, common, out, err);
    if (*ot) return cmd_optimal_tau(opt, common, out);
    if (*cn) return cmd_condition(cnd, common, out);
    if (*th) return cmd_theorem1(samples, common, out);
  } catch (const UsageError &e) {
    err << "hdglab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) { // includes UnsupportedConfiguration
    err << "hdglab: " << e.what() << "\n";
    return 2;
  } catch (const LocalSingularityError &e) {
    err << "hdglab: " << e.what() << "\n";
    return 1;
  } catch (const RootNotFound &e) {
    err << "hdglab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace hdglab
