// vortexlab command-line front end: kw, vortex, dolbeault, census, limit, repro.
// Artifact files are deterministic; wall time and content hashes go to the
// side manifest (<out>.manifest.json) only.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "repro.hpp"
#include "vortexlab/census.hpp"
#include "vortexlab/dolbeault.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/kazdan_warner.hpp"
#include "vortexlab/limiting.hpp"
#include "vortexlab/theta.hpp"
#include "vortexlab/vortex.hpp"

using namespace vortexlab;
using nlohmann::json;

namespace {

struct ManifestEntry {
  std::string path;
  std::string hash;
};

int write_artifact(const std::string& path, const std::string& content,
                   std::vector<ManifestEntry>& entries) {
  if (path.empty() || path == "-") {
    std::cout << content;
    entries.push_back({"-", hash_hex(content)});
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << content;
  entries.push_back({path, hash_hex(content)});
  return 0;
}

void write_manifest(const std::string& command, const json& parameters,
                    const std::vector<ManifestEntry>& entries, double wall_seconds,
                    const std::string& out_path) {
  json m;
  m["command"] = command;
  m["parameters"] = parameters;
  m["wall_time_seconds"] = wall_seconds;
  m["artifacts"] = json::array();
  for (const auto& e : entries) m["artifacts"].push_back({{"path", e.path}, {"hash", e.hash}});
  const std::string path =
      (out_path.empty() || out_path == "-") ? "" : out_path + ".manifest.json";
  if (path.empty()) {
    std::cerr << m.dump(2) << "\n";
  } else {
    std::ofstream f(path);
    f << m.dump(2) << "\n";
  }
}

std::array<double, 2> parse_point(const std::string& s) {
  std::array<double, 2> p{0.0, 0.0};
  if (std::sscanf(s.c_str(), "%lf,%lf", &p[0], &p[1]) != 2)
    throw CLI::ValidationError("expected \"x,y\"");
  return p;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated list");
  return out;
}

std::vector<double> decode_real_field(const json& j, const char* key, int n) {
  int fn = 0;
  auto f = real_field_from_blob(base64_decode(j.at(key).get<std::string>()), fn);
  if (fn != n) throw std::runtime_error(std::string(key) + ": grid size mismatch");
  return f;
}

json triple_to_json(const HolomorphicTriple& t, bool with_fields) {
  json j;
  j["n"] = t.n;
  j["d"] = t.d;
  j["m"] = t.m;
  if (with_fields) {
    j["alpha0"] = base64_encode(field_to_blob(t.alpha[0]));
    j["alpha1"] = base64_encode(field_to_blob(t.alpha[1]));
    j["beta0"] = base64_encode(field_to_blob(t.beta[0]));
    j["beta1"] = base64_encode(field_to_blob(t.beta[1]));
  }
  return j;
}

HolomorphicTriple triple_from_json(const TorusGrid& grid, const json& j) {
  std::array<std::vector<std::array<double, 2>>, 2> az, bz;
  auto read_zeros = [&](const char* key, std::array<std::vector<std::array<double, 2>>, 2>& out) {
    if (!j.contains(key)) return;
    const auto& arr = j.at(key);
    for (int c = 0; c < 2 && c < int(arr.size()); ++c)
      for (const auto& pt : arr[c])
        out[c].push_back({pt[0].get<double>(), pt[1].get<double>()});
  };
  read_zeros("alpha_zeros", az);
  read_zeros("beta_zeros", bz);
  return theta_triple(grid, j.at("m").get<int>(), j.at("d").get<int>(), az, bz,
                      j.value("amplitude", 2.5), j.value("truncation", 8));
}

// ---- subcommand bodies ----

int cmd_kw_solve(const std::string& problem_path, double tol, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(problem_path);
  if (!in) {
    std::cerr << "kw solve: cannot open " << problem_path << "\n";
    return 2;
  }
  json jp = json::parse(in);
  const int n = jp.at("n").get<int>();
  TorusGrid grid(n);
  KWProblem prob;
  prob.n = n;
  prob.case_tag = jp.value("case", std::string("lemma")) == "remark" ? KWCase::remark
                                                                     : KWCase::lemma;
  prob.P = decode_real_field(jp, "P", n);
  prob.Q = decode_real_field(jp, "Q", n);
  prob.w = decode_real_field(jp, "w", n);
  const KWSolution sol = solve_kw(grid, prob, tol);

  json js;
  js["n"] = n;
  js["residual_linf"] = sol.residual_linf;
  js["newton_iters"] = sol.newton_iters;
  js["damping_events"] = sol.damping_events;
  js["f"] = base64_encode(real_field_to_blob(n, sol.f));
  js["provenance"] = "computed";
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, js.dump(2) + "\n", entries);
  write_manifest("kw solve",
                 {{"problem", problem_path}, {"tol", tol}, {"n", n}},
                 entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

int cmd_vortex_hk(const std::string& triple_path, double tau, double tol,
                  const std::string& out, bool with_binary) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(triple_path);
  if (!in) {
    std::cerr << "vortex hk: cannot open " << triple_path << "\n";
    return 2;
  }
  json jt = json::parse(in);
  TorusGrid grid(jt.at("n").get<int>());
  const HolomorphicTriple triple = triple_from_json(grid, jt);
  const VortexState s = hk_solve(grid, triple, tau, tol);

  json js;
  js["n"] = triple.n;
  js["d"] = triple.d;
  js["m"] = triple.m;
  js["tau"] = tau;
  js["residuals"] = {s.residuals[0], s.residuals[1], s.residuals[2], s.residuals[3]};
  js["floors"] = {s.floors[0], s.floors[1], s.floors[2], s.floors[3]};
  js["degree_identity_defect"] = s.degree_identity_defect;
  js["kw_newton_iters"] = s.kw.newton_iters;
  js["gauge_sup"] = s.gauge_sup;
  js["provenance"] = "computed";
  if (with_binary) js["state"] = triple_to_json(s.triple, true);
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, js.dump(2) + "\n", entries);
  write_manifest("vortex hk",
                 {{"triple", triple_path}, {"tau", tau}, {"tol", tol}},
                 entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

int cmd_dolbeault_h0(int degree, const std::string& cls, int n, bool as_json,
                     const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  TorusGrid grid(n);
  DolbeaultProblem p(grid, {base_connection_with_class(grid, degree, parse_point(cls))});
  const CohomologyReport rep = h0(p);
  std::string content;
  if (as_json) {
    json j;
    j["n"] = n;
    j["degree"] = degree;
    j["class"] = cls;
    j["h0"] = rep.h0;
    j["h1"] = rep.h1;
    j["index"] = rep.h0 - rep.h1;
    j["gap_ratio"] = rep.gap_ratio;
    j["singular_values"] = rep.singular_values;
    j["provenance"] = "computed";
    content = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "h0 " << rep.h0 << "  h1 " << rep.h1 << "  gap " << rep.gap_ratio << "\n";
    content = os.str();
  }
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, content, entries);
  write_manifest("dolbeault h0", {{"degree", degree}, {"class", cls}, {"n", n}},
                 entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

BundleKind parse_kind(const std::string& k) {
  if (k == "split") return BundleKind::split;
  if (k == "atiyah_E0") return BundleKind::atiyah_e0;
  if (k == "stable_generic") return BundleKind::stable_generic;
  throw CLI::ValidationError("kind must be split|atiyah_E0|stable_generic");
}

ClassFlag parse_class_flag(const std::string& c) {
  if (c == "generic") return ClassFlag::generic;
  if (c == "2-torsion") return ClassFlag::two_torsion;
  if (c == "trivial") return ClassFlag::trivial;
  throw CLI::ValidationError("class must be generic|2-torsion|trivial");
}

int cmd_census(int genus, const std::string& kind, int param, const std::string& cls,
               int d, int sign, const std::string& format, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  BundleSpec s;
  s.genus = genus;
  s.kind = parse_kind(kind);
  s.param = param;
  s.cls = parse_class_flag(cls);
  s.d = d;
  s.sign_of_d_minus_tau = sign;
  const ModuliDescription m = classify(s);
  std::string content;
  if (format == "csv") {
    std::ostringstream os;
    os << "status,dimC,euler,sw,compact,fueter,provenance\n"
       << m.status_string() << ',' << m.dimC << ',' << m.euler << ','
       << (m.sw.defined ? std::to_string(m.sw.value) : m.sw.reason) << ','
       << (m.compact ? "true" : "false") << ',' << (m.fueter_present ? "true" : "false")
       << ',' << m.provenance << "\n";
    content = os.str();
  } else {
    json j;
    j["status"] = m.status_string();
    j["dimC"] = m.dimC;
    j["euler"] = m.euler;
    if (m.sw.defined)
      j["sw"] = m.sw.value;
    else
      j["sw"] = m.sw.reason;
    j["compact"] = m.compact;
    j["fueter_present"] = m.fueter_present;
    j["provenance"] = m.provenance;
    if (!m.note.empty()) j["note"] = m.note;
    content = j.dump(2) + "\n";
  }
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, content, entries);
  write_manifest("census",
                 {{"genus", genus}, {"kind", kind}, {"d", d}, {"sign", sign}},
                 entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

int cmd_census_table(const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, census_table_csv(), entries);
  write_manifest("census table", json::object(), entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

int cmd_limit_sweep(int m, int n, const std::string& tlist, double tau, double ball,
                    int jobs, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m != 1) {
    std::cerr << "limit sweep: only the m = 1 split background drives the demo\n";
    return 2;
  }
  TorusGrid grid(n);
  std::array<std::vector<std::array<double, 2>>, 2> az, bz;
  az[0] = {{0.25, 0.25}};
  bz[1] = {{0.75, 0.75}};
  const HolomorphicTriple triple = theta_triple(grid, 1, 0, az, bz, 2.5);
  const auto records = t_sweep(grid, triple, parse_list(tlist), tau, ball, jobs);

  // prepare the limiting modulus once for the exponent column
  std::vector<double> mod(grid.sites());
  for (int k = 0; k < grid.sites(); ++k) {
    const double am =
        std::sqrt(std::norm(triple.alpha[0].v[k]) + std::norm(triple.alpha[1].v[k]));
    const double bm =
        std::sqrt(std::norm(triple.beta[0].v[k]) + std::norm(triple.beta[1].v[k]));
    mod[k] = std::sqrt(2.0 * am * bm);
  }
  // fit ladder scaled up on coarse grids to stay above the 2h guard
  const double rbase = std::max(0.03, 2.5 * grid.spacing());
  const std::vector<double> radii{rbase, rbase * 4 / 3, rbase * 5 / 3, rbase * 2,
                                  rbase * 8 / 3};

  std::ostringstream os;
  os << "t,zero_id,x,y,q,flux,exponent,kw_iters,residual\n";
  for (const auto& rec : records) {
    for (size_t z = 0; z < rec.zeros.size(); ++z) {
      const double e = vanishing_exponent(grid, mod, {rec.zeros[z].x, rec.zeros[z].y}, radii);
      os << format_double(rec.t) << ',' << z << ',' << format_double(rec.zeros[z].x) << ','
         << format_double(rec.zeros[z].y) << ',' << rec.zeros[z].q << ','
         << format_double(rec.per_zero_flux[z]) << ',' << format_double(e) << ','
         << rec.kw_iters << ',' << format_double(rec.residual) << "\n";
    }
  }
  std::vector<ManifestEntry> entries;
  const int rc = write_artifact(out, os.str(), entries);
  write_manifest("limit sweep",
                 {{"m", m}, {"n", n}, {"t", tlist}, {"tau", tau}, {"ball", ball}},
                 entries,
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(),
                 out);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelian vortex laboratory on the flat torus"};
  app.require_subcommand(1);

  // kw solve
  auto* kw = app.add_subcommand("kw", "Kazdan-Warner solver");
  kw->require_subcommand(1);
  auto* kw_solve_cmd = kw->add_subcommand("solve", "solve Delta f + P e^{2f} - Q e^{-2f} = w");
  std::string kw_problem, kw_out = "-";
  double kw_tol = 1e-10;
  kw_solve_cmd->add_option("--problem", kw_problem, "problem JSON")->required();
  kw_solve_cmd->add_option("--tol", kw_tol, "sup-norm tolerance");
  kw_solve_cmd->add_option("--out", kw_out, "solution JSON path");

  // vortex hk
  auto* vortex = app.add_subcommand("vortex", "vortex system");
  vortex->require_subcommand(1);
  auto* hk = vortex->add_subcommand("hk", "Hitchin-Kobayashi solve");
  std::string hk_triple, hk_out = "-";
  double hk_tau = 0.0, hk_tol = 1e-8;
  bool hk_binary = false;
  hk->add_option("--triple", hk_triple, "triple JSON")->required();
  hk->add_option("--tau", hk_tau, "integral of i eta / 2 pi");
  hk->add_option("--tol", hk_tol, "residual tolerance");
  hk->add_option("--out", hk_out, "state JSON path");
  hk->add_flag("--binary", hk_binary, "embed gauged fields as blobs");

  // dolbeault h0
  auto* dol = app.add_subcommand("dolbeault", "numerical cohomology");
  dol->require_subcommand(1);
  auto* h0cmd = dol->add_subcommand("h0", "kernel and cokernel counts");
  int dol_degree = 0, dol_n = 32;
  std::string dol_class = "0,0", dol_out = "-";
  bool dol_json = false;
  h0cmd->add_option("--degree", dol_degree, "bundle degree")->required();
  h0cmd->add_option("--class", dol_class, "Jacobian class point x,y");
  h0cmd->add_option("--n", dol_n, "grid size");
  h0cmd->add_flag("--json", dol_json, "emit JSON");
  h0cmd->add_option("--out", dol_out, "output path");

  // census
  auto* census = app.add_subcommand("census", "moduli classification");
  int cen_genus = 1, cen_param = 0, cen_d = 0, cen_sign = -1;
  std::string cen_kind = "split", cen_class = "generic", cen_format = "json",
              cen_out = "-";
  census->add_option("--genus", cen_genus, "0, 1, or 2");
  census->add_option("--kind", cen_kind, "split|atiyah_E0|stable_generic");
  census->add_option("--param", cen_param, "k (genus 0) or m (genus 1)");
  census->add_option("--class", cen_class, "generic|2-torsion|trivial");
  census->add_option("--d", cen_d, "deg L");
  census->add_option("--sign", cen_sign, "sign of d - tau");
  census->add_option("--format", cen_format, "json|csv");
  census->add_option("--out", cen_out, "output path");
  auto* table = census->add_subcommand("table", "emit the five-row classification table");
  std::string table_out = "-";
  table->add_option("--out", table_out, "output path");

  // limit sweep
  auto* limit = app.add_subcommand("limit", "limiting configurations");
  limit->require_subcommand(1);
  auto* sweep = limit->add_subcommand("sweep", "concentration sweep in t");
  int sw_m = 1, sw_n = 128, sw_jobs = 1;
  std::string sw_t = "1,0.5,0.25,0.125,0.0625", sw_out = "-";
  double sw_tau = 0.0, sw_ball = 0.1;
  sweep->add_option("--m", sw_m, "background degree (1)");
  sweep->add_option("--n", sw_n, "grid size");
  sweep->add_option("--t", sw_t, "descending t list");
  sweep->add_option("--tau", sw_tau, "perturbation integral");
  sweep->add_option("--ball", sw_ball, "flux ball radius");
  sweep->add_option("--jobs", sw_jobs, "parallel sweep points");
  sweep->add_option("--out", sw_out, "CSV path");

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "acceptance reproductions");
  std::string repro_name = "all";
  repro_cmd->add_option("name", repro_name, "criterion name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (kw_solve_cmd->parsed()) return cmd_kw_solve(kw_problem, kw_tol, kw_out);
    if (hk->parsed()) return cmd_vortex_hk(hk_triple, hk_tau, hk_tol, hk_out, hk_binary);
    if (h0cmd->parsed()) return cmd_dolbeault_h0(dol_degree, dol_class, dol_n, dol_json, dol_out);
    if (table->parsed()) return cmd_census_table(table_out);
    if (census->parsed()) {
      return cmd_census(cen_genus, cen_kind, cen_param, cen_class, cen_d, cen_sign,
                        cen_format, cen_out);
    }
    if (sweep->parsed())
      return cmd_limit_sweep(sw_m, sw_n, sw_t, sw_tau, sw_ball, sw_jobs, sw_out);
    if (repro_cmd->parsed()) {
      const auto names = vortexlab::repro::criterion_names();
      if (repro_name != "all" &&
          std::find(names.begin(), names.end(), repro_name) == names.end()) {
        std::cerr << "unknown criterion '" << repro_name << "'; names:";
        for (const auto& n : names) std::cerr << ' ' << n;
        std::cerr << "\n";
        return 2;
      }
      const auto results = vortexlab::repro::run(repro_name);
      const int rc = vortexlab::repro::report(results);
      if (repro_name == "all") {
        json summary;
        summary["criteria"] = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
          summary["criteria"].push_back({{"name", r.name},
                                         {"pass", r.pass},
                                         {"details", r.details},
                                         {"seconds", r.seconds}});
          all_pass = all_pass && r.pass;
        }
        summary["all_pass"] = all_pass;
        std::ofstream f("repro_summary.json");
        f << summary.dump(2) << "\n";
      }
      return rc;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
