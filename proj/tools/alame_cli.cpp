// Command-line front end: band-edge spectra of the associated Lame operator,
// independent verification (Schrodinger residual + Hill discriminant),
// discriminant scans, and potential sampling.
//
// Exit codes: 0 success, 2 inadmissible parameters, 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alame/fixtures.hpp"
#include "alame/spectra.hpp"
#include "alame/verify.hpp"

using json = nlohmann::json;
using namespace alame;

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string m_str, l_str;
  double k2 = 0.5;
  std::string format = "json";
  int grid = 2001;
  double residual_tol = 1e-6;
  double edge_tol = 1e-6;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
  cmd->add_option("--m", o.m_str, "parameter m (integer or p/2 rational, e.g. 3/2)");
  cmd->add_option("--l", o.l_str, "parameter l (integer or p/2 rational)");
  cmd->add_option("--k2", o.k2, "elliptic modulus squared, in (0,1)");
  if (with_format)
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--grid", o.grid, "residual grid size (>= 101)");
  cmd->add_option("--tol", o.residual_tol, "residual acceptance threshold");
  cmd->add_option("--edge-tol", o.edge_tol, "band-edge classification tolerance on |delta|-2");
  cmd->add_option("--config", o.config_path, "JSON config file (flags win on conflict)");
}

// Merge values from --config for any flag the user did not pass explicitly.
void apply_config(CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw std::invalid_argument("config: cannot open " + o.config_path);
  json cfg = json::parse(in);
  const auto unset = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() == 0;
  };
  const auto as_str = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (cfg.contains("m") && unset("--m")) o.m_str = as_str(cfg["m"]);
  if (cfg.contains("l") && unset("--l")) o.l_str = as_str(cfg["l"]);
  if (cfg.contains("k2") && unset("--k2")) o.k2 = cfg["k2"].get<double>();
  if (cfg.contains("format") && unset("--format")) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("grid") && unset("--grid")) o.grid = cfg["grid"].get<int>();
  if (cfg.contains("tol") && unset("--tol")) o.residual_tol = cfg["tol"].get<double>();
  if (cfg.contains("edge-tol") && unset("--edge-tol")) o.edge_tol = cfg["edge-tol"].get<double>();
}

LameParameters parse_params(const CommonOpts& o) {
  if (o.m_str.empty() || o.l_str.empty())
    throw std::invalid_argument("--m and --l are required");
  return LameParameters::create(HalfInt::parse(o.m_str), HalfInt::parse(o.l_str));
}

struct StateReport {
  int label;
  double energy;
  int degeneracy;
  char family;
  std::string classification;
  double residual;
};

std::vector<StateReport> build_reports(const SpectrumResult& spec,
                                       const CommonOpts& o) {
  const auto classes = classify_spectrum(spec, o.edge_tol);
  std::vector<StateReport> reports;
  for (size_t i = 0; i < spec.states.size(); ++i) {
    const auto& st = spec.states[i];
    double res = 0.0;
    for (const auto& s : st.wave_samplers) {
      const WaveFn fn = [s](long double x) { return s(x); };
      res = std::max(res, schrodinger_residual(fn, st.energy, spec.params,
                                               spec.modulus, o.grid));
    }
    reports.push_back({st.label, st.energy, st.degeneracy,
                       family_id(st.family), to_string(classes[i]), res});
    if (st.coincident_energy)
      std::cerr << "note: state " << st.label
                << " energy coincides with another family's to 1e-10\n";
    if (st.pair_collapsed)
      std::cerr << "note: state " << st.label
                << " degenerate pair collapsed to a single function\n";
  }
  return reports;
}

void emit(const std::vector<StateReport>& reports, const SpectrumResult& spec,
          const CommonOpts& o, json extra = json::object()) {
  if (o.format == "csv") {
    std::cout << "label,energy,degeneracy,family,classification,residual\n";
    for (const auto& r : reports)
      std::cout << r.label << ',' << g17(r.energy) << ',' << r.degeneracy << ','
                << r.family << ',' << r.classification << ',' << g17(r.residual)
                << '\n';
    return;
  }
  json out;
  out["m"] = spec.params.m.str();
  out["l"] = spec.params.l.str();
  out["k2"] = spec.modulus.k2;
  out["states"] = json::array();
  for (const auto& r : reports) {
    out["states"].push_back({{"label", r.label},
                             {"energy", r.energy},
                             {"degeneracy", r.degeneracy},
                             {"family", std::string(1, r.family)},
                             {"classification", r.classification},
                             {"residual", r.residual}});
  }
  for (auto& [k, v] : extra.items()) out[k] = v;
  std::cout << out.dump(2) << '\n';
}

int run_spectrum(const CommonOpts& o) {
  const LameParameters params = parse_params(o);
  const EllipticModulus mod = EllipticModulus::from_k2(o.k2);
  const SpectrumResult spec = band_edge_spectrum(params, mod);
  const auto reports = build_reports(spec, o);
  emit(reports, spec, o);
  for (const auto& r : reports)
    if (r.residual > o.residual_tol) return 3;
  return 0;
}

int run_verify(const CommonOpts& o, bool against_fixtures) {
  const LameParameters params = parse_params(o);
  const EllipticModulus mod = EllipticModulus::from_k2(o.k2);
  const SpectrumResult spec = band_edge_spectrum(params, mod);
  const auto reports = build_reports(spec, o);

  json extra = json::object();
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.residual <= o.residual_tol;

  if (against_fixtures) {
    if (!has_fixture(params))
      throw std::invalid_argument("no fixture for (m,l) = (" + params.m.str() +
                                  "," + params.l.str() + ")");
    const Fixture fx = fixture_for(params);
    // Match each fixture level to the nearest computed energy.
    json fxrep = json::array();
    for (size_t lv = 0; lv < fx.levels.size(); ++lv) {
      const double e_ref = fx.levels[lv].energy(o.k2);
      double best = 1e300;
      const BandEdgeState* match = nullptr;
      for (const auto& st : spec.states)
        if (std::abs(st.energy - e_ref) < best) {
          best = std::abs(st.energy - e_ref);
          match = &st;
        }
      const double rel = best / std::max(1.0, std::abs(e_ref));
      ok = ok && rel < 1e-10;
      fxrep.push_back({{"level", lv},
                       {"reference_energy", e_ref},
                       {"energy_deviation", best},
                       {"matched_label", match ? match->label : -1}});
    }
    extra["fixture_comparison"] = fxrep;
  }
  emit(reports, spec, o, extra);
  return ok ? 0 : 3;
}

int run_band_scan(const CommonOpts& o, double emin, double emax, int samples) {
  const LameParameters params = parse_params(o);
  const EllipticModulus mod = EllipticModulus::from_k2(o.k2);
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  std::cout << "energy,delta\n";
  for (int i = 0; i < samples; ++i) {
    const double e = emin + (emax - emin) * i / (samples - 1);
    const DiscriminantSample d = hill_discriminant(e, params, mod, 1e-11);
    std::cout << g17(d.energy) << ',' << g17(d.delta) << '\n';
  }
  return 0;
}

int run_potential(const CommonOpts& o, int samples) {
  const LameParameters params = parse_params(o);
  const EllipticModulus mod = EllipticModulus::from_k2(o.k2);
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  std::cout << "x,V\n";
  for (int i = 0; i < samples; ++i) {
    const double x = 2.0 * mod.quarter_period * i / (samples - 1);
    std::cout << g17(x) << ',' << g17(lame_potential(x, params, mod)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band-edge spectra of the associated Lame operator"};
  app.require_subcommand(1);

  CommonOpts so, vo, bo, po;
  auto* spectrum = app.add_subcommand("spectrum", "compute and verify the algebraic spectrum");
  add_common(spectrum, so);

  auto* verify = app.add_subcommand("verify", "residual + Floquet verification report");
  add_common(verify, vo);
  bool with_fixtures = false;
  verify->add_flag("--fixtures", with_fixtures, "compare against built-in closed forms");

  auto* scan = app.add_subcommand("band-scan", "Hill discriminant over an energy window (CSV)");
  add_common(scan, bo, false);
  double emin = 0.0, emax = 10.0;
  int scan_samples = 101;
  scan->add_option("--emin", emin, "window lower edge");
  scan->add_option("--emax", emax, "window upper edge");
  scan->add_option("--samples", scan_samples, "number of energy samples");

  auto* pot = app.add_subcommand("potential", "sample V(x) over one period (CSV)");
  add_common(pot, po, false);
  int pot_samples = 201;
  pot->add_option("--samples", pot_samples, "number of x samples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) {
      apply_config(spectrum, so);
      return run_spectrum(so);
    }
    if (verify->parsed()) {
      apply_config(verify, vo);
      return run_verify(vo, with_fixtures);
    }
    if (scan->parsed()) {
      apply_config(scan, bo);
      return run_band_scan(bo, emin, emax, scan_samples);
    }
    if (pot->parsed()) {
      apply_config(pot, po);
      return run_potential(po, pot_samples);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
