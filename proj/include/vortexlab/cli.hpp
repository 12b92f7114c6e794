// Copyright 2026 The vortexlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch for the vortexlab executable. Every command reads JSON,
// writes one artifact (JSON, or CSV for orbits) and reports failures as a
// JSON object on the diagnostic stream.

#pragma once

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vortexlab/io.hpp"

namespace vortexlab {

inline constexpr std::array<const char*, 12> kCommands = {
    "orbit", "drift", "reduce-cesaro", "reduce-fourier", "diophantine", "bpm",
    "bpm-periodic", "fs", "ak-build", "ak-density", "induce", "escape"};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;  // empty: standard output
  int grid = 0;        // 0: the command's default
  long n_max = 0;      // 0: the command's default
  int stages = 2;
  long m1 = 1;
  long m_max = 64;
  std::string ell1 = "1";
  double tau = 1.0;
  long bound = 10;
  double tolerance = 1e-9;
  double radius = 10.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

namespace detail {

inline void require_positive(const RunConfig& c) {
  if (c.grid < 0) throw InputError("--grid must be positive");
  if (c.n_max < 0) throw InputError("--n-max must be positive");
  if (c.stages < 1) throw InputError("--stages must be at least 1");
  if (c.m1 < 1 || c.m_max < 1) throw InputError("--m1 and --m-max must be positive");
  if (!(c.tau >= 0)) throw InputError("--tau must be non-negative");
  if (c.bound < 1) throw InputError("--bound must be positive");
  if (!(c.tolerance > 0)) throw InputError("--tolerance must be positive");
  if (!(c.radius > 0)) throw InputError("--radius must be positive");
  if (c.samples < 1) throw InputError("--samples must be positive");
}

inline Json only_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw InputError(c.command + " takes exactly one --input file");
  return load_json(c.inputs.front());
}

inline int grid_or(const RunConfig& c, int fallback) { return c.grid > 0 ? c.grid : fallback; }
inline long n_or(const RunConfig& c, long fallback) { return c.n_max > 0 ? c.n_max : fallback; }

/// Optional {"start": {"x": angle, "z": [...]}} next to the vortex fields.
template <class V>
State<V> start_state(const V& v, const Json& j) {
  State<V> s{Angle{}, FiberTraits<V>::zero(v)};
  if (!j.contains("start")) return s;
  const Json& st = j["start"];
  if (st.contains("x")) s.x = angle_from_json(st["x"], "start.x");
  if (st.contains("z")) {
    const Vector z = vector_from_json(st["z"], "start.z");
    if constexpr (std::is_same_v<V, RotationVortex>) {
      if (z.size() != 2) throw InputError("start.z: a point of C is [re, im]");
      s.z = Complex(z[0], z[1]);
    } else {
      if (z.size() != v.fiber_dim()) throw InputError("start.z: wrong fiber dimension");
      s.z = z;
    }
  }
  return s;
}

inline std::string cmd_orbit(const RunConfig& c) {
  const Json j = only_input(c);
  const VortexSpec v = vortex_from_json(j);
  const long rows = n_or(c, 16);
  return std::visit([&](const auto& w) { return orbit_csv(w, start_state(w, j), rows); }, v);
}

inline std::string cmd_drift(const RunConfig& c) {
  const VortexSpec v = vortex_from_json(only_input(c));
  const long n = n_or(c, 1L << 14);
  const int grid = grid_or(c, 1 << 12);
  return dump(std::visit([&](const auto& w) { return to_json(drift_estimate(w, n, grid)); }, v));
}

/// Defect of phi_k along k = 1, 2, 4, ..., n_max, next to the exact value
/// sup |rho_k(T x)| / k it equals for a cascade.
inline std::string cmd_reduce_cesaro(const RunConfig& c) {
  const RotationVortex v = require_rotation(vortex_from_json(only_input(c)), "reduce-cesaro");
  const long k_max = n_or(c, 64);
  const int grid = grid_or(c, 1 << 10);
  Json rows = Json::array();
  std::vector<long> ks;
  for (long k = 1; k <= k_max; k *= 2) ks.push_back(k);
  if (ks.back() != k_max) ks.push_back(k_max);
  DefectReport last;
  for (long k : ks) {
    const TrigPolynomial phi = cesaro_sections(v.rho, v.alpha, v.beta, k);
    last = defect(v.rho, phi, v.alpha, v.beta, grid, k);
    const double identity = sup_ratio(v.rho.shifted(v.alpha), v.alpha, v.beta, k, grid);
    rows.push_back({{"k", k}, {"sup_defect", last.sup_defect}, {"sup_rho_k_over_k", identity}});
  }
  return dump({{"grid", grid}, {"tolerance", c.tolerance}, {"defects", rows}, {"last", to_json(last)}});
}

inline std::string cmd_reduce_fourier(const RunConfig& c) {
  const Json j = only_input(c);
  const RotationVortex v = require_rotation(vortex_from_json(j), "reduce-fourier");
  std::optional<long> truncation;
  if (j.contains("truncation")) truncation = integer(j["truncation"], "truncation");
  const FourierSolution sol = fourier_solve(v.rho, v.alpha, v.beta, truncation);
  const int grid = grid_or(c, 1 << 10);
  const double residual = defect(v.rho, sol.phi, v.alpha, v.beta, grid).sup_defect;
  return dump({{"phi", to_json(sol.phi)},
               {"smallest_divisor", sol.smallest_divisor},
               {"smallest_at", sol.smallest_at},
               {"residual", residual},
               {"within_tolerance", residual <= c.tolerance}});
}

inline std::string cmd_diophantine(const RunConfig& c) {
  const VortexSpec v = vortex_from_json(only_input(c));
  const RotationVortex& r = require_rotation(v, "diophantine");
  return dump(to_json(diophantine_scan(r.alpha, r.beta, n_or(c, 10000), c.tau)));
}

/// {"isometry": {...}, "region": {...}}.
inline std::string cmd_bpm(const RunConfig& c) {
  const Json j = only_input(c);
  const EuclideanIsometry iso = isometry_from_json(field(j, "isometry", "input"), "isometry");
  const BoundedRegion u = region_from_json(field(j, "region", "input"), "region");
  if (u.dim() != iso.dim()) throw InputError("region and isometry dimensions differ");
  BpmCertificate cert = bpm(iso, u);
  Json out{{"normal_form", to_json(normal_form(iso))}};
  cert.checks = verify_bpm(cert, iso, u, c.samples, c.seed);
  out.update(to_json(cert));
  return dump(out);
}

/// {"isometries": [...], "next": [...]?, "tube": [region, ...]}.
inline std::string cmd_bpm_periodic(const RunConfig& c) {
  const Json j = only_input(c);
  const FiniteBaseVortex v = finite_vortex_from_json(j);
  const Json& list = field(j, "tube", "input");
  if (!list.is_array()) throw InputError("tube: expected one region per base point");
  std::vector<BoundedRegion> tube;
  for (std::size_t i = 0; i < list.size(); ++i) tube.push_back(region_from_json(list[i], "tube[" + std::to_string(i) + "]"));
  BpmCertificate cert = bpm_periodic(v, tube);
  cert.checks = verify_bpm(cert, v, tube, c.samples, c.seed);
  return dump(to_json(cert));
}

/// Family entries m = m1 .. m_max, or {"q": [...]} from the input.
inline std::string cmd_fs(const RunConfig& c) {
  const int grid = grid_or(c, 10);
  if (!c.inputs.empty()) {
    const Json j = only_input(c);
    std::vector<Integer> qs;
    for (const auto& q : field(j, "q", "input")) qs.push_back(big_integer(q, "q"));
    Json entries = Json::array();
    for (const auto& q : qs) entries.push_back(to_json(fs_entry(q)));
    Json out = to_json(fs_density_scan(qs, grid));
    out["entries"] = entries;
    return dump(out);
  }
  return dump(to_json(fs_density_scan_family(c.m1, c.m_max, grid)));
}

inline std::vector<AkStage> build_stages(const RunConfig& c) {
  return ak_build(parse_decimal(c.ell1), c.m1, c.stages, c.m_max);
}

inline std::string cmd_ak_build(const RunConfig& c) {
  const std::vector<AkStage> stages = build_stages(c);
  Json log = Json::array(), estimates = Json::array();
  for (const auto& st : stages) log.push_back(to_json(st));
  for (std::size_t i = 1; i < stages.size(); ++i) {
    estimates.push_back(to_json(stage_estimate(stages[i - 1], stages[i], grid_or(c, 256))));
  }
  const AkExport ex = ak_export(stages);
  Json out{{"stages", log}, {"estimates", estimates}};
  if (stages.size() >= 2) out["independence"] = to_json(independence_check(stages, c.bound));
  out["export"] = {{"vortex", to_json(ex.vortex)}, {"tail_bound", rational_json(ex.tail_bound)}};
  return dump(out);
}

inline std::string cmd_ak_density(const RunConfig& c) {
  const std::vector<AkStage> stages = build_stages(c);
  Json certs = Json::array();
  for (const auto& st : stages) {
    certs.push_back(to_json(graph_density(st, grid_or(c, 64))));
    certs.push_back(to_json(orbit_density(st, grid_or(c, 64))));
  }
  return dump({{"certificates", certs}});
}

/// {"isometries": [...], "next": [...]?, "subset": [...]}.
inline std::string cmd_induce(const RunConfig& c) {
  const Json j = only_input(c);
  const FiniteBaseVortex v = finite_vortex_from_json(j);
  std::set<std::size_t> subset;
  for (const auto& y : field(j, "subset", "input")) {
    const long i = integer(y, "subset");
    if (i < 0) throw InputError("subset: negative index");
    subset.insert(static_cast<std::size_t>(i));
  }
  return dump(to_json(induced_first_return(v, subset)));
}

inline std::string cmd_escape(const RunConfig& c) {
  const Json j = only_input(c);
  const VortexSpec v = vortex_from_json(j);
  const long n = n_or(c, 10000);
  return dump(std::visit([&](const auto& w) { return to_json(escape_scan(w, start_state(w, j), n, c.radius)); }, v));
}

inline std::string dispatch(const RunConfig& c) {
  const std::string& k = c.command;
  if (k == "orbit") return cmd_orbit(c);
  if (k == "drift") return cmd_drift(c);
  if (k == "reduce-cesaro") return cmd_reduce_cesaro(c);
  if (k == "reduce-fourier") return cmd_reduce_fourier(c);
  if (k == "diophantine") return cmd_diophantine(c);
  if (k == "bpm") return cmd_bpm(c);
  if (k == "bpm-periodic") return cmd_bpm_periodic(c);
  if (k == "fs") return cmd_fs(c);
  if (k == "ak-build") return cmd_ak_build(c);
  if (k == "ak-density") return cmd_ak_density(c);
  if (k == "induce") return cmd_induce(c);
  if (k == "escape") return cmd_escape(c);
  throw InputError("unknown command \"" + k + "\"");
}

}  // namespace detail

inline void report_error(std::ostream& err, const std::string& kind, const std::string& detail) {
  err << Json{{"error", kind}, {"detail", detail}}.dump() << "\n";
}

/// Runs one command. Returns the exit status: 0 on success, 1 for input
/// errors, 2 for property violations and construction failures.
inline int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    detail::require_positive(config);
    const std::string artifact = detail::dispatch(config);
    if (config.output.empty()) {
      out << artifact;
      out.flush();
    } else {
      std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
      if (!file) throw InputError("cannot write " + config.output);
      file << artifact;
      if (!file.flush()) throw InputError("failed writing " + config.output);
    }
    return 0;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return e.exit_code();
  } catch (const Json::exception& e) {
    report_error(err, "input", e.what());
    return 1;
  } catch (const std::bad_alloc&) {
    report_error(err, "resource", "out of memory");
    return 2;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return 2;
  }
}

}  // namespace vortexlab
