#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "tongue_lab/asymptotics.hpp"
#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/guided.hpp"
#include "tongue_lab/rotation.hpp"
#include "tongue_lab/series.hpp"
#include "tongue_lab/tongue.hpp"

namespace tongue_lab {

using Json = nlohmann::json;

/// FamilySpec from {"kind": ..., "fourier": [[k, re, im], ...], "angle_terms": n}.
inline FamilySpec family_from_config(const Json& cfg) {
  if (cfg.is_string()) {
    return family_from_config(Json{{"kind", cfg}});
  }
  if (!cfg.is_object() || !cfg.contains("kind") || !cfg["kind"].is_string()) {
    throw ConfigError("family config needs a string field 'kind'");
  }
  const std::string kind = cfg["kind"].get<std::string>();
  try {
    if (kind == "standard") return FamilySpec::standard();
    if (kind == "blaschke") return FamilySpec::blaschke();
    if (kind == "angle") return FamilySpec::angle(cfg.value("angle_terms", 12));
    if (kind == "fourier") {
      if (!cfg.contains("fourier") || !cfg["fourier"].is_array() || cfg["fourier"].empty()) {
        throw ConfigError("fourier family needs a non-empty 'fourier' list of [k, re, im]");
      }
      std::vector<FourierTerm> terms;
      for (const auto& entry : cfg["fourier"]) {
        if (!entry.is_array() || entry.size() != 3) {
          throw ConfigError("fourier entries must be [k, re, im]");
        }
        terms.push_back({entry[0].get<int>(), {entry[1].get<double>(), entry[2].get<double>()}});
      }
      return FamilySpec::fourier(std::move(terms));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed family config: ") + e.what());
  }
  throw ConfigError("unknown family kind '" + kind + "'");
}

inline Json to_config(const FamilySpec& fam) {
  Json j{{"kind", fam.name()}};
  if (fam.kind() == FamilyKind::Angle) j["angle_terms"] = fam.angle_terms();
  if (fam.kind() == FamilyKind::Fourier) {
    Json terms = Json::array();
    for (const auto& t : fam.fourier_terms()) terms.push_back({t.k, t.c.real(), t.c.imag()});
    j["fourier"] = terms;
  }
  return j;
}

inline void to_json(Json& j, const Enclosure& e) {
  j = Json{{"lo", e.lo}, {"hi", e.hi}, {"iterations", e.iterations}, {"estimate", e.midpoint()}};
}

inline void to_json(Json& j, const ExtremumReport& r) {
  j = Json{{"t", r.t}, {"a", r.a}, {"min_G", r.min_G}, {"argmin", r.argmin}, {"max_G", r.max_G}, {"argmax", r.argmax}};
}

inline void to_json(Json& j, const TongueSample& s) {
  j = Json{{"p", s.p},           {"q", s.q},           {"a", s.a},
           {"t_left", s.t_left}, {"t_right", s.t_right}, {"x_left", s.x_left},
           {"x_right", s.x_right}, {"width", s.width}};
}

inline void to_json(Json& j, const BoundaryWitness& w) {
  j = Json{{"x0", w.x0}, {"g0", w.g0}, {"g1", w.g1}, {"g2", w.g2}};
}

inline void to_json(Json& j, const SlopeReport& r) {
  j = Json{{"p", r.p},
           {"q", r.q},
           {"M_A", r.M_A},
           {"m_A", r.m_A},
           {"mean_phi", r.mean_phi},
           {"slope_minus", r.slope_minus},
           {"slope_plus", r.slope_plus},
           {"angle_geometric", r.angle_geometric},
           {"angle_closed_form", r.angle_closed_form ? Json(*r.angle_closed_form) : Json(nullptr)}};
}

inline void to_json(Json& j, const ContactFit& f) {
  j = Json{{"exponent", f.exponent},
           {"coefficient", f.coefficient},
           {"residual", f.residual},
           {"samples_used", f.samples_used}};
}

inline void to_json(Json& j, const ParabolicData& pd) {
  j = Json{{"multiplier", {pd.multiplier.real(), pd.multiplier.imag()}},
           {"p", pd.p},
           {"q", pd.q},
           {"nu", pd.nu},
           {"C", {pd.C.real(), pd.C.imag()}},
           {"leading_index", pd.leading_index},
           {"scale", pd.scale},
           {"threshold", pd.threshold},
           {"max_rejected", pd.max_rejected}};
}

inline void to_json(Json& j, const SpectrumReport& r) {
  Json coeffs = Json::array();
  for (int k = -r.spectrum.k_max(); k <= r.spectrum.k_max(); ++k) {
    const auto c = r.spectrum[k];
    coeffs.push_back({k, c.real(), c.imag()});
  }
  j = Json{{"n", r.n},
           {"t", r.t},
           {"coeffs", coeffs},
           {"degree_bound_satisfied", r.degree_bound_satisfied},
           {"worst_violation", {{"k", r.worst_k}, {"magnitude", r.worst_magnitude}}},
           {"reality_defect", r.reality_defect}};
}

} // namespace tongue_lab
