#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tongue_lab/asymptotics.hpp"
#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/format.hpp"
#include "tongue_lab/guided.hpp"
#include "tongue_lab/parallel.hpp"
#include "tongue_lab/raster.hpp"
#include "tongue_lab/records.hpp"
#include "tongue_lab/rotation.hpp"
#include "tongue_lab/series.hpp"
#include "tongue_lab/tongue.hpp"

namespace tongue_lab::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(item));
  return out;
}

inline Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw ConfigError("expected p/q, got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw ConfigError("expected p/q, got '" + text + "'");
  }
}

inline Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string normalize_key(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

// Config values become command-line tokens placed before the user's own
// flags; options keep the last value given, so flags override the file.
inline std::vector<std::string> config_tokens(const Json& cfg, const CLI::App& sub) {
  std::vector<std::string> tokens;
  for (const auto& [raw_key, value] : cfg.items()) {
    const std::string key = normalize_key(raw_key);
    if (key == "config") continue;
    if (key == "family" && value.is_object()) {
      if (value.contains("kind")) {
        tokens.push_back("--family");
        tokens.push_back(value["kind"].get<std::string>());
      }
      if (value.contains("angle_terms")) {
        tokens.push_back("--angle-terms");
        tokens.push_back(std::to_string(value["angle_terms"].get<int>()));
      }
      continue;
    }
    const CLI::Option* opt = nullptr;
    try {
      opt = sub.get_option_no_throw("--" + key);
    } catch (const CLI::Error&) {
      opt = nullptr;
    }
    if (opt == nullptr) continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
    } else if (value.is_string()) {
      tokens.push_back(flag);
      tokens.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      tokens.push_back(flag);
      tokens.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      tokens.push_back(flag);
      tokens.push_back(fmt17(value.get<double>()));
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ",";
        joined += item.is_string() ? item.get<std::string>() : fmt17(item.get<double>());
      }
      tokens.push_back(flag);
      tokens.push_back(joined);
    } else {
      throw ConfigError("unsupported value for config key '" + raw_key + "'");
    }
  }
  return tokens;
}

class Output {
public:
  Output(std::ostream& out, bool json) : out_(out), json_(json) {}

  void kv(const std::string& key, double v) { kv_raw(key, fmt17(v), Json(v)); }
  void kv(const std::string& key, long long v) { kv_raw(key, std::to_string(v), Json(v)); }
  void kv(const std::string& key, int v) { kv(key, static_cast<long long>(v)); }
  void kv(const std::string& key, bool v) { kv_raw(key, v ? "true" : "false", Json(v)); }
  void kv(const std::string& key, const std::string& v) { kv_raw(key, v, Json(v)); }
  void record(const Json& j) { record_ = j; has_record_ = true; }

  void flush() {
    if (!json_) return;
    out_ << (has_record_ ? record_ : fields_).dump() << '\n';
  }

private:
  void kv_raw(const std::string& key, const std::string& text, Json value) {
    if (json_) {
      fields_[key] = std::move(value);
    } else {
      out_ << key << '=' << text << '\n';
    }
  }

  std::ostream& out_;
  bool json_;
  Json fields_ = Json::object();
  Json record_;
  bool has_record_ = false;
};

// Writes CSV to `path`, or to `fallback` when the path is empty or "-".
inline void emit_text(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << text;
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

/// Reads CSV with a header naming at least the columns a and width.
inline std::vector<TongueSample> read_trace_csv(const std::string& path, long long p, long long q) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("'" + path + "' is empty");
  const auto header = split(line, ',');
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  if (!col.count("a") || !col.count("width")) throw ConfigError("trace CSV needs columns a and width");
  std::vector<TongueSample> out;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw ConfigError("ragged row in '" + path + "': " + line);
    TongueSample s;
    s.p = p;
    s.q = q;
    s.a = parse_double(cells[col["a"]]);
    s.width = parse_double(cells[col["width"]]);
    if (col.count("t_left")) s.t_left = parse_double(cells[col["t_left"]]);
    if (col.count("t_right")) s.t_right = parse_double(cells[col["t_right"]]);
    out.push_back(s);
  }
  return out;
}

inline std::string trace_csv(const std::vector<TongueSample>& samples) {
  std::ostringstream os;
  os << "a,t_left,t_right,width\n";
  for (const auto& s : samples) {
    const double row[] = {s.a, s.t_left, s.t_right, s.width};
    write_csv_row(os, row);
  }
  return os.str();
}

inline std::string width_fit_csv(const std::vector<TongueSample>& samples) {
  std::ostringstream os;
  os << "a,width,log_a,log_width\n";
  for (const auto& s : samples) {
    const double row[] = {s.a, s.width, std::log(std::fabs(s.a)), std::log(s.width)};
    write_csv_row(os, row);
  }
  return os.str();
}

inline GuideKind parse_guide(const std::string& name) {
  if (name == "standard") return GuideKind::Standard;
  if (name == "blaschke") return GuideKind::Blaschke;
  throw ConfigError("unknown guide '" + name + "' (expected standard or blaschke)");
}

} // namespace detail

/// Entry point of the tongue-lab command. Returns 0 on success, 2 on usage
/// errors and 3 when a computation fails; errors go to `err` as
/// "error: <Name>: <message>".
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);

  // common options, shared by every subcommand
  std::string family_kind = "standard";
  int angle_terms = 12;
  std::string config_path;
  unsigned threads = 0;
  bool json = false;

  // per-command values
  double t = 0.0, a = 0.0, t_lo = 0.0, t_hi = 1.0, a_lo = 0.0, a_hi = 0.15, tol = 1e-6;
  long long n = 0, p = 0, q = 1, big_n = 2000;
  int steps = 200, grid = 1024, count = 6, order = 32, k_max = 0, width_px = 800, height_px = 400;
  int profile_grid = 101;
  std::string output, csv_path, input, a_values, guide = "standard", mode = "gray", tongues = "0/1,1/3,1/2,2/3";
  bool witness = false, iterate = false;

  CLI::App app{"Translation numbers, Arnold tongues and parabolic data of circle-map families", "tongue-lab"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto add_common = [&](CLI::App* sub, bool needs_family) {
    if (needs_family) {
      sub->add_option("--family", family_kind, "standard | blaschke | angle | fourier")->capture_default_str();
      sub->add_option("--angle-terms", angle_terms, "terms kept in the angle family")->capture_default_str();
    }
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_option("--threads", threads, "worker threads (default: TONGUE_LAB_THREADS)");
    sub->add_flag("--json", json, "print a JSON record instead of key=value lines");
  };

  auto* trans = app.add_subcommand("trans", "certified translation number enclosure");
  add_common(trans, true);
  trans->add_option("--t", t)->required();
  trans->add_option("--a", a)->required();
  trans->add_option("--n", n, "iterations (default 100000)");

  auto* stair = app.add_subcommand("staircase", "translation number along t at fixed a (CSV t,trans)");
  add_common(stair, true);
  stair->add_option("--a", a)->required();
  stair->add_option("--t-lo", t_lo)->capture_default_str();
  stair->add_option("--t-hi", t_hi)->capture_default_str();
  stair->add_option("--steps", steps)->capture_default_str();
  stair->add_option("--n", n, "iterations per point (default 100000)");
  stair->add_option("--output", output, "CSV file (default stdout)");

  auto* boundary = app.add_subcommand("boundary", "tongue boundaries at one a");
  add_common(boundary, true);
  boundary->add_option("--p", p)->required();
  boundary->add_option("--q", q)->required();
  boundary->add_option("--a", a)->required();
  boundary->add_option("--grid", grid)->capture_default_str();
  boundary->add_flag("--witness", witness, "also report the double fixed points");

  auto* trace = app.add_subcommand("trace", "tongue boundaries along a list of a (CSV a,t_left,t_right,width)");
  add_common(trace, true);
  trace->add_option("--p", p)->required();
  trace->add_option("--q", q)->required();
  trace->add_option("--a-values", a_values, "comma separated, increasing");
  trace->add_option("--a-lo", a_lo)->capture_default_str();
  trace->add_option("--a-hi", a_hi)->capture_default_str();
  trace->add_option("--count", count, "equally spaced samples when --a-values is absent")->capture_default_str();
  trace->add_option("--grid", grid)->capture_default_str();
  trace->add_option("--output", output, "CSV file (default stdout)");

  auto* slope = app.add_subcommand("slopes", "first-order opening of a tongue at a = 0");
  add_common(slope, true);
  slope->add_option("--p", p)->required();
  slope->add_option("--q", q)->required();

  auto* fit = app.add_subcommand("width-fit", "power law fit of tongue widths");
  add_common(fit, true);
  fit->add_option("--p", p)->required();
  fit->add_option("--q", q)->required();
  fit->add_option("--a-values", a_values, "comma separated a ladder (default: automatic)");
  fit->add_option("--input", input, "trace CSV to fit instead of solving");
  fit->add_option("--csv", csv_path, "write a,width,log_a,log_width here ('-' for stdout)");

  auto* series = app.add_subcommand("series", "Taylor coefficients of a guiding map (CSV k,re,im)");
  add_common(series, false);
  series->add_option("--guide", guide, "standard | blaschke")->capture_default_str();
  series->add_option("--p", p)->required();
  series->add_option("--q", q)->required();
  series->add_option("--order", order)->capture_default_str();
  series->add_flag("--iterate", iterate, "print the q-fold composition instead");
  series->add_option("--output", output, "CSV file (default stdout)");

  auto* para = app.add_subcommand("parabolic", "parabolic multiplicity and leading coefficient");
  add_common(para, false);
  para->add_option("--guide", guide, "standard | blaschke")->capture_default_str();
  para->add_option("--p", p)->required();
  para->add_option("--q", q)->required();
  para->add_option("--order", order)->capture_default_str();

  auto* degree = app.add_subcommand("degree-check", "Fourier degree of the order-n coefficient in a");
  add_common(degree, true);
  degree->add_option("--t", t)->capture_default_str();
  degree->add_option("--n", n, "order in a (default 1)");
  degree->add_option("--tol", tol)->capture_default_str();
  degree->add_option("--k-max", k_max, "largest frequency analysed (default 2n+4)");
  degree->add_option("--csv", csv_path, "write k,|c_k| here ('-' for stdout)");

  auto* rend = app.add_subcommand("render", "parameter-plane raster as binary PGM");
  add_common(rend, true);
  rend->add_option("--t-lo", t_lo)->capture_default_str();
  rend->add_option("--t-hi", t_hi)->capture_default_str();
  rend->add_option("--a-lo", a_lo)->capture_default_str();
  rend->add_option("--a-hi", a_hi)->capture_default_str();
  rend->add_option("--width", width_px)->capture_default_str();
  rend->add_option("--height", height_px)->capture_default_str();
  rend->add_option("--n", n, "iterations per pixel in gray mode (default 30000)");
  rend->add_option("--mode", mode, "gray | mask")->capture_default_str();
  rend->add_option("--tongues", tongues, "p/q list for mask mode")->capture_default_str();
  rend->add_option("--output", output, "PGM file")->required();

  auto* prof = app.add_subcommand("profile", "semiconjugacy averages Phi_N (CSV x,phi)");
  add_common(prof, true);
  prof->add_option("--t", t)->required();
  prof->add_option("--a", a)->required();
  prof->add_option("--N", big_n, "number of averaged iterates")->capture_default_str();
  prof->add_option("--grid", profile_grid)->capture_default_str();
  prof->add_option("--output", output, "CSV file (default stdout)");

  bool n_given = false;

  try {
    // locate --config and the subcommand before the real parse
    std::string cfg_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) cfg_path = args[i + 1];
      if (args[i].rfind("--config=", 0) == 0) cfg_path = args[i].substr(9);
    }
    Json cfg = Json::object();
    if (!cfg_path.empty()) cfg = detail::load_config(cfg_path);

    std::vector<std::string> final_args = args;
    for (std::size_t i = 0; i < args.size(); ++i) {
      CLI::App* sub = nullptr;
      try {
        sub = app.get_subcommand(args[i]);
      } catch (const CLI::OptionNotFound&) {
        sub = nullptr;
      }
      if (sub != nullptr) {
        const auto tokens = detail::config_tokens(cfg, *sub);
        final_args.insert(final_args.begin() + static_cast<std::ptrdiff_t>(i) + 1, tokens.begin(), tokens.end());
        break;
      }
    }
    std::vector<std::string> reversed(final_args.rbegin(), final_args.rend());
    app.parse(reversed);

    CLI::App* chosen = app.get_subcommands().front();
    const std::string cmd = chosen->get_name();
    if (auto* opt = chosen->get_option_no_throw("--n"); opt != nullptr && opt->count() > 0) n_given = true;
    const unsigned fallback_threads = cmd == "render" ? hardware_threads() : 1u;
    const unsigned workers = threads > 0 ? threads : default_threads(fallback_threads);

    auto family = [&] {
      Json fam_cfg = cfg.contains("family") && cfg["family"].is_object() ? cfg["family"] : Json::object();
      fam_cfg["kind"] = family_kind;
      fam_cfg["angle_terms"] = angle_terms;
      return family_from_config(fam_cfg);
    };
    detail::Output o(out, json);

    if (cmd == "trans") {
      const auto fam = family();
      const auto e = trans_enclosure(fam, {t, a}, n_given ? n : 100000);
      o.kv("lo", e.lo);
      o.kv("hi", e.hi);
      o.kv("estimate", e.midpoint());
      o.kv("iterations", e.iterations);
    } else if (cmd == "staircase") {
      const auto fam = family();
      const auto rows = staircase(fam, a, t_lo, t_hi, steps, n_given ? n : 100000, workers);
      std::ostringstream os;
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{"t", r.t}, {"trans", r.trans}});
        os << arr.dump() << '\n';
      } else {
        os << "t,trans\n";
        for (const auto& r : rows) {
          const double row[] = {r.t, r.trans};
          write_csv_row(os, row);
        }
      }
      detail::emit_text(output, out, os.str());
      return 0;
    } else if (cmd == "boundary") {
      const auto fam = family();
      TongueOptions opts;
      opts.grid = grid;
      const auto s = boundary_at(fam, p, q, a, opts);
      Json rec = s;
      if (!json) {
        o.kv("p", s.p);
        o.kv("q", s.q);
        o.kv("a", s.a);
        o.kv("t_left", s.t_left);
        o.kv("t_right", s.t_right);
        o.kv("x_left", s.x_left);
        o.kv("x_right", s.x_right);
        o.kv("width", s.width);
      }
      if (witness) {
        const auto wl = boundary_witness(fam, p, q, s, BoundarySide::Left);
        const auto wr = boundary_witness(fam, p, q, s, BoundarySide::Right);
        rec["witness_left"] = wl;
        rec["witness_right"] = wr;
        if (!json) {
          for (const auto& [side, w] : {std::pair{"left", wl}, std::pair{"right", wr}}) {
            const std::string pre = std::string("witness_") + side + "_";
            o.kv(pre + "x0", w.x0);
            o.kv(pre + "g0", w.g0);
            o.kv(pre + "g1", w.g1);
            o.kv(pre + "g2", w.g2);
          }
        }
      }
      o.record(rec);
    } else if (cmd == "trace") {
      const auto fam = family();
      std::vector<double> as;
      if (!a_values.empty()) {
        as = detail::parse_list(a_values);
      } else {
        if (count < 1) throw ConfigError("--count must be positive");
        for (int i = 0; i < count; ++i) {
          as.push_back(count == 1 ? a_lo : a_lo + (a_hi - a_lo) * i / (count - 1));
        }
      }
      TongueOptions opts;
      opts.grid = grid;
      const auto samples = trace_boundary(fam, p, q, as, opts, workers);
      detail::emit_text(output, out, json ? Json(samples).dump() + "\n" : detail::trace_csv(samples));
      return 0;
    } else if (cmd == "slopes") {
      const auto r = slopes(family(), p, q);
      o.kv("M_A", r.M_A);
      o.kv("m_A", r.m_A);
      o.kv("mean_phi", r.mean_phi);
      o.kv("slope_minus", r.slope_minus);
      o.kv("slope_plus", r.slope_plus);
      o.kv("angle_geometric", r.angle_geometric);
      if (r.angle_closed_form) {
        o.kv("angle_closed_form", *r.angle_closed_form);
      } else {
        o.kv("angle_closed_form", std::string("undefined"));
      }
      o.record(r);
    } else if (cmd == "width-fit") {
      require_coprime(p, q);
      std::vector<TongueSample> samples;
      if (!input.empty()) {
        samples = detail::read_trace_csv(input, p, q);
      } else {
        const auto fam = family();
        const auto as = a_values.empty() ? default_ladder(fam, p, q) : detail::parse_list(a_values);
        samples = trace_boundary(fam, p, q, as, {}, workers);
      }
      const auto f = fit_contact(samples);
      if (!csv_path.empty()) detail::emit_text(csv_path, out, detail::width_fit_csv(samples));
      o.kv("exponent", f.exponent);
      o.kv("coefficient", f.coefficient);
      o.kv("residual", f.residual);
      o.kv("samples_used", f.samples_used);
      o.record(f);
    } else if (cmd == "series") {
      auto s = guide_series(detail::parse_guide(guide), p, q, order);
      if (iterate) s = series_iterate(s, q);
      std::ostringstream os;
      if (json) {
        Json arr = Json::array();
        for (int k = 0; k <= s.order(); ++k) arr.push_back({k, s[k].real(), s[k].imag()});
        os << arr.dump() << '\n';
      } else {
        os << "k,re,im\n";
        for (int k = 0; k <= s.order(); ++k) os << k << ',' << fmt17(s[k].real()) << ',' << fmt17(s[k].imag()) << '\n';
      }
      detail::emit_text(output, out, os.str());
      return 0;
    } else if (cmd == "parabolic") {
      const auto pd = parabolic_data(guide_series(detail::parse_guide(guide), p, q, order), q);
      o.kv("nu", pd.nu);
      o.kv("C_re", pd.C.real());
      o.kv("C_im", pd.C.imag());
      o.kv("C_abs", std::abs(pd.C));
      o.kv("leading_index", pd.leading_index);
      o.kv("multiplier_re", pd.multiplier.real());
      o.kv("multiplier_im", pd.multiplier.imag());
      o.kv("zero_scale", pd.scale);
      o.kv("zero_max_rejected", pd.max_rejected);
      Json rec = pd;
      if (pd.nu == 1) {
        const double wc = width_coefficient(pd);
        o.kv("width_coefficient", wc);
        rec["width_coefficient"] = wc;
      }
      o.record(rec);
    } else if (cmd == "degree-check") {
      const auto fam = family();
      const int order_n = static_cast<int>(n_given ? n : 1);
      const auto r = degree_check(fam, t, order_n, tol, k_max);
      if (!csv_path.empty()) {
        std::ostringstream os;
        os << "k,|c_k|\n";
        for (int k = -r.spectrum.k_max(); k <= r.spectrum.k_max(); ++k) {
          os << k << ',' << fmt17(std::abs(r.spectrum[k])) << '\n';
        }
        detail::emit_text(csv_path, out, os.str());
      }
      o.kv("n", r.n);
      o.kv("degree_bound_satisfied", r.degree_bound_satisfied);
      o.kv("worst_k", r.worst_k);
      o.kv("worst_magnitude", r.worst_magnitude);
      o.kv("reality_defect", r.reality_defect);
      o.record(r);
    } else if (cmd == "render") {
      RasterConfig rc;
      rc.family = family();
      rc.t_lo = t_lo;
      rc.t_hi = t_hi;
      rc.a_lo = a_lo;
      rc.a_hi = a_hi;
      rc.width = width_px;
      rc.height = height_px;
      rc.iterations = n_given ? n : 30000;
      rc.threads = workers;
      if (mode == "gray") {
        rc.mode = RasterMode::TransGray;
      } else if (mode == "mask") {
        rc.mode = RasterMode::TongueMask;
        for (const auto& item : detail::split(tongues, ',')) rc.tongues.push_back(detail::parse_fraction(item));
      } else {
        throw ConfigError("unknown render mode '" + mode + "' (expected gray or mask)");
      }
      const auto img = render(rc);
      for (int r : img.skipped_rows) {
        err << "warning: row " << r << " (a = " << fmt17(raster_a(rc, r)) << ") outside the family range, skipped\n";
      }
      detail::emit_text(output, out, encode_pgm(img));
      o.kv("output", output);
      o.kv("width", img.width);
      o.kv("height", img.height);
      o.kv("skipped_rows", static_cast<long long>(img.skipped_rows.size()));
    } else if (cmd == "profile") {
      const auto rows = semiconjugacy_profile(family(), {t, a}, big_n, profile_grid, workers);
      std::ostringstream os;
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{"x", r.x}, {"phi", r.phi}});
        os << arr.dump() << '\n';
      } else {
        os << "x,phi\n";
        for (const auto& r : rows) {
          const double row[] = {r.x, r.phi};
          write_csv_row(os, row);
        }
      }
      detail::emit_text(output, out, os.str());
      return 0;
    }
    o.flush();
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return e.category() == ErrorCategory::Usage ? 2 : 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ConfigError: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << '\n';
    return 3;
  }
}

} // namespace tongue_lab::cli
