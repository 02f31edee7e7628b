// Copyright 2026 The LHF Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "lhf/core/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lhf/core/error.hpp"

namespace lhf {
namespace {

using Section = std::map<std::string, std::string>;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"constants", {"hbar", "mass", "charge", "light_speed"}},
      {"domain", {"L1", "L2", "M"}},
      {"basis", {"n_max", "N", "G1", "G2", "lattice_cut", "gram_tolerance"}},
      {"dynamics", {"dt", "t_final", "integrator", "sample_every"}},
      {"potential", {"kind", "strength", "p1", "p2", "sigma", "table"}},
  };
  return keys;
}

std::map<std::string, Section> split_sections(std::string_view text) {
  std::map<std::string, Section> out;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') raise(ErrorCode::MalformedConfig, where + ": unterminated section");
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!allowed_keys().contains(current)) raise(ErrorCode::MalformedConfig, where + ": unknown section " + current);
      if (out.contains(current)) raise(ErrorCode::MalformedConfig, where + ": repeated section " + current);
      out[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) raise(ErrorCode::MalformedConfig, where + ": expected key = value");
    if (current.empty()) raise(ErrorCode::MalformedConfig, where + ": key outside a section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty() || value.empty()) raise(ErrorCode::MalformedConfig, where + ": empty key or value");
    if (!allowed_keys().at(current).contains(key)) raise(ErrorCode::MalformedConfig, "unknown key " + current + "." + key);
    if (out[current].contains(key)) raise(ErrorCode::MalformedConfig, "repeated key " + key);
    out[current][key] = value;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section> s) : sections_(std::move(s)) {}

  const std::string* find(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  double real(const std::string& section, const std::string& key, std::optional<double> fallback) const {
    const std::string* v = find(section, key);
    if (!v) {
      if (!fallback) raise(ErrorCode::InvalidValue, key);
      return *fallback;
    }
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size() || !std::isfinite(out))
      raise(ErrorCode::InvalidValue, key);
    return out;
  }

  int integer(const std::string& section, const std::string& key, std::optional<int> fallback) const {
    const std::string* v = find(section, key);
    if (!v) {
      if (!fallback) raise(ErrorCode::InvalidValue, key);
      return *fallback;
    }
    int out = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) raise(ErrorCode::InvalidValue, key);
    return out;
  }

  std::string text(const std::string& section, const std::string& key, const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
  }

 private:
  std::map<std::string, Section> sections_;
};

PotentialSpec read_potential(const Reader& r, const DomainConfig& d, const std::string& base_dir) {
  const std::string kind = r.text("potential", "kind", "zero");
  auto reject_extra = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (r.find("potential", k)) raise(ErrorCode::InvalidValue, k);
  };
  if (kind == "zero") {
    reject_extra({"strength", "p1", "p2", "sigma", "table"});
    return PotentialSpec(ZeroKernel{}, d.L1, d.L2);
  }
  if (kind == "separable-cosine") {
    reject_extra({"sigma", "table"});
    return PotentialSpec(SeparableCosine{r.real("potential", "strength", std::nullopt),
                                         r.integer("potential", "p1", 1), r.integer("potential", "p2", 0)},
                         d.L1, d.L2);
  }
  if (kind == "periodic-gaussian") {
    reject_extra({"p1", "p2", "table"});
    const double sigma = r.real("potential", "sigma", 0.5);
    if (!(sigma > 0.0)) raise(ErrorCode::InvalidValue, "sigma");
    return PotentialSpec(PeriodicGaussian{r.real("potential", "strength", std::nullopt), sigma}, d.L1, d.L2);
  }
  if (kind == "tabulated") {
    reject_extra({"p1", "p2", "sigma"});
    const std::string* rel = r.find("potential", "table");
    if (!rel) raise(ErrorCode::InvalidValue, "table");
    std::filesystem::path p(*rel);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    MatrixXd table = read_kernel_table(p.string());
    if (r.find("potential", "strength")) table *= r.real("potential", "strength", std::nullopt);
    return PotentialSpec(TabulatedKernel{std::move(table), *rel}, d.L1, d.L2);
  }
  raise(ErrorCode::InvalidValue, "kind");
}

}  // namespace

std::string_view to_string(Scheme s) noexcept {
  return s == Scheme::Rk4 ? "rk4" : "rk4+reorth";
}

SimulationConfig parse_config(std::string_view text, const std::string& base_dir) {
  const Reader r(split_sections(text));
  SimulationConfig cfg;
  cfg.domain.L1 = r.real("domain", "L1", std::nullopt);
  cfg.domain.L2 = r.real("domain", "L2", std::nullopt);
  cfg.domain.M = r.integer("domain", "M", std::nullopt);
  cfg.constants = PhysicalConstants::quantized(r.real("constants", "hbar", 1.0), r.real("constants", "mass", 1.0),
                                               r.real("constants", "charge", 1.0),
                                               r.real("constants", "light_speed", 1.0), cfg.domain);

  cfg.n_max = r.integer("basis", "n_max", std::nullopt);
  cfg.N = r.integer("basis", "N", std::nullopt);
  cfg.G1 = r.integer("basis", "G1", 64);
  cfg.G2 = r.integer("basis", "G2", 64);
  cfg.lattice_cut = r.integer("basis", "lattice_cut", 0);
  cfg.gram_tolerance = r.real("basis", "gram_tolerance", 1e-8);
  if (cfg.n_max < 0) raise(ErrorCode::InvalidValue, "n_max");
  if (cfg.N < 1 || cfg.N > cfg.K()) raise(ErrorCode::InvalidValue, "N");
  if (cfg.G1 < 1) raise(ErrorCode::InvalidValue, "G1");
  if (cfg.G2 < 1) raise(ErrorCode::InvalidValue, "G2");
  if (cfg.lattice_cut < 0) raise(ErrorCode::InvalidValue, "lattice_cut");
  if (!(cfg.gram_tolerance > 0.0)) raise(ErrorCode::InvalidValue, "gram_tolerance");

  cfg.dt = r.real("dynamics", "dt", 1e-3);
  cfg.t_final = r.real("dynamics", "t_final", 1.0);
  cfg.sample_every = r.integer("dynamics", "sample_every", 10);
  const std::string scheme = r.text("dynamics", "integrator", "rk4");
  if (!(cfg.dt > 0.0)) raise(ErrorCode::InvalidValue, "dt");
  if (!(cfg.t_final >= 0.0)) raise(ErrorCode::InvalidValue, "t_final");
  if (cfg.sample_every < 1) raise(ErrorCode::InvalidValue, "sample_every");
  if (scheme == "rk4") cfg.integrator = Scheme::Rk4;
  else if (scheme == "rk4+reorth") cfg.integrator = Scheme::Rk4Reorth;
  else raise(ErrorCode::InvalidValue, "integrator");

  cfg.potential = read_potential(r, cfg.domain, base_dir);
  return cfg;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto parent = std::filesystem::path(path).parent_path();
  return parse_config(ss.str(), parent.empty() ? "." : parent.string());
}

}  // namespace lhf
