#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsieve/endo/endo.hpp"
#include "gsieve/sieve/surface.hpp"

namespace gsieve {

/// Parameters of one run. Polynomial coefficient lists are written highest degree first.
struct PipelineConfig {
  std::uint32_t p = 0;
  std::vector<std::int64_t> curve;  // a1 a2 a3 a4 a6
  std::vector<std::int64_t> beta_xnum, beta_xden, beta_ynum, beta_yden;
  std::int64_t beta_trace = 0, beta_norm = 0;
  QuadEndo phi, alpha, iso_I, beta{0, 1};
  std::pair<std::int64_t, std::int64_t> a, b;
  int kappa = 2;
  std::vector<NSClass> classes;
  bool translations = true;
  std::size_t target_rank = 0;  // 0: number of columns minus one
  std::uint64_t seed = 20240611;
  std::string ell;
  // verification target: place (h, y + ypart) on the A side and the expected log
  std::vector<std::int64_t> verify_h, verify_y;
  std::string verify_exponent;
  // orbit identity check: a rational place (x + c0, y + c1)
  std::vector<std::int64_t> orbit_check_h, orbit_check_y;
  std::vector<int> orbit_check_k;
  // expected Frobenius translation points, compared but never imposed
  std::optional<std::pair<std::int64_t, std::int64_t>> expect_F1, expect_F2;
};

namespace detail {

inline std::vector<std::int64_t> parse_ints(const std::string& v, const std::string& key) {
  std::istringstream is(v);
  std::vector<std::int64_t> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + key + "': not an integer list: " + v);
    }
  }
  return out;
}

inline QuadEndo parse_endo(const std::string& v, const std::string& key) {
  auto x = parse_ints(v, key);
  if (x.size() != 2) throw std::invalid_argument("config: key '" + key + "' needs two integers u v (u + v*beta)");
  return {x[0], x[1]};
}

inline std::pair<std::int64_t, std::int64_t> parse_point(const std::string& v, const std::string& key) {
  auto x = parse_ints(v, key);
  if (x.size() != 2) throw std::invalid_argument("config: key '" + key + "' needs two integers x y");
  return {x[0], x[1]};
}

/// "(1,0,0) (2,2,1) ..." with xi an integer.
inline std::vector<NSClass> parse_classes(const std::string& v) {
  std::vector<NSClass> out;
  std::regex re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  auto begin = std::sregex_iterator(v.begin(), v.end(), re);
  std::string rest = std::regex_replace(v, re, "");
  if (rest.find_first_not_of(" \t,") != std::string::npos) throw std::invalid_argument("config: bad class list: " + v);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    out.push_back({std::stol((*it)[1]), std::stol((*it)[2]), {std::stol((*it)[3]), 0}});
  }
  return out;
}

inline bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw std::invalid_argument("config: key '" + key + "' expects on/off");
}

}  // namespace detail

/// Parse "key = value" lines; '#' starts a comment.
inline PipelineConfig parse_config(std::istream& in) {
  PipelineConfig c;
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      const char* ws = " \t\r";
      s.erase(0, s.find_first_not_of(ws));
      s.erase(s.find_last_not_of(ws) + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw std::invalid_argument("config: line " + std::to_string(lineno) + ": expected key = value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (kv.count(k)) throw std::invalid_argument("config: duplicate key '" + k + "'");
    kv[k] = v;
  }
  auto need = [&](const std::string& k) -> const std::string& {
    auto it = kv.find(k);
    if (it == kv.end()) throw std::invalid_argument("config: missing key '" + k + "'");
    return it->second;
  };
  using namespace detail;
  auto pv = parse_ints(need("p"), "p");
  if (pv.size() != 1 || pv[0] < 3) throw std::invalid_argument("config: p must be an odd prime");
  c.p = static_cast<std::uint32_t>(pv[0]);
  c.curve = parse_ints(need("curve"), "curve");
  if (c.curve.size() != 5) throw std::invalid_argument("config: curve needs a1 a2 a3 a4 a6");
  c.beta_xnum = parse_ints(need("beta.xnum"), "beta.xnum");
  c.beta_xden = parse_ints(need("beta.xden"), "beta.xden");
  c.beta_ynum = parse_ints(need("beta.ynum"), "beta.ynum");
  c.beta_yden = parse_ints(need("beta.yden"), "beta.yden");
  c.beta_trace = parse_ints(need("beta.trace"), "beta.trace").at(0);
  c.beta_norm = parse_ints(need("beta.norm"), "beta.norm").at(0);
  c.phi = parse_endo(need("phi"), "phi");
  c.alpha = parse_endo(need("alpha"), "alpha");
  c.iso_I = parse_endo(need("I"), "I");
  if (kv.count("beta")) c.beta = parse_endo(kv["beta"], "beta");
  c.a = parse_point(need("a"), "a");
  c.b = parse_point(need("b"), "b");
  if (kv.count("kappa")) c.kappa = static_cast<int>(parse_ints(kv["kappa"], "kappa").at(0));
  c.classes = parse_classes(need("classes"));
  if (kv.count("translations")) c.translations = parse_bool(kv["translations"], "translations");
  if (kv.count("target_rank")) c.target_rank = static_cast<std::size_t>(parse_ints(kv["target_rank"], "target_rank").at(0));
  if (kv.count("seed")) c.seed = static_cast<std::uint64_t>(parse_ints(kv["seed"], "seed").at(0));
  c.ell = need("ell");
  if (kv.count("verify.h")) {
    c.verify_h = parse_ints(kv["verify.h"], "verify.h");
    c.verify_y = parse_ints(need("verify.y"), "verify.y");
    c.verify_exponent = need("verify.exponent");
  }
  if (kv.count("orbit_check.h")) {
    c.orbit_check_h = parse_ints(kv["orbit_check.h"], "orbit_check.h");
    c.orbit_check_y = parse_ints(need("orbit_check.y"), "orbit_check.y");
    for (auto k : parse_ints(need("orbit_check.k"), "orbit_check.k")) c.orbit_check_k.push_back(static_cast<int>(k));
  }
  if (kv.count("expect.F1")) c.expect_F1 = parse_point(kv["expect.F1"], "expect.F1");
  if (kv.count("expect.F2")) c.expect_F2 = parse_point(kv["expect.F2"], "expect.F2");
  return c;
}

inline PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  return parse_config(in);
}

}  // namespace gsieve
