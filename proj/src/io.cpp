#include "mck/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mck {

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw std::invalid_argument("config error: " + what);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& tok) {
  const std::string t = trim(tok);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    bad_config("not a number: '" + t + "'");
  return v;
}

Vec parse_array(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    bad_config("expected an array: '" + t + "'");
  std::vector<double> vals;
  std::string inner = t.substr(1, t.size() - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    vals.push_back(parse_number(item));
  }
  Vec out(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) out[i] = vals[i];
  return out;
}

void apply_series_key(TrigSeries<double>& s, const std::string& key,
                      const std::string& value) {
  if (key == "constant")
    s.constant = parse_number(value);
  else if (key == "cos")
    s.cos_coeffs = parse_array(value);
  else if (key == "sin")
    s.sin_coeffs = parse_array(value);
  else
    bad_config("unknown coefficient key '" + key + "'");
}

void apply_tol_key(ToleranceSet& tol, const std::string& key, double v) {
  if (key == "identity")
    tol.identity = v;
  else if (key == "reality")
    tol.reality = v;
  else if (key == "route")
    tol.route = v;
  else if (key == "inclusion")
    tol.inclusion_slack = v;
  else
    bad_config("unknown tolerance key '" + key + "'");
}

void check_caps(const RunConfig& cfg) {
  if (cfg.n_max < 1) bad_config("n_max must be >= 1");
  if (cfg.steps != 0 && cfg.steps < 64) bad_config("steps must be 0 or >= 64");
  const int cap = cfg.degree_cap;
  for (const TrigSeries<double>* s : {&cfg.psi.p, &cfg.psi.q})
    if (s->modes() > cap)
      bad_config("coefficient series exceeds the degree cap (" +
                 std::to_string(cap) + " modes)");
}

}  // namespace

RunConfig parse_config_toml(const std::string& text) {
  RunConfig cfg;
  std::string section;
  std::stringstream ss(text);
  std::string raw;
  while (std::getline(ss, raw)) {
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') bad_config("malformed section: '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "p" && section != "q" && section != "tolerances")
        bad_config("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) bad_config("expected key = value: '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      if (key == "n_max")
        cfg.n_max = static_cast<int>(parse_number(value));
      else if (key == "steps")
        cfg.steps = static_cast<int>(parse_number(value));
      else if (key == "degree_cap")
        cfg.degree_cap = static_cast<int>(parse_number(value));
      else
        bad_config("unknown key '" + key + "'");
    } else if (section == "p") {
      apply_series_key(cfg.psi.p, key, value);
    } else if (section == "q") {
      apply_series_key(cfg.psi.q, key, value);
    } else {
      apply_tol_key(cfg.tol, key, parse_number(value));
    }
  }
  check_caps(cfg);
  return cfg;
}

RunConfig parse_config_json(const std::string& text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_config(std::string("JSON parse failure: ") + e.what());
  }
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "n_max")
      cfg.n_max = value.get<int>();
    else if (key == "steps")
      cfg.steps = value.get<int>();
    else if (key == "degree_cap")
      cfg.degree_cap = value.get<int>();
    else if (key == "p" || key == "q") {
      TrigSeries<double>& s = key == "p" ? cfg.psi.p : cfg.psi.q;
      for (const auto& [k2, v2] : value.items()) {
        if (k2 == "constant")
          s.constant = v2.get<double>();
        else if (k2 == "cos" || k2 == "sin") {
          Vec arr(v2.size());
          for (size_t i = 0; i < v2.size(); ++i) arr[i] = v2[i].get<double>();
          (k2 == "cos" ? s.cos_coeffs : s.sin_coeffs) = arr;
        } else
          bad_config("unknown coefficient key '" + k2 + "'");
      }
    } else if (key == "tolerances") {
      for (const auto& [k2, v2] : value.items())
        apply_tol_key(cfg.tol, k2, v2.get<double>());
    } else
      bad_config("unknown key '" + key + "'");
  }
  check_caps(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool looks_json =
      path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (looks_json || (first != std::string::npos && text[first] == '{'))
    return parse_config_json(text);
  return parse_config_toml(text);
}

std::string format_number(double v) {
  char buf[48];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace mck
