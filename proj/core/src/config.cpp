#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "specbound/harness.hpp"

namespace specbound::harness {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw ConfigError("config: " + msg);
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) {
        known = true;
        break;
      }
    if (!known)
      fail("unknown key \"" + it.key() + "\" in " + where);
  }
}

std::int64_t take_integer(const json& v, const char* key) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail(std::string(key) + " must be an integer");
  return v.get<std::int64_t>();
}

double take_number(const json& v, const char* key) {
  if (!v.is_number()) fail(std::string(key) + " must be a number");
  return v.get<double>();
}

}  // namespace

void Config::validate() const {
  if (trials < 0) fail("trials must be >= 0");
  if (dims.empty()) fail("dims must be nonempty");
  for (int d : dims)
    if (d < 1) fail("dims entries must be >= 1");
  for (double d : delta_grid)
    if (!(d >= 0.0) || !std::isfinite(d))
      fail("delta_grid entries must be finite and >= 0");
  for (double e : epsilon_grid)
    if (!(e > 0.0) || !(e < 1.0))
      fail("epsilon_grid entries must lie in (0, 1)");
  if (n_shift < 2) fail("n_shift must be >= 2");
  if (!(exp_class.a > 0.0) || !std::isfinite(exp_class.a) ||
      !(exp_class.alpha > 0.0) || !std::isfinite(exp_class.alpha) ||
      !(exp_class.m > 0.0) || !std::isfinite(exp_class.m))
    fail("exp_class parameters must be positive and finite");
  if (!(tol.slack > 0.0) || !std::isfinite(tol.slack) || !(tol.rel > 0.0) ||
      !std::isfinite(tol.rel))
    fail("tolerances must be positive and finite");
}

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be a JSON object");
  reject_unknown_keys(root,
                      {"seed", "trials", "dims", "delta_grid", "epsilon_grid",
                       "n_shift", "exp_class", "tol"},
                      "top-level object");

  Config cfg;
  if (root.contains("seed")) {
    const auto& v = root["seed"];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail("seed must be a nonnegative integer");
    cfg.seed = v.get<std::uint64_t>();
  }
  if (root.contains("trials"))
    cfg.trials = static_cast<int>(take_integer(root["trials"], "trials"));
  if (root.contains("dims")) {
    if (!root["dims"].is_array()) fail("dims must be an array of integers");
    cfg.dims.clear();
    for (const auto& v : root["dims"])
      cfg.dims.push_back(static_cast<int>(take_integer(v, "dims entry")));
  }
  if (root.contains("delta_grid")) {
    if (!root["delta_grid"].is_array()) fail("delta_grid must be an array");
    cfg.delta_grid.clear();
    for (const auto& v : root["delta_grid"])
      cfg.delta_grid.push_back(take_number(v, "delta_grid entry"));
  }
  if (root.contains("epsilon_grid")) {
    if (!root["epsilon_grid"].is_array()) fail("epsilon_grid must be an array");
    cfg.epsilon_grid.clear();
    for (const auto& v : root["epsilon_grid"])
      cfg.epsilon_grid.push_back(take_number(v, "epsilon_grid entry"));
  }
  if (root.contains("n_shift"))
    cfg.n_shift = static_cast<int>(take_integer(root["n_shift"], "n_shift"));
  if (root.contains("exp_class")) {
    const auto& ec = root["exp_class"];
    if (!ec.is_object()) fail("exp_class must be an object");
    reject_unknown_keys(ec, {"a", "alpha", "m"}, "exp_class");
    if (ec.contains("a")) cfg.exp_class.a = take_number(ec["a"], "exp_class.a");
    if (ec.contains("alpha"))
      cfg.exp_class.alpha = take_number(ec["alpha"], "exp_class.alpha");
    if (ec.contains("m")) cfg.exp_class.m = take_number(ec["m"], "exp_class.m");
  }
  if (root.contains("tol")) {
    const auto& t = root["tol"];
    if (!t.is_object()) fail("tol must be an object");
    reject_unknown_keys(t, {"slack", "rel"}, "tol");
    if (t.contains("slack")) cfg.tol.slack = take_number(t["slack"], "tol.slack");
    if (t.contains("rel")) cfg.tol.rel = take_number(t["rel"], "tol.rel");
  }

  cfg.validate();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<int> parse_dims_range(const std::string& text) {
  const auto parse_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(s, &pos);
    } catch (const std::exception&) {
      fail("invalid dims range \"" + text + "\"");
    }
    if (pos != s.size()) fail("invalid dims range \"" + text + "\"");
    return value;
  };

  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) return {parse_int(text)};
  const int lo = parse_int(text.substr(0, sep));
  const int hi = parse_int(text.substr(sep + 2));
  if (lo < 1 || hi < lo) fail("invalid dims range \"" + text + "\"");
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

}  // namespace specbound::harness
