#include "orlicz/seq_spec.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  if (s.empty()) throw InvalidParameter(what + ": empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw InvalidParameter(what + ": malformed number '" + s + "'");
  return v;
}

std::size_t parse_horizon(double v, const std::string& what) {
  if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
    throw InvalidParameter(what + ": horizon must be a positive integer");
  return static_cast<std::size_t>(v);
}

const std::set<std::string>& allowed_keys(const std::string& family) {
  static const std::set<std::string> gevrey = {"s", "horizon"};
  static const std::set<std::string> qgevrey = {"q", "n", "horizon"};
  static const std::set<std::string> expl = {"lq", "horizon"};
  if (family == "gevrey") return gevrey;
  if (family == "qgevrey") return qgevrey;
  if (family == "explicit") return expl;
  throw InvalidParameter("unknown sequence family '" + family + "'");
}

SequenceSpec parse_inline(const std::string& text) {
  SequenceSpec spec;
  const std::size_t colon = text.find(':');
  spec.family = text.substr(0, colon);
  const std::set<std::string>& keys = allowed_keys(spec.family);

  bool horizon_given = false;
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::stringstream items(rest);
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidParameter("spec item '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (keys.find(key) == keys.end())
      throw InvalidParameter("family '" + spec.family + "' does not take key '" + key + "'");
    if (key == "horizon") {
      spec.horizon = parse_horizon(parse_number(val, key), key);
      horizon_given = true;
    } else if (key == "lq") {
      std::stringstream parts(val);
      std::string part;
      while (std::getline(parts, part, ';'))
        spec.log_quotients.push_back(parse_number(part, "lq"));
    } else {
      if (!spec.params.emplace(key, parse_number(val, key)).second)
        throw InvalidParameter("duplicate key '" + key + "'");
    }
  }
  if (spec.family == "explicit") {
    if (spec.log_quotients.empty())
      throw InvalidParameter("explicit spec needs lq=v1;v2;...");
    if (horizon_given && spec.horizon != spec.log_quotients.size())
      throw HorizonMismatch("horizon disagrees with the quotient list length");
    spec.horizon = spec.log_quotients.size();
  }
  return spec;
}

SequenceSpec parse_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter("spec file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw InvalidParameter("spec file must hold a JSON object");
  if (!j.contains("family") || !j["family"].is_string())
    throw InvalidParameter("spec file needs a string 'family'");

  SequenceSpec spec;
  spec.family = j["family"].get<std::string>();
  allowed_keys(spec.family);  // validates the family name
  bool horizon_given = false;

  for (const auto& [key, val] : j.items()) {
    if (key == "family") continue;
    if (key == "horizon") {
      if (!val.is_number())
        throw InvalidParameter("'horizon' must be a number");
      spec.horizon = parse_horizon(val.get<double>(), "horizon");
      horizon_given = true;
    } else if (key == "params") {
      if (spec.family == "explicit")
        throw InvalidParameter("'explicit' takes log_quotients, not params");
      if (!val.is_object()) throw InvalidParameter("'params' must be an object");
      for (const auto& [pk, pv] : val.items()) {
        if (allowed_keys(spec.family).find(pk) == allowed_keys(spec.family).end() ||
            pk == "horizon")
          throw InvalidParameter("family '" + spec.family + "' does not take key '" + pk + "'");
        if (!pv.is_number()) throw InvalidParameter("param '" + pk + "' must be a number");
        spec.params.emplace(pk, pv.get<double>());
      }
    } else if (key == "log_quotients") {
      if (spec.family != "explicit")
        throw InvalidParameter("'log_quotients' is only valid for family 'explicit'");
      if (!val.is_array()) throw InvalidParameter("'log_quotients' must be an array");
      for (const auto& e : val) {
        if (!e.is_number()) throw InvalidParameter("'log_quotients' entries must be numbers");
        spec.log_quotients.push_back(e.get<double>());
      }
    } else {
      throw InvalidParameter("unknown spec field '" + key + "'");
    }
  }
  if (spec.family == "explicit") {
    if (spec.log_quotients.empty())
      throw InvalidParameter("explicit spec needs log_quotients");
    if (horizon_given && spec.horizon != spec.log_quotients.size())
      throw HorizonMismatch("horizon disagrees with the quotient list length");
    spec.horizon = spec.log_quotients.size();
  }
  return spec;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SequenceSpec parse_spec_string(const std::string& text) {
  if (text.empty()) throw InvalidParameter("empty sequence spec");
  if (text[0] == '@') return parse_json(text.substr(1));
  return parse_inline(text);
}

std::string spec_to_json(const SequenceSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = spec.family;
  j["horizon"] = spec.horizon;
  if (spec.family == "explicit") {
    j["log_quotients"] = spec.log_quotients;
  } else {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.params) params[k] = v;
    j["params"] = params;
  }
  return j.dump(2) + "\n";
}

}  // namespace orlicz
