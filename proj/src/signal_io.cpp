#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monocst/errors.hpp"
#include "monocst/signal.hpp"

namespace monocst {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
      throw SchemaError(where + ": unknown key '" + it.key() + "'");
    }
  }
}

double number(const json& obj, const char* key, const std::string& where, double fallback, bool required) {
  if (!obj.contains(key)) {
    if (required) throw SchemaError(where + ": missing '" + key + "'");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

BladeMask blade_from_indices(const std::vector<int>& indices, int m) {
  BladeMask mask = 0;
  for (int j : indices) {
    if (j < 1 || j > m) throw SchemaError("blade index " + std::to_string(j) + " outside 1.." + std::to_string(m));
    const BladeMask bit = BladeMask{1} << (j - 1);
    if (mask & bit) throw SchemaError("blade index " + std::to_string(j) + " repeated");
    mask |= bit;
  }
  return mask;
}

CliffordSignal signal_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("signal JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("signal: top level must be an object");
  reject_unknown(doc, {"m", "components"}, "signal");
  if (!doc.contains("m") || !doc.at("m").is_number_integer()) throw SchemaError("signal: 'm' must be an integer");
  const int m = doc.at("m").get<int>();
  if (m < kMinGenerators || m > kMaxGenerators) throw SchemaError("signal: 'm' must be in [2, 12]");
  CliffordSignal f(m);
  if (!doc.contains("components")) throw SchemaError("signal: missing 'components'");
  const json& comps = doc.at("components");
  if (!comps.is_array()) throw SchemaError("signal: 'components' must be an array");
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::string where = "components[" + std::to_string(ci) + "]";
    const json& comp = comps[ci];
    if (!comp.is_object()) throw SchemaError(where + ": must be an object");
    reject_unknown(comp, {"blade", "packets"}, where);
    if (!comp.contains("blade") || !comp.at("blade").is_array()) throw SchemaError(where + ": 'blade' must be an array");
    std::vector<int> indices;
    for (const auto& j : comp.at("blade")) {
      if (!j.is_number_integer()) throw SchemaError(where + ": blade indices must be integers");
      indices.push_back(j.get<int>());
    }
    const BladeMask blade = blade_from_indices(indices, m);
    if (!comp.contains("packets") || !comp.at("packets").is_array()) {
      throw SchemaError(where + ": 'packets' must be an array");
    }
    const json& packets = comp.at("packets");
    for (std::size_t pi = 0; pi < packets.size(); ++pi) {
      const std::string pw = where + ".packets[" + std::to_string(pi) + "]";
      const json& pk = packets[pi];
      if (!pk.is_object()) throw SchemaError(pw + ": must be an object");
      reject_unknown(pk, {"poly", "center", "width", "momentum"}, pw);
      WavePacket packet;
      packet.center = number(pk, "center", pw, 0.0, false);
      packet.width = number(pk, "width", pw, 1.0, false);
      packet.momentum = number(pk, "momentum", pw, 0.0, false);
      if (!(packet.width > 0.0)) throw SchemaError(pw + ": 'width' must be positive");
      if (!pk.contains("poly") || !pk.at("poly").is_array() || pk.at("poly").empty()) {
        throw SchemaError(pw + ": 'poly' must be a nonempty array");
      }
      for (const auto& c : pk.at("poly")) {
        if (c.is_number()) {
          packet.poly.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
          packet.poly.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else {
          throw SchemaError(pw + ": poly entries must be numbers or [re, im] pairs");
        }
      }
      f.add(blade, std::move(packet));
    }
  }
  return f;
}

CliffordSignal load_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open signal file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return signal_from_json(buffer.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string signal_to_json(const CliffordSignal& f) {
  json doc;
  doc["m"] = f.m();
  doc["components"] = json::array();
  for (const auto& [blade, packets] : f.components()) {
    json comp;
    json idx = json::array();
    for (int j = 1; j <= f.m(); ++j) {
      if (blade & (BladeMask{1} << (j - 1))) idx.push_back(j);
    }
    comp["blade"] = idx;
    comp["packets"] = json::array();
    for (const auto& p : packets) {
      json pk;
      pk["poly"] = json::array();
      for (const auto& c : p.poly) pk["poly"].push_back({c.real(), c.imag()});
      pk["center"] = p.center;
      pk["width"] = p.width;
      pk["momentum"] = p.momentum;
      comp["packets"].push_back(pk);
    }
    doc["components"].push_back(comp);
  }
  return doc.dump(2);
}

}  // namespace monocst
