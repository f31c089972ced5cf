#include "kuga/family_json.hpp"

#include "kuga/errors.hpp"

#include <fstream>
#include <set>

namespace kuga {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed,
                         const std::string &where) {
  for (const auto &item : obj.items())
    if (!allowed.contains(item.key()))
      throw SchemaError(where + ": unknown key '" + item.key() + "'");
}

long long require_integer(const json &obj, const std::string &key, const std::string &where) {
  if (!obj.contains(key))
    throw SchemaError(where + ": missing key '" + key + "'");
  const json &v = obj.at(key);
  if (!v.is_number_integer())
    throw SchemaError(where + "." + key + ": expected an integer");
  return v.get<long long>();
}

bool require_bool(const json &obj, const std::string &key, const std::string &where) {
  if (!obj.contains(key))
    throw SchemaError(where + ": missing key '" + key + "'");
  const json &v = obj.at(key);
  if (!v.is_boolean())
    throw SchemaError(where + "." + key + ": expected a boolean");
  return v.get<bool>();
}

std::map<long long, long long> parse_census(const json &obj, const std::string &where) {
  if (!obj.is_object())
    throw SchemaError(where + ": expected an object of {\"index\": count}");
  std::map<long long, long long> out;
  for (const auto &item : obj.items()) {
    long long index = 0;
    try {
      index = std::stoll(item.key());
    } catch (const std::exception &) {
      throw SchemaError(where + ": key '" + item.key() + "' is not a decimal index");
    }
    if (std::to_string(index) != item.key())
      throw SchemaError(where + ": key '" + item.key() + "' is not a canonical decimal index");
    if (!item.value().is_number_integer())
      throw SchemaError(where + "[" + item.key() + "]: expected an integer count");
    const long long count = item.value().get<long long>();
    if (count < 0)
      throw SchemaError(where + "[" + item.key() + "]: count must be nonnegative");
    if (count != 0)
      out[index] = count;
  }
  return out;
}

} // namespace

FamilyInvariants family_from_json(const json &doc) {
  if (!doc.is_object())
    throw SchemaError("family: top-level value must be an object");
  reject_unknown_keys(doc, {"genus", "base_genus", "q_f", "hyperelliptic", "fibers"}, "family");

  FamilyInvariants fam;
  fam.g = require_integer(doc, "genus", "family");
  fam.b = require_integer(doc, "base_genus", "family");
  fam.hyperelliptic = require_bool(doc, "hyperelliptic", "family");
  if (doc.contains("q_f"))
    fam.q_f = require_integer(doc, "q_f", "family");

  if (!doc.contains("fibers") || !doc.at("fibers").is_array())
    throw SchemaError("family.fibers: expected an array");
  std::size_t k = 0;
  for (const json &fj : doc.at("fibers")) {
    const std::string where = "fibers[" + std::to_string(k) + "]";
    if (!fj.is_object())
      throw SchemaError(where + ": expected an object");
    reject_unknown_keys(fj, {"compact_jacobian", "delta", "xi"}, where);
    FiberData fiber;
    fiber.compact_jacobian = require_bool(fj, "compact_jacobian", where);
    if (fj.contains("delta"))
      fiber.delta = parse_census(fj.at("delta"), where + ".delta");
    if (fj.contains("xi"))
      fiber.xi = parse_census(fj.at("xi"), where + ".xi");
    fam.fibers.push_back(std::move(fiber));
    ++k;
  }
  return fam;
}

FamilyInvariants family_from_string(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError(std::string("family: JSON parse error: ") + e.what());
  }
  return family_from_json(doc);
}

FamilyInvariants family_from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("family: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return family_from_string(text);
}

nlohmann::ordered_json family_to_json(const FamilyInvariants &fam) {
  nlohmann::ordered_json doc;
  doc["genus"] = fam.g;
  doc["base_genus"] = fam.b;
  if (fam.q_f)
    doc["q_f"] = *fam.q_f;
  doc["hyperelliptic"] = fam.hyperelliptic;
  doc["fibers"] = nlohmann::ordered_json::array();
  for (const FiberData &f : fam.fibers) {
    nlohmann::ordered_json fj;
    fj["compact_jacobian"] = f.compact_jacobian;
    fj["delta"] = nlohmann::ordered_json::object();
    for (const auto &[i, count] : f.delta)
      fj["delta"][std::to_string(i)] = count;
    if (!f.xi.empty()) {
      fj["xi"] = nlohmann::ordered_json::object();
      for (const auto &[j, count] : f.xi)
        fj["xi"][std::to_string(j)] = count;
    }
    doc["fibers"].push_back(std::move(fj));
  }
  return doc;
}

} // namespace kuga
