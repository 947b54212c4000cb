#include "icode/instance.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace icode {

namespace {

using json = nlohmann::ordered_json;

std::string violations_summary(const std::vector<Violation> &violations) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const auto &v : violations)
    out << "\n  " << v.describe();
  return out.str();
}

MessageSet read_id_set(const json &node, std::size_t receiver,
                       const char *field) {
  auto where = [&] {
    return "receiver " + std::to_string(receiver + 1) + ": \"" + field + "\"";
  };
  if (!node.is_array())
    throw ParseError(where() + " must be an array of integers");
  MessageSet ids;
  ids.reserve(node.size());
  for (const auto &item : node) {
    if (!item.is_number_integer())
      throw ParseError(where() + " contains a non-integer entry");
    ids.push_back(item.get<MessageId>());
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ParseError(where() + " lists a message id more than once");
  return ids;
}

}  // namespace

std::string Violation::describe() const {
  if (!receiver)
    return rule;
  return "receiver " + std::to_string(*receiver + 1) + ": " + rule;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(violations_summary(violations)),
      violations_(std::move(violations)) {}

bool contains(const MessageSet &set, MessageId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

std::vector<Violation> validate(const Instance &inst) {
  std::vector<Violation> out;
  if (inst.num_messages <= 0)
    out.push_back({std::nullopt, "num_messages must be positive"});

  const auto in_range = [&](MessageId id) {
    return id >= 1 && id <= inst.num_messages;
  };
  for (std::size_t j = 0; j < inst.receivers.size(); ++j) {
    const auto &r = inst.receivers[j];
    if (r.wants.empty())
      out.push_back({j, "empty demand"});
    for (const auto *set : {&r.wants, &r.has}) {
      if (!std::is_sorted(set->begin(), set->end()) ||
          std::adjacent_find(set->begin(), set->end()) != set->end()) {
        out.push_back({j, "id set not strictly ascending"});
        break;
      }
    }
    const bool out_of_range = std::any_of(r.wants.begin(), r.wants.end(),
                                          [&](auto id) { return !in_range(id); }) ||
                              std::any_of(r.has.begin(), r.has.end(),
                                          [&](auto id) { return !in_range(id); });
    if (out_of_range)
      out.push_back({j, "index out of range"});
    const bool overlap = std::any_of(r.wants.begin(), r.wants.end(),
                                     [&](auto id) { return contains(r.has, id); });
    if (overlap)
      out.push_back({j, "wants/has overlap"});
  }
  return out;
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("instance must be a JSON object");
  for (const auto &[key, _] : doc.items())
    if (key != "num_messages" && key != "receivers")
      throw ParseError("unknown field \"" + key + "\"");
  if (!doc.contains("num_messages") || !doc["num_messages"].is_number_integer())
    throw ParseError("\"num_messages\" must be an integer");
  if (!doc.contains("receivers") || !doc["receivers"].is_array())
    throw ParseError("\"receivers\" must be an array");

  Instance inst;
  inst.num_messages = doc["num_messages"].get<int>();
  const auto &receivers = doc["receivers"];
  for (std::size_t j = 0; j < receivers.size(); ++j) {
    const auto &r = receivers[j];
    if (!r.is_object() || !r.contains("wants") || !r.contains("has"))
      throw ParseError("receiver " + std::to_string(j + 1) +
                       ": expected object with \"wants\" and \"has\"");
    for (const auto &[key, _] : r.items())
      if (key != "wants" && key != "has")
        throw ParseError("receiver " + std::to_string(j + 1) +
                         ": unknown field \"" + key + "\"");
    inst.receivers.push_back(
        {read_id_set(r["wants"], j, "wants"), read_id_set(r["has"], j, "has")});
  }

  if (auto violations = validate(inst); !violations.empty())
    throw ValidationError(std::move(violations));
  return inst;
}

std::string serialize_instance(const Instance &inst) {
  json doc;
  doc["num_messages"] = inst.num_messages;
  doc["receivers"] = json::array();
  for (const auto &r : inst.receivers) {
    json node;
    node["wants"] = r.wants;
    node["has"] = r.has;
    doc["receivers"].push_back(std::move(node));
  }
  return doc.dump() + "\n";
}

UnicastInstance split_groupcast(const Instance &inst) {
  UnicastInstance u;
  u.num_messages = inst.num_messages;
  for (std::size_t j = 0; j < inst.receivers.size(); ++j) {
    const auto &r = inst.receivers[j];
    for (std::size_t k = 0; k < r.wants.size(); ++k)
      u.virtuals.push_back({r.wants[k], r.has, {j, k}});
  }
  return u;
}

UnicastInstance dedup(const UnicastInstance &u) {
  UnicastInstance out;
  out.num_messages = u.num_messages;
  out.dedup_map.emplace();
  std::map<std::pair<MessageId, MessageSet>, std::size_t> first_seen;
  for (std::size_t i = 0; i < u.virtuals.size(); ++i) {
    const auto &v = u.virtuals[i];
    auto [it, inserted] = first_seen.try_emplace({v.want, v.has}, i);
    if (inserted)
      out.virtuals.push_back(v);
    else
      (*out.dedup_map)[i] = it->second;
  }
  return out;
}

std::size_t retained_position(const UnicastInstance &deduped,
                              std::size_t original) {
  if (!deduped.dedup_map)
    return original;
  const auto &removed = *deduped.dedup_map;
  if (auto it = removed.find(original); it != removed.end())
    original = it->second;
  const auto skipped = std::distance(removed.begin(), removed.lower_bound(original));
  return original - static_cast<std::size_t>(skipped);
}

}  // namespace icode
