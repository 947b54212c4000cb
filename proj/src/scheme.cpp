#include "icode/scheme.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

namespace icode {

Word width_mask(unsigned width) {
  return width >= 64 ? ~Word{0} : (Word{1} << width) - 1;
}

AssignedScheme scheme_from_cover(const UnicastInstance &u, const CliqueCover &c,
                                 GraphOptions options) {
  const auto g = build_cross_neighbor_graph(u, options);
  if (auto bad = verify_cover(g, c))
    throw SchemeError("invalid cover: " + bad->message);

  AssignedScheme out;
  out.scheme.num_messages = u.num_messages;
  out.assignment.assign(u.virtuals.size(), 0);
  for (std::size_t p = 0; p < c.parts.size(); ++p) {
    std::set<MessageId> wants;
    for (auto v : c.parts[p]) {
      wants.insert(u.virtuals[v].want);
      out.assignment[v] = p;
    }
    out.scheme.transmissions.emplace_back(wants.begin(), wants.end());
  }
  return out;
}

std::vector<Word> encode(const CodingScheme &s, const MessageAssignment &a) {
  if (a.words.size() != static_cast<std::size_t>(s.num_messages))
    throw SchemeError("assignment has " + std::to_string(a.words.size()) +
                      " words, scheme expects " + std::to_string(s.num_messages));
  std::vector<Word> out;
  out.reserve(s.rate());
  for (const auto &t : s.transmissions) {
    Word sum = 0;
    for (auto id : t)
      sum ^= a.words[id - 1];
    out.push_back(sum);
  }
  return out;
}

bool decodable_from(const VirtualReceiver &v, const MessageSet &t) {
  if (!contains(t, v.want))
    return false;
  return std::all_of(t.begin(), t.end(), [&](MessageId id) {
    return id == v.want || contains(v.has, id);
  });
}

Word decode_receiver(const CodingScheme &s, const DecodeView &view,
                     std::size_t index) {
  const auto &v = view.receiver;
  if (index >= s.rate() || !decodable_from(v, s.transmissions[index]))
    throw SchemeError("message " + std::to_string(v.want) +
                      " is not decodable from this transmission");
  if (view.received.size() != s.rate() || view.side_words.size() != v.has.size())
    throw SchemeError("decode view does not match the scheme");
  Word word = view.received[index];
  for (auto id : s.transmissions[index]) {
    if (id == v.want)
      continue;
    const auto pos = std::lower_bound(v.has.begin(), v.has.end(), id) - v.has.begin();
    word ^= view.side_words[static_cast<std::size_t>(pos)];
  }
  return word;
}

std::vector<std::optional<std::size_t>> find_assignment(const UnicastInstance &u,
                                                        const CodingScheme &s) {
  std::vector<std::optional<std::size_t>> out(u.virtuals.size());
  for (std::size_t i = 0; i < u.virtuals.size(); ++i)
    for (std::size_t t = 0; t < s.rate() && !out[i]; ++t)
      if (decodable_from(u.virtuals[i], s.transmissions[t]))
        out[i] = t;
  return out;
}

SymbolicReport verify_scheme_symbolic(const UnicastInstance &u,
                                      const CodingScheme &s) {
  SymbolicReport report;
  const auto assignment = find_assignment(u, s);
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (!assignment[i])
      report.unsatisfied.push_back(i);
  return report;
}

MessageAssignment random_assignment(int num_messages, unsigned width,
                                    std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  MessageAssignment a;
  a.width = width;
  a.words.resize(static_cast<std::size_t>(num_messages));
  for (auto &w : a.words)
    w = rng() & width_mask(width);
  return a;
}

RandomReport verify_scheme_random(const UnicastInstance &u, const CodingScheme &s,
                                  std::size_t trials, std::uint64_t seed,
                                  unsigned width) {
  if (width < 1 || width > 64)
    throw SchemeError("word width must be in [1, 64]");
  const auto assignment = find_assignment(u, s);
  if (std::any_of(assignment.begin(), assignment.end(),
                  [](const auto &a) { return !a.has_value(); }))
    throw SchemeError("symbolic verification failed; randomized check not run");

  RandomReport report;
  std::vector<Word> side;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto a = random_assignment(s.num_messages, width, seed, trial);
    const auto received = encode(s, a);
    for (std::size_t i = 0; i < u.virtuals.size(); ++i) {
      const auto &v = u.virtuals[i];
      side.clear();
      for (auto id : v.has)
        side.push_back(a.words[id - 1]);
      const DecodeView view{v, received, side};
      if (decode_receiver(s, view, *assignment[i]) != a.words[v.want - 1]) {
        report.failing_trial = trial;
        report.failing_virtual = i;
        report.trials_run = trial + 1;
        return report;
      }
    }
    report.trials_run = trial + 1;
  }
  return report;
}

std::string serialize_scheme(const CodingScheme &s) {
  nlohmann::ordered_json doc;
  doc["rate"] = s.rate();
  doc["transmissions"] = s.transmissions;
  return doc.dump() + "\n";
}

CodingScheme parse_scheme(std::string_view text, int num_messages) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("transmissions") ||
      !doc["transmissions"].is_array())
    throw ParseError("scheme must be an object with a \"transmissions\" array");

  CodingScheme s;
  s.num_messages = num_messages;
  for (const auto &node : doc["transmissions"]) {
    const auto where = "transmission " + std::to_string(s.rate() + 1);
    if (!node.is_array() || node.empty())
      throw ParseError(where + " must be a nonempty array of ids");
    MessageSet t;
    for (const auto &item : node) {
      if (!item.is_number_integer())
        throw ParseError(where + " contains a non-integer entry");
      const auto id = item.get<MessageId>();
      if (id < 1 || id > num_messages)
        throw ParseError(where + ": message id " + std::to_string(id) +
                         " out of range");
      t.push_back(id);
    }
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw ParseError(where + " lists a message id more than once");
    s.transmissions.push_back(std::move(t));
  }
  if (doc.contains("rate") &&
      (!doc["rate"].is_number_integer() || doc["rate"].get<long long>() !=
                                               static_cast<long long>(s.rate())))
    throw ParseError("\"rate\" does not match the number of transmissions");
  return s;
}

}  // namespace icode
