#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icode {

// Message ids are 1-indexed everywhere they cross an interface.
using MessageId = int;
using MessageSet = std::vector<MessageId>;  // sorted ascending, no repeats

struct Receiver {
  MessageSet wants;
  MessageSet has;

  bool operator==(const Receiver &) const = default;
};

struct Instance {
  int num_messages = 0;
  std::vector<Receiver> receivers;

  bool operator==(const Instance &) const = default;
};

// Receiver index and demand ordinal are 0-based in memory, rendered 1-based.
struct Origin {
  std::size_t receiver = 0;
  std::size_t demand = 0;

  bool operator==(const Origin &) const = default;
};

struct VirtualReceiver {
  MessageId want = 0;
  MessageSet has;
  Origin origin;

  bool operator==(const VirtualReceiver &) const = default;
};

struct UnicastInstance {
  int num_messages = 0;
  std::vector<VirtualReceiver> virtuals;
  // Present once dedup has run: removed pre-dedup position -> pre-dedup
  // position of the retained representative.
  std::optional<std::map<std::size_t, std::size_t>> dedup_map;
};

struct Violation {
  std::optional<std::size_t> receiver;  // 0-based; empty for instance-level
  std::string rule;

  std::string describe() const;
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation> &violations() const noexcept {
    return violations_;
  }

private:
  std::vector<Violation> violations_;
};

bool contains(const MessageSet &set, MessageId id);

// Every invariant violation, in receiver order. Empty means valid.
std::vector<Violation> validate(const Instance &inst);

// Throws ParseError on malformed JSON or schema problems, ValidationError
// when the data model invariants fail.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance &inst);

// One virtual receiver per (receiver, wanted message), ordered by receiver
// then ascending want. Each inherits its receiver's side information.
UnicastInstance split_groupcast(const Instance &inst);

// Keeps the first virtual of each distinct (want, has) pair.
UnicastInstance dedup(const UnicastInstance &u);

// Position in dedup(u).virtuals serving the pre-dedup virtual at `original`.
std::size_t retained_position(const UnicastInstance &deduped,
                              std::size_t original);

}  // namespace icode
