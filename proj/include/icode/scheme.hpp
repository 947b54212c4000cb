#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icode/cover.hpp"
#include "icode/instance.hpp"

namespace icode {

using Word = std::uint64_t;

// The encoder: transmission t is the XOR of the messages it lists.
struct CodingScheme {
  int num_messages = 0;
  std::vector<MessageSet> transmissions;

  std::size_t rate() const noexcept { return transmissions.size(); }
  bool operator==(const CodingScheme &) const = default;
};

// A scheme plus the transmission each virtual receiver decodes from.
struct AssignedScheme {
  CodingScheme scheme;
  std::vector<std::size_t> assignment;
};

struct MessageAssignment {
  std::vector<Word> words;  // message i is words[i - 1]
  unsigned width = 64;
};

struct DecodeView {
  const VirtualReceiver &receiver;
  std::span<const Word> received;
  std::span<const Word> side_words;  // aligned with receiver.has
};

class SchemeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Word width_mask(unsigned width);

// One transmission per part: the distinct wants of the part's virtuals.
// Throws SchemeError when c is not a valid cover of u's derived graph.
AssignedScheme scheme_from_cover(const UnicastInstance &u, const CliqueCover &c,
                                 GraphOptions options = {});

std::vector<Word> encode(const CodingScheme &s, const MessageAssignment &a);

// Cancels every other summand of transmission `index` using side words.
Word decode_receiver(const CodingScheme &s, const DecodeView &view,
                     std::size_t index);

// True when v.want is in t and the rest of t is side information of v.
bool decodable_from(const VirtualReceiver &v, const MessageSet &t);

// First transmission each virtual can decode from, if any.
std::vector<std::optional<std::size_t>> find_assignment(const UnicastInstance &u,
                                                        const CodingScheme &s);

struct SymbolicReport {
  std::vector<std::size_t> unsatisfied;  // virtual positions

  bool ok() const noexcept { return unsatisfied.empty(); }
};

SymbolicReport verify_scheme_symbolic(const UnicastInstance &u,
                                      const CodingScheme &s);

struct RandomReport {
  std::size_t trials_run = 0;
  std::optional<std::size_t> failing_trial;
  std::optional<std::size_t> failing_virtual;

  bool ok() const noexcept { return !failing_trial.has_value(); }
};

// Bit-level check: encode random assignments and decode every virtual.
// Throws SchemeError when the symbolic check does not pass.
RandomReport verify_scheme_random(const UnicastInstance &u, const CodingScheme &s,
                                  std::size_t trials, std::uint64_t seed,
                                  unsigned width = 64);

// Uniform words for one trial; trial t of a run draws from seed and t only.
MessageAssignment random_assignment(int num_messages, unsigned width,
                                    std::uint64_t seed, std::uint64_t trial);

// {"rate": r, "transmissions": [[...], ...]}
std::string serialize_scheme(const CodingScheme &s);
// Throws ParseError. num_messages bounds the ids.
CodingScheme parse_scheme(std::string_view text, int num_messages);

}  // namespace icode
