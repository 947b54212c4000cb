#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icode/cover.hpp"
#include "icode/graph.hpp"
#include "icode/instance.hpp"
#include "icode/scheme.hpp"

namespace icode {

// Rows over GF(2); bit i-1 of a row is the coefficient of message i.
struct Gf2Matrix {
  int cols = 0;
  std::vector<std::uint64_t> rows;

  std::size_t rank() const;
  bool operator==(const Gf2Matrix &) const = default;
};

// Row t is the indicator vector of transmissions[t].
Gf2Matrix incidence_matrix(const CodingScheme &s);

// e_want lies in rowspace(m) + span{e_i : i in has}.
bool linearly_decodable(const Gf2Matrix &m, const VirtualReceiver &v);
bool linearly_decodable(const Gf2Matrix &m, const UnicastInstance &u);

inline constexpr std::size_t default_oracle_cap = 10;
inline constexpr std::size_t default_mais_cap = 20;

struct OracleOptions {
  std::size_t message_cap = default_oracle_cap;
  // Largest rate tried; defaults to the number of distinct wants, which is
  // always achievable.
  std::optional<int> rate_cap;
  // Smallest rate tried; defaults to max(1, MAIS) when MAIS is within cap.
  std::optional<int> start_rate;
  std::size_t mais_cap = default_mais_cap;
};

struct LinearRateResult {
  std::optional<int> rate;  // empty: no code up to searched_up_to
  int searched_up_to = 0;
  Gf2Matrix witness;        // rate() == rate when found
};

// Least number of GF(2) rows letting every virtual decode, found by
// enumerating row spaces in reduced row echelon form. Throws CapExceeded
// when num_messages exceeds the cap.
LinearRateResult min_linear_rate_gf2(const UnicastInstance &u,
                                     const OracleOptions &options = {});

// Largest set of virtuals with distinct wants whose "p knows q's want"
// digraph is acyclic. Throws CapExceeded past cap virtuals.
int mais_lower_bound(const UnicastInstance &u, std::size_t cap = default_mais_cap);

struct GapOptions {
  bool dedup = true;
  GraphOptions graph;
  std::size_t exact_cap = default_exact_cap;
  std::size_t oracle_cap = default_oracle_cap;
  std::size_t mais_cap = default_mais_cap;
};

struct RateReport {
  std::optional<int> mais;
  std::optional<int> oracle;
  std::optional<int> cover_exact;
  int cover_greedy = 0;
  std::optional<int> gap;
  bool counterexample = false;
};

// Runs every stage it can within caps; fields past their cap stay empty.
RateReport gap_report(const Instance &inst, const GapOptions &options = {});

// {"mais", "oracle", "cover_exact", "cover_greedy", "gap", "counterexample"}
std::string serialize_report(const RateReport &r);

}  // namespace icode
