#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icode/graph.hpp"

namespace icode {

// A partition of the vertices into cliques; size() is the achieved rate.
struct CliqueCover {
  std::vector<std::vector<std::size_t>> parts;

  std::size_t size() const noexcept { return parts.size(); }
  bool operator==(const CliqueCover &) const = default;
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_exact_cap = 40;

// Minimum clique cover, solved per connected component as a minimum
// colouring of the component's complement. Parts are sorted by smallest
// member. Throws CapExceeded when vertex_count() > cap.
CliqueCover exact_min_cover(const DerivedGraph &g,
                            std::size_t cap = default_exact_cap);

// First-fit over ascending vertices.
CliqueCover greedy_cover(const DerivedGraph &g);

// Minimum number of colours for g (adjacent vertices differ). colouring[v]
// is the 0-based class of v, classes numbered by first member.
struct Colouring {
  std::size_t colours = 0;
  std::vector<std::size_t> colour_of;
};
Colouring exact_colouring(const DerivedGraph &g);

struct CoverViolation {
  enum class Kind { not_partition, not_clique };
  Kind kind;
  std::optional<std::size_t> part;
  std::optional<std::size_t> p, q;  // offending vertex pair (or single vertex in p)
  std::string message;
};

// Empty when c is a partition of g's vertices into cliques.
std::optional<CoverViolation> verify_cover(const DerivedGraph &g,
                                           const CliqueCover &c);

}  // namespace icode
