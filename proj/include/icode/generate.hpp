#pragma once

#include <cstdint>
#include <stdexcept>

#include "icode/instance.hpp"

namespace icode {

struct GeneratorParams {
  int num_messages = 6;
  int num_receivers = 6;
  double side_density = 0.5;
  int demand_min = 1;
  int demand_max = 1;
  std::uint64_t seed = 1;
};

class GeneratorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Each receiver draws a demand size uniformly from [demand_min, demand_max],
// that many distinct wants uniformly, then holds every other message
// independently with probability side_density. Output always validates.
//
// Draws come from std::mt19937_64 and are mapped with explicit arithmetic
// rather than <random> distributions, so a seed gives the same instance on
// every standard library.
Instance generate_instance(const GeneratorParams &params);

}  // namespace icode
