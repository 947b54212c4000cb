#include "icode/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace icode {

namespace {

// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// 53 random mantissa bits in [0, 1).
double unit_real(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance generate_instance(const GeneratorParams &params) {
  const auto &p = params;
  if (p.num_messages < 1)
    throw GeneratorError("n must be at least 1");
  if (p.num_receivers < 0)
    throw GeneratorError("m must be non-negative");
  if (!(p.side_density >= 0.0 && p.side_density <= 1.0))
    throw GeneratorError("side density must lie in [0, 1]");
  if (p.demand_min < 1 || p.demand_min > p.demand_max)
    throw GeneratorError("demand range must satisfy 1 <= min <= max");
  if (p.demand_max > p.num_messages)
    throw GeneratorError("demand size " + std::to_string(p.demand_max) +
                         " exceeds n = " + std::to_string(p.num_messages));

  std::mt19937_64 rng(p.seed);
  Instance inst;
  inst.num_messages = p.num_messages;
  std::vector<MessageId> pool(static_cast<std::size_t>(p.num_messages));
  for (int j = 0; j < p.num_receivers; ++j) {
    const auto span = static_cast<std::uint64_t>(p.demand_max - p.demand_min + 1);
    const auto size = static_cast<std::size_t>(p.demand_min) + uniform_below(rng, span);
    // Partial Fisher-Yates: the first `size` slots are the wants.
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = 0; i < size; ++i)
      std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
    Receiver r;
    r.wants.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(r.wants.begin(), r.wants.end());
    for (MessageId id = 1; id <= p.num_messages; ++id) {
      if (contains(r.wants, id))
        continue;
      if (unit_real(rng) < p.side_density)
        r.has.push_back(id);
    }
    inst.receivers.push_back(std::move(r));
  }
  return inst;
}

}  // namespace icode
