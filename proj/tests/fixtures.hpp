#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "icode/graph.hpp"
#include "icode/instance.hpp"

namespace icode::test {

inline std::string data_path(const std::string &name) {
  return std::string(ICODE_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string &name) {
  std::ifstream in(data_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// r1(1|2,3,4) r2(2|5) r3(3|1,4) r4(4|1,3) r5(5|2,6) r6(6|4)
inline Instance paper6() {
  return {6,
          {{{1}, {2, 3, 4}},
           {{2}, {5}},
           {{3}, {1, 4}},
           {{4}, {1, 3}},
           {{5}, {2, 6}},
           {{6}, {4}}}};
}

// r1(1|2,3) r2(2,3|1)
inline Instance eq1() { return {3, {{{1}, {2, 3}}, {{2, 3}, {1}}}}; }

// r1(1|2) r2(2|3) r3(3|1)
inline Instance cycle3() { return {3, {{{1}, {2}}, {{2}, {3}}, {{3}, {1}}}}; }

// r_i(i | i-1, i+1) on five messages, indices mod 5.
inline Instance cycle5() {
  Instance inst{5, {}};
  for (int i = 1; i <= 5; ++i) {
    MessageSet has{(i + 3) % 5 + 1, i % 5 + 1};
    std::sort(has.begin(), has.end());
    inst.receivers.push_back({{i}, has});
  }
  return inst;
}

inline Instance parse_or_die(const std::string &name) {
  return parse_instance(read_data(name));
}

inline DerivedGraph random_graph(std::size_t vertices, double density,
                                 std::mt19937_64 &rng) {
  std::bernoulli_distribution edge(density);
  DerivedGraph g(vertices);
  for (std::size_t p = 0; p < vertices; ++p)
    for (std::size_t q = p + 1; q < vertices; ++q)
      if (edge(rng))
        g.add_edge(p, q);
  return g;
}

}  // namespace icode::test
