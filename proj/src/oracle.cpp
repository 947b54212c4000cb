#include "icode/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>

#include <json.hpp>

namespace icode {

namespace {

std::uint64_t bit_of(MessageId id) { return std::uint64_t{1} << (id - 1); }

std::uint64_t mask_of(const MessageSet &ids) {
  std::uint64_t m = 0;
  for (auto id : ids)
    m |= bit_of(id);
  return m;
}

// XOR basis kept sorted by descending leading bit, so one pass of
// min(x, x ^ b) fully reduces x.
class Gf2Basis {
public:
  bool insert(std::uint64_t x) {
    x = reduce(x);
    if (x == 0)
      return false;
    auto pos = std::find_if(basis_.begin(), basis_.begin() + size_,
                            [&](std::uint64_t b) { return b < x; }) - basis_.begin();
    std::move_backward(basis_.begin() + pos, basis_.begin() + size_,
                       basis_.begin() + size_ + 1);
    basis_[static_cast<std::size_t>(pos)] = x;
    ++size_;
    return true;
  }

  std::uint64_t reduce(std::uint64_t x) const {
    for (std::size_t i = 0; i < size_; ++i)
      x = std::min(x, x ^ basis_[i]);
    return x;
  }

  std::size_t size() const noexcept { return size_; }

private:
  std::array<std::uint64_t, 64> basis_{};
  std::size_t size_ = 0;
};

bool decodes(std::span<const std::uint64_t> rows, std::uint64_t want_bit,
             std::uint64_t side_mask) {
  Gf2Basis basis;
  for (auto r : rows)
    basis.insert(r & ~side_mask);
  return basis.reduce(want_bit) == 0;
}

struct LocalReceiver {
  std::uint64_t want_bit;
  std::uint64_t side_mask;
};

// Advances an ascending k-subset of [0, n); false after the last one.
bool next_combination(std::vector<int> &c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
    --i;
  if (i < 0)
    return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Searches every rank-`rank` row space of GF(2)^cols in RREF form.
std::optional<std::vector<std::uint64_t>>
find_code(int cols, int rank, const std::vector<LocalReceiver> &receivers) {
  std::vector<int> pivots(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    pivots[static_cast<std::size_t>(i)] = i;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(rank));
  do {
    std::uint64_t pivot_mask = 0;
    for (auto p : pivots)
      pivot_mask |= std::uint64_t{1} << p;
    // Free entries: non-pivot columns to the right of each row's pivot.
    std::vector<std::pair<std::size_t, int>> free;
    for (int r = 0; r < rank; ++r)
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < cols; ++c)
        if (!(pivot_mask >> c & 1))
          free.emplace_back(static_cast<std::size_t>(r), c);
    const std::uint64_t combos = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      for (int r = 0; r < rank; ++r)
        rows[static_cast<std::size_t>(r)] = std::uint64_t{1}
                                            << pivots[static_cast<std::size_t>(r)];
      for (std::size_t f = 0; f < free.size(); ++f)
        if (bits >> f & 1)
          rows[free[f].first] |= std::uint64_t{1} << free[f].second;
      const bool all = std::all_of(receivers.begin(), receivers.end(),
                                   [&](const LocalReceiver &lr) {
                                     return decodes(rows, lr.want_bit, lr.side_mask);
                                   });
      if (all)
        return rows;
    }
  } while (next_combination(pivots, cols));
  return std::nullopt;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
  Gf2Basis basis;
  for (auto r : rows)
    basis.insert(r);
  return basis.size();
}

Gf2Matrix incidence_matrix(const CodingScheme &s) {
  Gf2Matrix m{s.num_messages, {}};
  for (const auto &t : s.transmissions)
    m.rows.push_back(mask_of(t));
  return m;
}

bool linearly_decodable(const Gf2Matrix &m, const VirtualReceiver &v) {
  return decodes(m.rows, bit_of(v.want), mask_of(v.has));
}

bool linearly_decodable(const Gf2Matrix &m, const UnicastInstance &u) {
  return std::all_of(u.virtuals.begin(), u.virtuals.end(),
                     [&](const auto &v) { return linearly_decodable(m, v); });
}

LinearRateResult min_linear_rate_gf2(const UnicastInstance &u,
                                     const OracleOptions &options) {
  if (u.num_messages < 0 || static_cast<std::size_t>(u.num_messages) > options.message_cap ||
      u.num_messages > 64)
    throw CapExceeded("linear-rate oracle limited to " +
                      std::to_string(options.message_cap) + " messages (instance has " +
                      std::to_string(u.num_messages) + ")");

  // Columns of messages nobody wants can be zeroed in any code without
  // hurting a receiver, so the search runs over wanted messages only.
  std::vector<MessageId> wanted;
  for (const auto &v : u.virtuals)
    wanted.push_back(v.want);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  const int cols = static_cast<int>(wanted.size());

  const auto local_bit = [&](MessageId id) -> std::uint64_t {
    auto it = std::lower_bound(wanted.begin(), wanted.end(), id);
    if (it == wanted.end() || *it != id)
      return 0;
    return std::uint64_t{1} << (it - wanted.begin());
  };
  std::vector<LocalReceiver> receivers;
  for (const auto &v : u.virtuals) {
    std::uint64_t side = 0;
    for (auto id : v.has)
      side |= local_bit(id);
    receivers.push_back({local_bit(v.want), side});
  }

  LinearRateResult result;
  result.witness.cols = u.num_messages;
  if (cols == 0) {
    result.rate = 0;
    return result;
  }

  int start = 1;
  if (options.start_rate)
    start = std::max(1, *options.start_rate);
  else if (u.virtuals.size() <= options.mais_cap)
    start = std::max(1, mais_lower_bound(u, options.mais_cap));
  const int stop = std::min(cols, options.rate_cap.value_or(cols));

  for (int rank = start; rank <= stop; ++rank) {
    result.searched_up_to = rank;
    if (auto rows = find_code(cols, rank, receivers)) {
      result.rate = rank;
      for (auto local : *rows) {
        std::uint64_t full = 0;
        for (int c = 0; c < cols; ++c)
          if (local >> c & 1)
            full |= bit_of(wanted[static_cast<std::size_t>(c)]);
        result.witness.rows.push_back(full);
      }
      return result;
    }
  }
  return result;
}

int mais_lower_bound(const UnicastInstance &u, std::size_t cap) {
  const auto k = u.virtuals.size();
  if (k > cap || k > 30)
    throw CapExceeded("MAIS bound limited to " + std::to_string(cap) +
                      " virtual receivers (instance has " + std::to_string(k) + ")");
  // Arc p -> q when p knows q's want; equal wants count as a 2-cycle so
  // that only distinct-want sets survive.
  std::vector<std::uint32_t> out(k, 0);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      if (p != q && (contains(u.virtuals[p].has, u.virtuals[q].want) ||
                     u.virtuals[p].want == u.virtuals[q].want))
        out[p] |= std::uint32_t{1} << q;

  // A set is acyclic iff it has a sink whose removal leaves an acyclic set.
  std::vector<bool> acyclic(std::size_t{1} << k, false);
  acyclic[0] = true;
  int best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if ((out[v] & mask) == 0) {
        acyclic[mask] = acyclic[mask ^ (std::uint32_t{1} << v)];
        break;
      }
    }
    if (acyclic[mask])
      best = std::max(best, std::popcount(mask));
  }
  return best;
}

RateReport gap_report(const Instance &inst, const GapOptions &options) {
  auto u = split_groupcast(inst);
  if (options.dedup)
    u = dedup(u);
  const auto g = build_cross_neighbor_graph(u, options.graph);

  RateReport r;
  r.cover_greedy = static_cast<int>(greedy_cover(g).size());
  if (g.vertex_count() <= options.exact_cap)
    r.cover_exact = static_cast<int>(exact_min_cover(g, options.exact_cap).size());
  if (u.virtuals.size() <= options.mais_cap)
    r.mais = mais_lower_bound(u, options.mais_cap);
  if (inst.num_messages >= 0 &&
      static_cast<std::size_t>(inst.num_messages) <= options.oracle_cap) {
    OracleOptions oracle;
    oracle.message_cap = options.oracle_cap;
    oracle.mais_cap = options.mais_cap;
    oracle.start_rate = r.mais.value_or(1);
    r.oracle = min_linear_rate_gf2(u, oracle).rate;
  }
  if (r.cover_exact && r.oracle) {
    r.gap = *r.cover_exact - *r.oracle;
    r.counterexample = *r.gap > 0;
  }
  return r;
}

std::string serialize_report(const RateReport &r) {
  nlohmann::ordered_json doc;
  const auto put = [&](const char *key, const std::optional<int> &v) {
    doc[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  put("mais", r.mais);
  put("oracle", r.oracle);
  put("cover_exact", r.cover_exact);
  doc["cover_greedy"] = r.cover_greedy;
  put("gap", r.gap);
  doc["counterexample"] = r.counterexample;
  return doc.dump() + "\n";
}

}  // namespace icode
