#include "topo/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "topo/error.hpp"
#include "topo/operators.hpp"

namespace topo {

namespace {

void check_enum_capacity(int n) {
  if (n < 0 || n > kMaxEnumeration) {
    throw CapacityExceeded("topology enumeration capped at n <= " +
                           std::to_string(kMaxEnumeration) + "; got " + std::to_string(n));
  }
}

Space space_from_rows(int n, const std::vector<std::uint64_t>& rows) {
  std::vector<PointSet> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) table.push_back(PointSet::from_bits(n, rows[static_cast<std::size_t>(x)]));
  return Space::unchecked(std::move(table));  // valid by construction
}

}  // namespace

TopologyEnumerator::TopologyEnumerator(int n) : n_(n) {
  check_enum_capacity(n);
  full_ = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  rows_.assign(static_cast<std::size_t>(n), 0);
  last_tried_.assign(static_cast<std::size_t>(n), 0);
}

TopologyEnumerator::TopologyEnumerator(int n, std::uint64_t fixed_first_row)
    : TopologyEnumerator(n) {
  if (n == 0) throw CapacityExceeded("branch enumeration requires n >= 1");
  if ((fixed_first_row & 1u) == 0 || fixed_first_row > full_) {
    throw BadRange("fixed first row must contain point 0 and fit the universe");
  }
  rows_[0] = fixed_first_row;
  base_level_ = 1;
  level_ = 1;
}

bool TopologyEnumerator::row_admissible(int level, std::uint64_t row) const {
  // Only pairs among assigned rows can be checked; pairs involving later rows
  // are checked when those rows are placed.
  for (int y = 0; y < level; ++y) {
    const std::uint64_t row_y = rows_[static_cast<std::size_t>(y)];
    if ((row >> y) & 1u) {             // y in U(level)  =>  U(y) subset of U(level)
      if ((row_y & ~row) != 0) return false;
    }
    if ((row_y >> level) & 1u) {       // level in U(y)  =>  U(level) subset of U(y)
      if ((row & ~row_y) != 0) return false;
    }
  }
  return true;
}

std::optional<Space> TopologyEnumerator::next() {
  if (n_ == 0) {
    if (empty_emitted_) return std::nullopt;
    empty_emitted_ = true;
    ++emitted_;
    return Space::unchecked({});
  }
  if (exhausted_) return std::nullopt;
  if (level_ == n_) {
    if (level_ == base_level_) {
      // Branch mode where the pinned prefix is already a complete table
      // (n == 1): emit it once and stop.
      exhausted_ = true;
      ++emitted_;
      return space_from_rows(n_, rows_);
    }
    --level_;  // resume: advance the deepest row
  }

  while (true) {
    const auto lvl = static_cast<std::size_t>(level_);
    const std::uint64_t self_bit = std::uint64_t{1} << level_;
    std::uint64_t candidate = last_tried_[lvl] == 0 ? self_bit : last_tried_[lvl] + 1;
    bool placed = false;
    for (; candidate <= full_; ++candidate) {
      if ((candidate & self_bit) == 0) continue;
      last_tried_[lvl] = candidate;
      if (!row_admissible(level_, candidate)) continue;
      rows_[lvl] = candidate;
      placed = true;
      break;
    }
    if (!placed) {
      last_tried_[lvl] = 0;
      if (level_ == base_level_) {
        exhausted_ = true;
        return std::nullopt;
      }
      --level_;
      continue;
    }
    ++level_;
    if (level_ == n_) {
      ++emitted_;
      return space_from_rows(n_, rows_);
    }
  }
}

std::vector<std::uint64_t> first_row_branches(int n) {
  check_enum_capacity(n);
  std::vector<std::uint64_t> branches;
  if (n == 0) return branches;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m <= full; m += 2) branches.push_back(m);
  return branches;
}

void for_each_topology(int n, const std::function<void(const Space&)>& fn) {
  TopologyEnumerator stream(n);
  while (auto s = stream.next()) fn(*s);
}

std::string CanonicalForm::key() const {
  std::string out;
  out.reserve(sizeof(int) + rows.size() * sizeof(std::uint64_t));
  out.append(reinterpret_cast<const char*>(&n), sizeof(n));
  for (std::uint64_t row : rows) out.append(reinterpret_cast<const char*>(&row), sizeof(row));
  return out;
}

namespace {

struct PointInvariant {
  int nbhd_size;
  int closure_size;

  friend bool operator==(const PointInvariant& a, const PointInvariant& b) {
    return a.nbhd_size == b.nbhd_size && a.closure_size == b.closure_size;
  }
  friend bool operator<(const PointInvariant& a, const PointInvariant& b) {
    if (a.nbhd_size != b.nbhd_size) return a.nbhd_size < b.nbhd_size;
    return a.closure_size < b.closure_size;
  }
};

std::vector<PointInvariant> point_invariants(const Space& s) {
  std::vector<PointInvariant> inv(static_cast<std::size_t>(s.size()));
  for (int x = 0; x < s.size(); ++x) {
    inv[static_cast<std::size_t>(x)] = {
        s.min_nbhd(x).count(),
        closure(s, PointSet::singleton(s.size(), x)).count(),
    };
  }
  return inv;
}

// Recursive search over permutations that sort points by invariant class;
// any homeomorphism preserves the invariants, so the least encoding over
// these permutations is itself a homeomorphism invariant.
struct CanonicalSearch {
  const Space& s;
  const std::vector<PointInvariant>& inv;
  std::vector<PointInvariant> slot_inv;  // required invariant per position
  std::vector<int> perm;                 // position -> original point
  std::uint64_t used = 0;
  std::vector<std::uint64_t> best;

  void encode_and_keep() {
    const int n = s.size();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = 0;
      for (int q : s.min_nbhd(perm[static_cast<std::size_t>(i)])) {
        row |= std::uint64_t{1} << pos[static_cast<std::size_t>(q)];
      }
      rows[static_cast<std::size_t>(i)] = row;
    }
    if (best.empty() || rows < best) best = std::move(rows);
  }

  void assign(int position) {
    const int n = s.size();
    if (position == n) {
      encode_and_keep();
      return;
    }
    for (int p = 0; p < n; ++p) {
      if ((used >> p) & 1u) continue;
      if (!(inv[static_cast<std::size_t>(p)] == slot_inv[static_cast<std::size_t>(position)])) continue;
      used |= std::uint64_t{1} << p;
      perm[static_cast<std::size_t>(position)] = p;
      assign(position + 1);
      used &= ~(std::uint64_t{1} << p);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Space& s) {
  const int n = s.size();
  if (n > kMaxCanonical) {
    throw CapacityExceeded("canonical_form capped at n <= " + std::to_string(kMaxCanonical));
  }
  CanonicalForm form;
  form.n = n;
  if (n == 0) return form;

  const std::vector<PointInvariant> inv = point_invariants(s);
  std::vector<PointInvariant> slots = inv;
  std::sort(slots.begin(), slots.end());

  CanonicalSearch search{s, inv, std::move(slots),
                         std::vector<int>(static_cast<std::size_t>(n), 0), 0, {}};
  search.assign(0);
  form.rows = std::move(search.best);
  return form;
}

bool is_homeomorphic(const Space& a, const Space& b) {
  if (a.size() != b.size()) return false;
  std::vector<PointInvariant> ia = point_invariants(a);
  std::vector<PointInvariant> ib = point_invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (!(ia == ib)) return false;
  return canonical_form(a) == canonical_form(b);
}

TopologyCounts count_topologies(int n, bool canonical) {
  check_enum_capacity(n);
  if (canonical && n > 6) {
    throw CapacityExceeded("canonical counting capped at n <= 6");
  }
  TopologyCounts counts;
  std::unordered_set<std::string> forms;
  TopologyEnumerator stream(n);
  while (auto s = stream.next()) {
    ++counts.labeled;
    if (canonical) forms.insert(canonical_form(*s).key());
  }
  if (canonical) counts.canonical = forms.size();
  return counts;
}

Space random_space(int n, std::mt19937_64& rng) {
  if (n < 0 || n > PointSet::kMaxUniverse) {
    throw CapacityExceeded("random_space: n = " + std::to_string(n));
  }
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  const double densities[] = {0.15, 0.3, 0.5};
  const double p = densities[rng() % 3];
  std::bernoulli_distribution edge(p);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    std::uint64_t row = std::uint64_t{1} << x;
    for (int y = 0; y < n; ++y) {
      if (y != x && edge(rng)) row |= std::uint64_t{1} << y;
    }
    rows[static_cast<std::size_t>(x)] = row & full;
  }
  // Boolean Warshall closure makes the relation transitive.
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if ((rows[static_cast<std::size_t>(x)] >> k) & 1u) {
        rows[static_cast<std::size_t>(x)] |= rows[static_cast<std::size_t>(k)];
      }
    }
  }
  return space_from_rows(n, rows);
}

}  // namespace topo
