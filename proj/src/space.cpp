#include "topo/space.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "topo/error.hpp"

namespace topo {

void Space::validate(const std::vector<PointSet>& min_nbhd) {
  const int n = static_cast<int>(min_nbhd.size());
  if (n > PointSet::kMaxUniverse) {
    throw CapacityExceeded("space has " + std::to_string(n) + " points; cap is " +
                           std::to_string(PointSet::kMaxUniverse));
  }
  for (int x = 0; x < n; ++x) {
    if (min_nbhd[static_cast<std::size_t>(x)].universe_size() != n) {
      throw UniverseMismatch("min_nbhd[" + std::to_string(x) + "] has universe size " +
                             std::to_string(min_nbhd[static_cast<std::size_t>(x)].universe_size()) +
                             "; expected " + std::to_string(n));
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!min_nbhd[static_cast<std::size_t>(x)].contains(x)) throw ReflexivityViolation(x);
  }
  for (int x = 0; x < n; ++x) {
    const PointSet& ux = min_nbhd[static_cast<std::size_t>(x)];
    for (int y : ux) {
      if (!min_nbhd[static_cast<std::size_t>(y)].subset_of(ux)) throw TransitivityViolation(x, y);
    }
  }
}

Space Space::checked(std::vector<PointSet> min_nbhd,
                     std::optional<std::vector<std::string>> labels) {
  validate(min_nbhd);
  if (labels && labels->size() != min_nbhd.size()) {
    throw UniverseMismatch("label count " + std::to_string(labels->size()) +
                           " does not match point count " + std::to_string(min_nbhd.size()));
  }
  return Space(std::move(min_nbhd), std::move(labels));
}

Space Space::unchecked(std::vector<PointSet> min_nbhd,
                       std::optional<std::vector<std::string>> labels) {
  return Space(std::move(min_nbhd), std::move(labels));
}

std::string Space::label_of(int x) const {
  if (x < 0 || x >= size()) throw std::out_of_range("label_of: point out of range");
  if (labels_) return (*labels_)[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

std::optional<int> Space::index_of_label(const std::string& text) const {
  for (int x = 0; x < size(); ++x) {
    if (label_of(x) == text) return x;
  }
  return std::nullopt;
}

bool equal_including_labels(const Space& a, const Space& b) {
  if (!(a == b)) return false;
  if (a.has_labels() != b.has_labels()) return false;
  if (!a.has_labels()) return true;
  return *a.labels() == *b.labels();
}

Space new_space(std::vector<PointSet> min_nbhd, std::optional<std::vector<std::string>> labels) {
  return Space::checked(std::move(min_nbhd), std::move(labels));
}

Space generate_topology(int n, const std::vector<PointSet>& family) {
  if (n < 0 || n > PointSet::kMaxUniverse) {
    throw CapacityExceeded("generate_topology: n = " + std::to_string(n));
  }
  for (const PointSet& member : family) {
    if (member.universe_size() != n) {
      throw UniverseMismatch("generate_topology: family member universe " +
                             std::to_string(member.universe_size()) + " != n = " +
                             std::to_string(n));
    }
  }
  std::vector<PointSet> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PointSet u = PointSet::full(n);
    for (const PointSet& member : family) {
      if (member.contains(x)) u = u & member;
    }
    table.push_back(u);
  }
  // The intersection table is reflexive and transitive by construction;
  // validation is kept as a cheap self-check.
  return new_space(std::move(table));
}

bool OpenFamily::contains(const PointSet& candidate) const {
  return std::binary_search(opens.begin(), opens.end(), candidate);
}

OpenFamily open_sets(const Space& s, std::size_t cap) {
  const int n = s.size();
  // Every open set is a union of minimal neighborhoods, so grow from the
  // empty set by adjoining one neighborhood at a time until closure.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> work;
  seen.insert(0);
  work.push_back(0);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (int x = 0; x < n; ++x) {
      const std::uint64_t grown = work[i] | s.min_nbhd(x).bits();
      if (seen.insert(grown).second) {
        if (seen.size() > cap) throw TooManyOpens(cap);
        work.push_back(grown);
      }
    }
  }
  std::sort(work.begin(), work.end());
  OpenFamily fam;
  fam.n = n;
  fam.opens.reserve(work.size());
  for (std::uint64_t bits : work) fam.opens.push_back(PointSet::from_bits(n, bits));
  return fam;
}

SubspaceMap subspace_map(const PointSet& a) {
  SubspaceMap map;
  map.parent_universe = a.universe_size();
  map.to_parent.reserve(static_cast<std::size_t>(a.count()));
  for (int x : a) map.to_parent.push_back(x);
  return map;
}

PointSet SubspaceMap::to_sub(const PointSet& parent_set) const {
  PointSet out(sub_size());
  for (int i = 0; i < sub_size(); ++i) {
    if (parent_set.contains(to_parent[static_cast<std::size_t>(i)])) out = out.with(i);
  }
  return out;
}

PointSet SubspaceMap::to_parent_set(const PointSet& sub_set) const {
  PointSet out(parent_universe);
  for (int i : sub_set) out = out.with(to_parent[static_cast<std::size_t>(i)]);
  return out;
}

int SubspaceMap::sub_index_of(int parent_point) const {
  for (int i = 0; i < sub_size(); ++i) {
    if (to_parent[static_cast<std::size_t>(i)] == parent_point) return i;
  }
  throw std::out_of_range("sub_index_of: point not in subspace");
}

namespace {

std::vector<PointSet> subspace_table(const Space& s, const PointSet& a, const SubspaceMap& map) {
  std::vector<PointSet> table;
  table.reserve(static_cast<std::size_t>(map.sub_size()));
  for (int x : a) table.push_back(map.to_sub(s.min_nbhd(x) & a));
  return table;
}

}  // namespace

Space subspace(const Space& s, const PointSet& a) {
  if (a.universe_size() != s.size()) {
    throw UniverseMismatch("subspace: subset universe does not match the space");
  }
  const SubspaceMap map = subspace_map(a);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(map.sub_size()));
  for (int x : a) labels.push_back(s.label_of(x));
  return Space::unchecked(subspace_table(s, a, map), std::move(labels));
}

Space subspace_unlabeled(const Space& s, const PointSet& a) {
  if (a.universe_size() != s.size()) {
    throw UniverseMismatch("subspace: subset universe does not match the space");
  }
  return Space::unchecked(subspace_table(s, a, subspace_map(a)));
}

Space product(const Space& s, const Space& t) {
  const long points = static_cast<long>(s.size()) * static_cast<long>(t.size());
  if (points > PointSet::kMaxUniverse) {
    throw CapacityExceeded("product: " + std::to_string(s.size()) + " x " +
                           std::to_string(t.size()) + " exceeds " +
                           std::to_string(PointSet::kMaxUniverse) + " points");
  }
  const int n = static_cast<int>(points);
  const int cols = t.size();
  std::vector<PointSet> table;
  table.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < cols; ++y) {
      PointSet u(n);
      for (int px : s.min_nbhd(x)) {
        for (int py : t.min_nbhd(y)) u = u.with(px * cols + py);
      }
      table.push_back(u);
    }
  }
  std::optional<std::vector<std::string>> labels;
  if (s.has_labels() || t.has_labels()) {
    labels.emplace();
    labels->reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < cols; ++y) {
        labels->push_back("(" + s.label_of(x) + "," + t.label_of(y) + ")");
      }
    }
  }
  return Space::unchecked(std::move(table), std::move(labels));
}

Space khalimsky_window(long a, long b) {
  if (a > b) throw BadRange("khalimsky_window: a > b");
  const long count = b - a + 1;
  if (count > PointSet::kMaxUniverse) {
    throw BadRange("khalimsky_window: window of " + std::to_string(count) +
                   " points exceeds " + std::to_string(PointSet::kMaxUniverse));
  }
  const int n = static_cast<int>(count);
  std::vector<PointSet> table;
  std::vector<std::string> labels;
  table.reserve(static_cast<std::size_t>(n));
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long v = a + i;
    PointSet u(n);
    if (v % 2 != 0) {
      u = u.with(i);
    } else {
      for (long w = v - 1; w <= v + 1; ++w) {
        if (w >= a && w <= b) u = u.with(static_cast<int>(w - a));
      }
    }
    table.push_back(u);
    labels.push_back(std::to_string(v));
  }
  return new_space(std::move(table), std::move(labels));
}

}  // namespace topo
