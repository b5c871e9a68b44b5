#pragma once

// Test-only oracles. Each one recomputes a result the library provides, by a
// deliberately different route, so the two can be compared. None of these
// call the implementation paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "topo/point_set.hpp"
#include "topo/space.hpp"

namespace oracle {

inline std::uint64_t subset_limit(int n) { return n == 0 ? 1 : (std::uint64_t{1} << n); }

// All open sets by brute force: scan every subset for up-closedness.
inline std::set<std::uint64_t> opens_by_scan(const topo::Space& s) {
  const int n = s.size();
  std::set<std::uint64_t> opens;
  for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
    bool open = true;
    for (int x = 0; x < n && open; ++x) {
      if ((mask >> x) & 1u) open = (s.min_nbhd(x).bits() & ~mask) == 0;
    }
    if (open) opens.insert(mask);
  }
  return opens;
}

// Smallest closed superset, through the open family: the complement of the
// union of all opens disjoint from A.
inline topo::PointSet closure_by_opens(const topo::Space& s, const topo::PointSet& a) {
  const int n = s.size();
  std::uint64_t avoid = 0;
  for (std::uint64_t open : opens_by_scan(s)) {
    if ((open & a.bits()) == 0) avoid |= open;
  }
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  return topo::PointSet::from_bits(n, full & ~avoid);
}

// Largest open subset, through the open family.
inline topo::PointSet interior_by_opens(const topo::Space& s, const topo::PointSet& a) {
  std::uint64_t grow = 0;
  for (std::uint64_t open : opens_by_scan(s)) {
    if ((open & ~a.bits()) == 0) grow |= open;
  }
  return topo::PointSet::from_bits(s.size(), grow);
}

// The opens generated by a subbasis: all finite intersections, then all
// unions, iterated to a fixpoint.
inline std::set<std::uint64_t> generated_opens(int n, const std::vector<topo::PointSet>& family) {
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> basis;
  basis.insert(full);  // empty intersection
  for (const topo::PointSet& f : family) basis.insert(f.bits());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> members(basis.begin(), basis.end());
    for (std::uint64_t a : members) {
      for (std::uint64_t b : members) {
        if (basis.insert(a & b).second) grew = true;
      }
    }
  }
  std::set<std::uint64_t> opens = basis;
  opens.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> members(opens.begin(), opens.end());
    for (std::uint64_t a : members) {
      for (std::uint64_t b : members) {
        if (opens.insert(a | b).second) grew = true;
      }
    }
  }
  return opens;
}

// Direct Kuratowski definition of scattered: every nonempty subset has an
// isolated point within itself. No peeling.
inline bool scattered_by_definition(const topo::Space& s, const topo::PointSet& a) {
  const int n = s.size();
  std::uint64_t b = a.bits();
  while (true) {
    if (b != 0) {
      bool has_isolated = false;
      for (int x = 0; x < n && !has_isolated; ++x) {
        if ((b >> x) & 1u) {
          has_isolated = (s.min_nbhd(x).bits() & b) == (std::uint64_t{1} << x);
        }
      }
      if (!has_isolated) return false;
    }
    if (b == 0) break;
    b = (b - 1) & a.bits();
  }
  return true;
}

// Homeomorphism by exhaustive permutation search.
inline bool homeomorphic_by_brute_force(const topo::Space& s, const topo::Space& t) {
  if (s.size() != t.size()) return false;
  const int n = s.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int x = 0; x < n && match; ++x) {
      std::uint64_t mapped = 0;
      for (int y : s.min_nbhd(x)) mapped |= std::uint64_t{1} << perm[static_cast<std::size_t>(y)];
      match = mapped == t.min_nbhd(perm[static_cast<std::size_t>(x)]).bits();
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Independent generator: filter every reflexive boolean matrix on n points
// for transitivity. Exponential in n^2; fine through n = 5.
inline std::uint64_t count_topologies_by_matrix_filter(int n) {
  if (n == 0) return 1;
  const int off_diagonal = n * (n - 1);
  std::uint64_t count = 0;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t limit = std::uint64_t{1} << off_diagonal;
  for (std::uint64_t code = 0; code < limit; ++code) {
    std::uint64_t c = code;
    for (int x = 0; x < n; ++x) {
      std::uint64_t row = std::uint64_t{1} << x;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (c & 1u) row |= std::uint64_t{1} << y;
        c >>= 1;
      }
      rows[static_cast<std::size_t>(x)] = row;
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      for (int y = 0; y < n && transitive; ++y) {
        if ((rows[static_cast<std::size_t>(x)] >> y) & 1u) {
          transitive = (rows[static_cast<std::size_t>(y)] & ~rows[static_cast<std::size_t>(x)]) == 0;
        }
      }
    }
    if (transitive) ++count;
  }
  return count;
}

// Independent generator: close every family of proper nonempty subsets under
// union and intersection (with {} and X adjoined) and collect the distinct
// results. Every topology is the closure of itself, so this produces exactly
// the topologies on n points. Doubly exponential; n <= 3 only.
inline std::set<std::set<std::uint64_t>> topologies_by_family_closure(int n) {
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> proper;
  for (std::uint64_t m = 1; m < full; ++m) proper.push_back(m);

  std::set<std::set<std::uint64_t>> result;
  const std::uint64_t family_limit = std::uint64_t{1} << proper.size();
  for (std::uint64_t pick = 0; pick < family_limit; ++pick) {
    std::set<std::uint64_t> fam = {0, full};
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if ((pick >> i) & 1u) fam.insert(proper[i]);
    }
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::uint64_t> members(fam.begin(), fam.end());
      for (std::uint64_t a : members) {
        for (std::uint64_t b : members) {
          if (fam.insert(a | b).second) grew = true;
          if (fam.insert(a & b).second) grew = true;
        }
      }
    }
    result.insert(fam);
  }
  return result;
}

// The open family of a space as a plain set of masks, computed by the scan
// oracle (for comparing against topologies_by_family_closure).
inline std::set<std::uint64_t> space_opens_as_masks(const topo::Space& s) {
  return opens_by_scan(s);
}

}  // namespace oracle
