#pragma once

// Streaming enumeration of every topology on n labeled points, plus
// canonicalization up to homeomorphism.
//
// A minimal-neighborhood table is exactly a reflexive transitive boolean
// matrix (row x = min_nbhd[x]), so the stream backtracks over rows with
// partial-transitivity pruning instead of filtering all 2^(n^2-n) relations.
// Emission order is lexicographic on the row bitmasks, which makes resumed
// and partitioned runs deterministic.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "topo/space.hpp"

namespace topo {

inline constexpr int kMaxEnumeration = 7;   // labeled streaming
inline constexpr int kMaxCanonical = 10;    // permutation search

class TopologyEnumerator {
 public:
  explicit TopologyEnumerator(int n);

  /// Enumerates only the tables whose first row equals `fixed_first_row`
  /// (one branch of the DFS; the unit of work for parallel partitioning).
  TopologyEnumerator(int n, std::uint64_t fixed_first_row);

  /// Next space in lexicographic row order, or nullopt when exhausted.
  std::optional<Space> next();

  std::uint64_t emitted() const { return emitted_; }
  int n() const { return n_; }

 private:
  bool row_admissible(int level, std::uint64_t row) const;

  int n_;
  std::uint64_t full_ = 0;
  int base_level_ = 0;  // rows below this are pinned (branch mode)
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> last_tried_;  // 0 = nothing tried yet at that level
  int level_ = 0;
  bool exhausted_ = false;
  bool empty_emitted_ = false;  // n == 0 emits the empty space exactly once
  std::uint64_t emitted_ = 0;
};

/// First-row values partitioning the full stream into disjoint branches, in
/// emission order. Empty for n == 0 (the driver treats that as one unit).
std::vector<std::uint64_t> first_row_branches(int n);

/// Runs `fn` on every topology on n labeled points, in emission order.
void for_each_topology(int n, const std::function<void(const Space&)>& fn);

// Relabeling-invariant encoding: the lexicographically least neighborhood
// table over all point permutations that sort points by the invariant vector
// (|min_nbhd[x]|, |closure{x}|). Two spaces have equal forms iff they are
// homeomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.rows == b.rows;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.rows < b.rows;
  }

  /// Byte key for hashed containers.
  std::string key() const;
};

CanonicalForm canonical_form(const Space& s);
bool is_homeomorphic(const Space& a, const Space& b);

struct TopologyCounts {
  std::uint64_t labeled = 0;
  std::optional<std::uint64_t> canonical;  // homeomorphism classes, when requested
};

/// Streams the enumeration and counts. Labeled counting allows n <= 7;
/// canonical deduplication allows n <= 6.
TopologyCounts count_topologies(int n, bool canonical = true);

/// Deterministic pseudo-random space: a random reflexive relation closed
/// transitively. A smoke-test generator; it makes no uniformity claims.
Space random_space(int n, std::mt19937_64& rng);

}  // namespace topo
