#pragma once

// Space: a finite topological space given by its minimal-open-neighborhood
// table. Every finite space is Alexandrov, so the table determines the whole
// topology: a set G is open iff min_nbhd[x] is contained in G for all x in G.
//
// Invariants enforced by new_space / Space::validate:
//   reflexivity   x in min_nbhd[x]
//   transitivity  y in min_nbhd[x]  =>  min_nbhd[y] subset of min_nbhd[x]
//
// Spaces are immutable after construction. Labels are presentation-only
// metadata; operator== ignores them (use equal_including_labels where labels
// matter, e.g. file round-trips).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/point_set.hpp"

namespace topo {

inline constexpr std::size_t kDefaultOpenCap = std::size_t{1} << 20;

class Space {
 public:
  /// Validated construction; prefer the new_space free function.
  static Space checked(std::vector<PointSet> min_nbhd,
                       std::optional<std::vector<std::string>> labels = std::nullopt);

  /// Construction WITHOUT invariant validation. For enumeration internals
  /// (tables valid by construction) and for test negative controls that need
  /// a deliberately broken table.
  static Space unchecked(std::vector<PointSet> min_nbhd,
                         std::optional<std::vector<std::string>> labels = std::nullopt);

  /// Throws ReflexivityViolation / TransitivityViolation / UniverseMismatch /
  /// CapacityExceeded naming the offending points.
  static void validate(const std::vector<PointSet>& min_nbhd);

  int size() const { return static_cast<int>(min_nbhd_.size()); }
  const PointSet& min_nbhd(int x) const { return min_nbhd_.at(static_cast<std::size_t>(x)); }
  const std::vector<PointSet>& table() const { return min_nbhd_; }

  PointSet universe() const { return PointSet::full(size()); }
  PointSet empty_set() const { return PointSet(size()); }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<std::string>* labels() const { return labels_ ? &*labels_ : nullptr; }

  /// Display label of a point: the stored label, or the index in decimal.
  std::string label_of(int x) const;

  /// Index of the point with the given label (or, on an unlabeled space, the
  /// given decimal index). std::nullopt when absent.
  std::optional<int> index_of_label(const std::string& text) const;

  /// Equality of the neighborhood tables; labels are ignored.
  friend bool operator==(const Space& a, const Space& b) {
    return a.min_nbhd_ == b.min_nbhd_;
  }
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

 private:
  Space(std::vector<PointSet> min_nbhd, std::optional<std::vector<std::string>> labels)
      : min_nbhd_(std::move(min_nbhd)), labels_(std::move(labels)) {}

  std::vector<PointSet> min_nbhd_;
  std::optional<std::vector<std::string>> labels_;
};

bool equal_including_labels(const Space& a, const Space& b);

/// Validated Space from a minimal-neighborhood table.
Space new_space(std::vector<PointSet> min_nbhd,
                std::optional<std::vector<std::string>> labels = std::nullopt);

/// The space generated by an arbitrary family of subsets of [0, n) taken as a
/// subbasis: opens are all unions of finite intersections of family members
/// (plus the empty set and the whole space). For a finite subbasis the
/// minimal open neighborhood of x is the intersection of all members
/// containing x (the whole space when none does).
Space generate_topology(int n, const std::vector<PointSet>& family);

// Explicit list of all open sets; the oracle representation of the topology.
struct OpenFamily {
  int n = 0;
  std::vector<PointSet> opens;  // sorted ascending by bit pattern

  bool contains(const PointSet& candidate) const;
  std::size_t count() const { return opens.size(); }
};

/// Enumerates the up-closed sets of the neighborhood table. Throws
/// TooManyOpens once the family grows past `cap`.
OpenFamily open_sets(const Space& s, std::size_t cap = kDefaultOpenCap);

// Relabeling between a space and the subspace induced on A: member k of A (in
// ascending order) becomes point k of the subspace.
struct SubspaceMap {
  std::vector<int> to_parent;  // subspace index -> parent index
  int parent_universe = 0;

  int sub_size() const { return static_cast<int>(to_parent.size()); }
  PointSet to_sub(const PointSet& parent_set) const;
  PointSet to_parent_set(const PointSet& sub_set) const;
  int sub_index_of(int parent_point) const;
};

SubspaceMap subspace_map(const PointSet& a);

/// Subspace topology on A: min_nbhd of (the relabeling of) x is
/// min_nbhd[x] & A. Valid because finite spaces are Alexandrov: the subspace
/// minimal neighborhood is the trace of the parent one. Labels carry the
/// parent identities (parent labels when present, parent indices otherwise).
Space subspace(const Space& s, const PointSet& a);

/// Subspace without label bookkeeping; table identical to subspace().
Space subspace_unlabeled(const Space& s, const PointSet& a);

/// Product space on pairs, row-major: (x, y) -> x * |T| + y, with
/// min_nbhd[(x,y)] = min_nbhd_S[x] x min_nbhd_T[y]. For finite spaces this
/// is exactly the product topology. Throws CapacityExceeded when
/// |S| * |T| > 63. Labels "(a,b)" are attached when either factor is labeled.
Space product(const Space& s, const Space& t);

/// The digital-line window on the integer interval [a, b]: the minimal
/// neighborhood of an odd integer is itself, and of an even integer 2k it is
/// {2k-1, 2k, 2k+1} clipped to the window. Point i carries label a+i.
///
/// A window is the subspace topology the digital line induces on [a, b];
/// predicates evaluated on a window speak about the window, not the whole
/// line. An even endpoint keeps only the inner half of its neighborhood, so
/// e.g. the open screen of a window can differ from the trace of the whole
/// line's screen.
Space khalimsky_window(long a, long b);

}  // namespace topo
