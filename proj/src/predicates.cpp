#include "topo/predicates.hpp"

#include "topo/error.hpp"

namespace topo {

namespace {

bool locally_closed(const Space& s, const PointSet& a) {
  // A open in the subspace its closure carries.
  const PointSet cl = closure(s, a);
  const Space sub = subspace_unlabeled(s, cl);
  const PointSet a_sub = subspace_map(cl).to_sub(a);
  return interior(sub, a_sub) == a_sub;
}

}  // namespace

bool set_predicate(const Space& s, const PointSet& a, SetPredicateKind kind) {
  switch (kind) {
    case SetPredicateKind::Open:
      return interior(s, a) == a;
    case SetPredicateKind::Closed:
      return closure(s, a) == a;
    case SetPredicateKind::Dense:
      return closure(s, a) == s.universe();
    case SetPredicateKind::SemiOpen:
      return a.subset_of(closure(s, interior(s, a)));
    case SetPredicateKind::SemiClosed:
      return consolidation(s, a).subset_of(a);
    case SetPredicateKind::Preopen:
      return a.subset_of(consolidation(s, a));
    case SetPredicateKind::RegularOpen:
      return a == consolidation(s, a);
    case SetPredicateKind::RegularClosed:
      return a == closure(s, interior(s, a));
    case SetPredicateKind::NowhereDense:
      return consolidation(s, a).empty();
    case SetPredicateKind::BetaOpen:
      return a.subset_of(closure(s, consolidation(s, a)));
    case SetPredicateKind::LocallyClosed:
      return locally_closed(s, a);
  }
  throw Error("set_predicate: unreachable kind");
}

bool beta_open_direct(const Space& s, const PointSet& a, int cap) {
  if (s.size() > cap) {
    throw OracleCapExceeded("beta_open_direct: " + std::to_string(s.size()) +
                            " points exceeds oracle cap " + std::to_string(cap));
  }
  if (a.universe_size() != s.size()) {
    throw UniverseMismatch("beta_open_direct: subset universe mismatch");
  }
  const int n = s.size();
  const std::uint64_t limit = n == 0 ? 1 : (std::uint64_t{1} << n);
  const PointSet cl_a = closure(s, a);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const PointSet r = PointSet::from_bits(n, mask);
    if (!a.subset_of(r)) continue;
    if (!r.subset_of(cl_a)) continue;  // A dense in R: cl(A) & R == R
    if (closure(s, interior(s, r)) == r) return true;
  }
  return false;
}

ScatterResult is_scattered(const Space& s, const PointSet& a) {
  PointSet rest = a;
  int rank = 0;
  while (!rest.empty()) {
    const PointSet iso = isolated_points(s, rest);
    if (iso.empty()) return {false, rank};
    rest = rest - iso;
    ++rank;
  }
  return {true, rank};
}

bool is_alpha_scattered(const Space& s, const PointSet& a) {
  // cl_sub(I(A)) == A  <=>  A subset of cl(I(A)) in the ambient space.
  return a.subset_of(closure(s, isolated_points(s, a)));
}

PointSet alpha_scattered_witness(const Space& s, const PointSet& a) {
  return isolated_points(s, a);
}

namespace {

bool every_singleton(const Space& s, bool (*pred)(const Space&, const PointSet&)) {
  for (int x = 0; x < s.size(); ++x) {
    if (!pred(s, PointSet::singleton(s.size(), x))) return false;
  }
  return true;
}

}  // namespace

bool space_predicate(const Space& s, SpacePredicateKind kind) {
  switch (kind) {
    case SpacePredicateKind::T0: {
      for (int x = 0; x < s.size(); ++x) {
        for (int y = x + 1; y < s.size(); ++y) {
          if (s.min_nbhd(x) == s.min_nbhd(y)) return false;
        }
      }
      return true;
    }
    case SpacePredicateKind::T1:
      return every_singleton(s, [](const Space& sp, const PointSet& pt) {
        return set_predicate(sp, pt, SetPredicateKind::Closed);
      });
    case SpacePredicateKind::TD: {
      const bool via_locally_closed = every_singleton(s, [](const Space& sp, const PointSet& pt) {
        return set_predicate(sp, pt, SetPredicateKind::LocallyClosed);
      });
      const bool via_derived_closed = every_singleton(s, [](const Space& sp, const PointSet& pt) {
        return set_predicate(sp, derived_set(sp, pt), SetPredicateKind::Closed);
      });
      if (via_locally_closed != via_derived_closed) {
        throw Error("t_d: the two equivalent decision routes disagree");
      }
      return via_locally_closed;
    }
    case SpacePredicateKind::SemiTD:
      return every_singleton(s, [](const Space& sp, const PointSet& pt) {
        return set_predicate(sp, pt, SetPredicateKind::Open) ||
               set_predicate(sp, pt, SetPredicateKind::SemiClosed);
      });
    case SpacePredicateKind::DenseInItself:
      return open_screen(s).empty();
    case SpacePredicateKind::TraceSpace:
      return is_alpha_scattered(s, s.universe());
  }
  throw Error("space_predicate: unreachable kind");
}

std::string_view to_string(SetPredicateKind kind) {
  switch (kind) {
    case SetPredicateKind::Open: return "open";
    case SetPredicateKind::Closed: return "closed";
    case SetPredicateKind::Dense: return "dense";
    case SetPredicateKind::SemiOpen: return "semi_open";
    case SetPredicateKind::SemiClosed: return "semi_closed";
    case SetPredicateKind::Preopen: return "preopen";
    case SetPredicateKind::RegularOpen: return "regular_open";
    case SetPredicateKind::RegularClosed: return "regular_closed";
    case SetPredicateKind::NowhereDense: return "nowhere_dense";
    case SetPredicateKind::BetaOpen: return "beta_open";
    case SetPredicateKind::LocallyClosed: return "locally_closed";
  }
  return "?";
}

std::string_view to_string(SpacePredicateKind kind) {
  switch (kind) {
    case SpacePredicateKind::T0: return "t0";
    case SpacePredicateKind::T1: return "t1";
    case SpacePredicateKind::TD: return "t_d";
    case SpacePredicateKind::SemiTD: return "semi_t_d";
    case SpacePredicateKind::DenseInItself: return "dense_in_itself";
    case SpacePredicateKind::TraceSpace: return "trace_space";
  }
  return "?";
}

std::optional<SetPredicateKind> set_predicate_from_name(std::string_view name) {
  for (SetPredicateKind kind :
       {SetPredicateKind::Open, SetPredicateKind::Closed, SetPredicateKind::Dense,
        SetPredicateKind::SemiOpen, SetPredicateKind::SemiClosed, SetPredicateKind::Preopen,
        SetPredicateKind::RegularOpen, SetPredicateKind::RegularClosed,
        SetPredicateKind::NowhereDense, SetPredicateKind::BetaOpen,
        SetPredicateKind::LocallyClosed}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<SpacePredicateKind> space_predicate_from_name(std::string_view name) {
  for (SpacePredicateKind kind :
       {SpacePredicateKind::T0, SpacePredicateKind::T1, SpacePredicateKind::TD,
        SpacePredicateKind::SemiTD, SpacePredicateKind::DenseInItself,
        SpacePredicateKind::TraceSpace}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

}  // namespace topo
