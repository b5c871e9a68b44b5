#include "topo/operators.hpp"

#include "topo/error.hpp"

namespace topo {

namespace {

void check_universe(const Space& s, const PointSet& a) {
  if (a.universe_size() != s.size()) {
    throw UniverseMismatch("operator input universe does not match the space");
  }
}

}  // namespace

PointSet closure(const Space& s, const PointSet& a) {
  check_universe(s, a);
  PointSet out(s.size());
  for (int x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).intersects(a)) out = out.with(x);
  }
  return out;
}

PointSet interior(const Space& s, const PointSet& a) {
  check_universe(s, a);
  PointSet out(s.size());
  for (int x : a) {
    if (s.min_nbhd(x).subset_of(a)) out = out.with(x);
  }
  return out;
}

PointSet consolidation(const Space& s, const PointSet& a) {
  return interior(s, closure(s, a));
}

PointSet derived_set(const Space& s, const PointSet& a) {
  check_universe(s, a);
  PointSet out(s.size());
  for (int x = 0; x < s.size(); ++x) {
    if (s.min_nbhd(x).without(x).intersects(a)) out = out.with(x);
  }
  return out;
}

PointSet isolated_points(const Space& s, const PointSet& a) {
  check_universe(s, a);
  PointSet out(s.size());
  for (int x : a) {
    if ((s.min_nbhd(x) & a) == PointSet::singleton(s.size(), x)) out = out.with(x);
  }
  return out;
}

PointSet open_screen(const Space& s) {
  return isolated_points(s, s.universe());
}

OperatorResult apply_operator(const Space& s, std::string_view name, const PointSet& a) {
  if (name == "closure") return {"closure", a, closure(s, a)};
  if (name == "interior") return {"interior", a, interior(s, a)};
  if (name == "consolidation") return {"consolidation", a, consolidation(s, a)};
  if (name == "derived") return {"derived", a, derived_set(s, a)};
  if (name == "isolated") return {"isolated", a, isolated_points(s, a)};
  if (name == "screen") return {"screen", s.universe(), open_screen(s)};
  throw UnknownPredicate(std::string(name));
}

}  // namespace topo
