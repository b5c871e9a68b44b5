#include "topo/harness.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "topo/error.hpp"
#include "topo/operators.hpp"
#include "topo/space_io.hpp"

namespace topo {

namespace {

bool hypothesis_c1(const Space& s) {
  return space_predicate(s, SpacePredicateKind::DenseInItself) &&
         space_predicate(s, SpacePredicateKind::SemiTD);
}

std::uint64_t subset_limit(int n) { return n == 0 ? 1 : (std::uint64_t{1} << n); }

void check_subset_scan_cap(const Space& s, int cap, const char* who) {
  if (s.size() > cap) {
    throw CapacityExceeded(std::string(who) + ": " + std::to_string(s.size()) +
                           " points exceeds subset-scan cap " + std::to_string(cap));
  }
}

std::string subset_in_labels(const Space& s, const PointSet& a) {
  if (a.empty()) return "{}";
  std::string out;
  for (int x : a) {
    if (!out.empty()) out += ' ';
    out += s.label_of(x);
  }
  return out;
}

}  // namespace

void CheckReport::merge(CheckReport&& other) {
  if (check_name.empty()) check_name = std::move(other.check_name);
  spaces_checked += other.spaces_checked;
  substantive_passes += other.substantive_passes;
  vacuous_passes += other.vacuous_passes;
  for (auto& f : other.failures) failures.push_back(std::move(f));
  for (auto& n : other.notes) notes.push_back(std::move(n));
  elapsed += other.elapsed;
}

void CheckReport::sort_failures() {
  auto key = [](const Failure& f) {
    std::vector<std::uint64_t> rows;
    if (f.space.size() <= kMaxCanonical) {
      rows = canonical_form(f.space).rows;
    } else {
      for (int x = 0; x < f.space.size(); ++x) rows.push_back(f.space.min_nbhd(x).bits());
    }
    std::vector<std::uint64_t> sets;
    for (const PointSet& p : f.subsets) sets.push_back(p.bits());
    return std::make_tuple(f.space.size(), std::move(rows), std::move(sets), f.diagnostic);
  };
  std::stable_sort(failures.begin(), failures.end(),
                   [&](const Failure& a, const Failure& b) { return key(a) < key(b); });
}

// ---- prop1: the four-way equivalence ---------------------------------------

Prop1Result check_proposition1(const Space& s, int subset_scan_cap) {
  check_subset_scan_cap(s, subset_scan_cap, "check_proposition1");
  const int n = s.size();

  const bool c1 = hypothesis_c1(s);

  bool c2 = true;
  for (int x = 0; x < n; ++x) {
    if (!set_predicate(s, PointSet::singleton(n, x), SetPredicateKind::NowhereDense)) {
      c2 = false;
      break;
    }
  }

  // All subsets of a finite space are finite, so F subset of N means every
  // subset is nowhere dense. Scanned over all 2^n subsets rather than
  // reduced to singletons, to keep the four conditions independent.
  bool c3 = true;
  for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
    if (!set_predicate(s, PointSet::from_bits(n, mask), SetPredicateKind::NowhereDense)) {
      c3 = false;
      break;
    }
  }

  bool c4 = true;
  for (int x = 0; x < n; ++x) {
    if (set_predicate(s, PointSet::singleton(n, x), SetPredicateKind::Preopen)) {
      c4 = false;
      break;
    }
  }

  const bool consistent = (c1 == c2) && (c2 == c3) && (c3 == c4);
  return {c1, c2, c3, c4, consistent};
}

// ---- thm1: alpha-scattered sets are nowhere dense, with witnesses ----------

CheckReport check_theorem1(const Space& s) {
  check_subset_scan_cap(s, kProp1SubsetScanCap, "check_theorem1");
  CheckReport rep;
  rep.check_name = "thm1";
  rep.spaces_checked = 1;
  const int n = s.size();
  const bool c1 = hypothesis_c1(s);
  for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
    if (!c1) {
      ++rep.vacuous_passes;
      continue;
    }
    const PointSet a = PointSet::from_bits(n, mask);
    if (is_alpha_scattered(s, a) &&
        !set_predicate(s, a, SetPredicateKind::NowhereDense)) {
      rep.failures.push_back(
          {s, {a}, "alpha-scattered subset of a dense-in-itself semi-T_D space is not nowhere dense"});
    } else {
      ++rep.substantive_passes;
    }
  }
  return rep;
}

Witness theorem1_witness(const Space& s, const PointSet& a) {
  if (!is_alpha_scattered(s, a)) {
    throw PreconditionViolated("theorem1_witness: subset is not alpha-scattered");
  }
  const PointSet u = consolidation(s, a);
  if (u.empty()) {
    throw PreconditionViolated("theorem1_witness: subset has empty consolidation");
  }
  // U is a nonempty open set inside cl(A); alpha-scatteredness forces it to
  // meet I(A). If it does not, the proof step itself is refuted.
  const PointSet hit = u & isolated_points(s, a);
  if (hit.empty()) {
    throw InternalProofStepFailed(
        "theorem1_witness: nonempty open subset of cl(A) misses the isolated points of A");
  }
  const int x = hit.least();
  const PointSet v = s.min_nbhd(x);
  const PointSet w = u & v;
  return Witness{x, w, a, u, v};
}

std::optional<std::string> witness_violation(const Space& s, const Witness& wit) {
  const int n = s.size();
  const PointSet x_single = PointSet::singleton(n, wit.x);
  if (wit.w.empty()) return "W is empty";
  if (!set_predicate(s, wit.w, SetPredicateKind::Open)) return "W is not open";
  if (!wit.w.subset_of(closure(s, x_single))) return "W is not contained in cl({x})";
  if (!isolated_points(s, wit.a).contains(wit.x)) return "x is not an isolated point of A";
  if ((wit.v & wit.a) != x_single) return "V & A != {x}";
  if (wit.w != (wit.u & wit.v)) return "W != U & V";
  if (consolidation(s, x_single).empty()) {
    return "witness does not certify a nonempty consolidation for {x}";
  }
  return std::nullopt;
}

CheckReport check_witness_extraction(const Space& s) {
  check_subset_scan_cap(s, kProp1SubsetScanCap, "check_witness_extraction");
  CheckReport rep;
  rep.check_name = "witness";
  rep.spaces_checked = 1;
  const int n = s.size();
  for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
    const PointSet a = PointSet::from_bits(n, mask);
    if (!is_alpha_scattered(s, a) || consolidation(s, a).empty()) {
      ++rep.vacuous_passes;
      continue;
    }
    try {
      const Witness wit = theorem1_witness(s, a);
      if (auto violation = witness_violation(s, wit)) {
        rep.failures.push_back({s, {a}, "witness invariant violated: " + *violation});
      } else {
        ++rep.substantive_passes;
      }
    } catch (const InternalProofStepFailed& err) {
      rep.failures.push_back({s, {a}, err.what()});
    }
  }
  return rep;
}

// ---- obs2: heredity along beta-open subspaces and finite products ----------

CheckReport check_observation2_subspace(const Space& s) {
  check_subset_scan_cap(s, kProp1SubsetScanCap, "check_observation2_subspace");
  CheckReport rep;
  rep.check_name = "obs2_subspace";
  rep.spaces_checked = 1;
  const int n = s.size();
  const bool space_c1 = hypothesis_c1(s);
  for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
    const PointSet b = PointSet::from_bits(n, mask);
    if (!set_predicate(s, b, SetPredicateKind::BetaOpen)) continue;
    const Space sub = subspace_unlabeled(s, b);

    // Stated form: the hypothesis is hereditary along beta-open subsets.
    if (!space_c1) {
      ++rep.vacuous_passes;
    } else if (hypothesis_c1(sub)) {
      ++rep.substantive_passes;
    } else {
      rep.failures.push_back(
          {s, {b}, "beta-open subspace of a dense-in-itself semi-T_D space lost the property"});
    }

    // Derived pointwise strengthening; substantive on finite spaces.
    int sub_index = 0;
    for (int x : b) {
      const int xi = sub_index++;
      if (!set_predicate(s, PointSet::singleton(n, x), SetPredicateKind::NowhereDense)) {
        ++rep.vacuous_passes;
        continue;
      }
      if (set_predicate(sub, PointSet::singleton(sub.size(), xi),
                        SetPredicateKind::NowhereDense)) {
        ++rep.substantive_passes;
      } else {
        rep.failures.push_back({s,
                                {b, PointSet::singleton(n, x)},
                                "derived-pointwise: nowhere dense singleton stopped being "
                                "nowhere dense in the beta-open subspace"});
      }
    }
  }
  return rep;
}

CheckReport check_observation2_product(const std::vector<Space>& factors) {
  if (factors.size() < 2 || factors.size() > 3) {
    throw CapacityExceeded("check_observation2_product: arity must be 2 or 3");
  }
  CheckReport rep;
  rep.check_name = "obs2_product";
  rep.spaces_checked = 1;

  Space prod = product(factors[0], factors[1]);
  if (factors.size() == 3) prod = product(prod, factors[2]);

  bool any_c1 = false;
  for (const Space& f : factors) any_c1 = any_c1 || hypothesis_c1(f);

  if (!any_c1) {
    ++rep.vacuous_passes;
  } else if (hypothesis_c1(prod)) {
    ++rep.substantive_passes;
  } else {
    rep.failures.push_back(
        {prod, {}, "product with a dense-in-itself semi-T_D factor lost the property"});
  }

  // Derived pointwise variant: a coordinate singleton that is nowhere dense
  // in its factor forces the product singleton to be nowhere dense.
  const int total = prod.size();
  for (int p = 0; p < total; ++p) {
    int rest = p;
    std::vector<int> coords(factors.size());
    for (std::size_t j = factors.size(); j-- > 0;) {
      coords[j] = rest % factors[j].size();
      rest /= factors[j].size();
    }
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const Space& fj = factors[j];
      if (!set_predicate(fj, PointSet::singleton(fj.size(), coords[j]),
                         SetPredicateKind::NowhereDense)) {
        ++rep.vacuous_passes;
        continue;
      }
      if (set_predicate(prod, PointSet::singleton(total, p), SetPredicateKind::NowhereDense)) {
        ++rep.substantive_passes;
      } else {
        rep.failures.push_back({prod,
                                {PointSet::singleton(total, p)},
                                "derived-pointwise: product singleton not nowhere dense though "
                                "coordinate " + std::to_string(j) + " is"});
      }
    }
  }
  return rep;
}

// ---- Scattered ideal -----------------------------------------------------

CheckReport check_scattered_ideal(const Space& s) {
  if (s.size() > kIdealAllPairsCap) {
    throw CapacityExceeded("check_scattered_ideal: all-pairs scan capped at n <= " +
                           std::to_string(kIdealAllPairsCap));
  }
  CheckReport rep;
  rep.check_name = "ideal";
  rep.spaces_checked = 1;
  const int n = s.size();
  const std::uint64_t limit = subset_limit(n);

  std::vector<std::uint8_t> scattered_tbl(limit), nd_tbl(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const PointSet a = PointSet::from_bits(n, mask);
    scattered_tbl[mask] = is_scattered(s, a).scattered ? 1 : 0;
    nd_tbl[mask] = set_predicate(s, a, SetPredicateKind::NowhereDense) ? 1 : 0;
  }

  // Finite additivity of the scattered family, and its promised equivalence
  // with T0.
  bool additive = true;
  std::uint64_t wit_a = 0, wit_b = 0;
  for (std::uint64_t a = 0; a < limit && additive; ++a) {
    if (!scattered_tbl[a]) continue;
    for (std::uint64_t b = 0; b < limit; ++b) {
      if (!scattered_tbl[b]) continue;
      if (!scattered_tbl[a | b]) {
        additive = false;
        wit_a = a;
        wit_b = b;
        break;
      }
    }
  }
  const bool t0 = space_predicate(s, SpacePredicateKind::T0);
  if (additive == t0) {
    ++rep.substantive_passes;
  } else {
    std::ostringstream diag;
    diag << "scattered-ideal equivalence failed: additive=" << additive << " t0=" << t0;
    std::vector<PointSet> sets;
    if (!additive) {
      sets.push_back(PointSet::from_bits(n, wit_a));
      sets.push_back(PointSet::from_bits(n, wit_b));
    }
    rep.failures.push_back({s, std::move(sets), diag.str()});
  }
  if (!additive && !t0) {
    const PointSet a = PointSet::from_bits(n, wit_a);
    const PointSet b = PointSet::from_bits(n, wit_b);
    rep.notes.push_back("non-additive scattered family (space not t0): A={" +
                        subset_in_labels(s, a) + "} B={" + subset_in_labels(s, b) +
                        "} with A|B not scattered");
  }

  // Heredity of scattered sets, unconditionally.
  for (std::uint64_t a = 0; a < limit; ++a) {
    std::uint64_t b = a;
    while (true) {
      if (!scattered_tbl[a]) {
        ++rep.vacuous_passes;
      } else if (scattered_tbl[b]) {
        ++rep.substantive_passes;
      } else {
        rep.failures.push_back({s,
                                {PointSet::from_bits(n, a), PointSet::from_bits(n, b)},
                                "scattered set has a non-scattered subset"});
      }
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }

  // The nowhere dense family is an ideal: heredity plus finite additivity.
  for (std::uint64_t a = 0; a < limit; ++a) {
    std::uint64_t b = a;
    while (true) {
      if (!nd_tbl[a]) {
        ++rep.vacuous_passes;
      } else if (nd_tbl[b]) {
        ++rep.substantive_passes;
      } else {
        rep.failures.push_back({s,
                                {PointSet::from_bits(n, a), PointSet::from_bits(n, b)},
                                "nowhere dense set has a non-nowhere-dense subset"});
      }
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }
  for (std::uint64_t a = 0; a < limit; ++a) {
    for (std::uint64_t b = 0; b < limit; ++b) {
      if (!(nd_tbl[a] && nd_tbl[b])) {
        ++rep.vacuous_passes;
      } else if (nd_tbl[a | b]) {
        ++rep.substantive_passes;
      } else {
        rep.failures.push_back({s,
                                {PointSet::from_bits(n, a), PointSet::from_bits(n, b)},
                                "union of nowhere dense sets is not nowhere dense"});
      }
    }
  }

  // On a finite space every subset is finite, so the finite-set family is the
  // power set and is an ideal set-theoretically; recorded as one instance.
  ++rep.substantive_passes;

  return rep;
}

// ---- Micro-lemma suite ---------------------------------------------------

namespace {

// The existential beta-open scan with the regular-closed candidates hoisted
// out per space; same decision as beta_open_direct.
struct BetaOracleTable {
  std::vector<std::uint64_t> regular_closed;

  explicit BetaOracleTable(const Space& s) {
    const int n = s.size();
    for (std::uint64_t mask = 0; mask < subset_limit(n); ++mask) {
      const PointSet r = PointSet::from_bits(n, mask);
      if (closure(s, interior(s, r)) == r) regular_closed.push_back(mask);
    }
  }

  bool decide(const Space& s, const PointSet& a) const {
    const std::uint64_t a_bits = a.bits();
    const std::uint64_t cl_bits = closure(s, a).bits();
    for (std::uint64_t r : regular_closed) {
      if ((a_bits & ~r) == 0 && (r & ~cl_bits) == 0) return true;
    }
    return false;
  }
};

}  // namespace

CheckReport run_lemma_suite(const Space& s) {
  check_subset_scan_cap(s, kBetaOracleCap, "run_lemma_suite");
  CheckReport rep;
  rep.check_name = "lemmas";
  rep.spaces_checked = 1;
  const int n = s.size();
  const std::uint64_t limit = subset_limit(n);

  auto fail = [&](const char* lemma, std::vector<PointSet> sets) {
    rep.failures.push_back({s, std::move(sets), std::string("lemma ") + lemma});
  };
  auto implication = [&](bool antecedent, bool consequent, const char* lemma,
                         std::vector<PointSet> sets) {
    if (!antecedent) {
      ++rep.vacuous_passes;
    } else if (consequent) {
      ++rep.substantive_passes;
    } else {
      fail(lemma, std::move(sets));
    }
  };

  const BetaOracleTable beta_oracle(s);

  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const PointSet a = PointSet::from_bits(n, mask);
    const bool preopen = set_predicate(s, a, SetPredicateKind::Preopen);
    const bool semi_closed = set_predicate(s, a, SetPredicateKind::SemiClosed);
    const bool nowhere_dense = set_predicate(s, a, SetPredicateKind::NowhereDense);
    const bool beta_formula = set_predicate(s, a, SetPredicateKind::BetaOpen);
    const bool alpha = is_alpha_scattered(s, a);

    if (beta_formula == beta_oracle.decide(s, a)) {
      ++rep.substantive_passes;
    } else {
      fail("beta_formula_vs_oracle", {a});
    }

    implication(nowhere_dense, semi_closed, "nowhere_dense_implies_semi_closed", {a});
    implication(preopen && semi_closed, set_predicate(s, a, SetPredicateKind::RegularOpen),
                "preopen_semi_closed_implies_regular_open", {a});
    implication(set_predicate(s, a, SetPredicateKind::Open) ||
                    set_predicate(s, a, SetPredicateKind::Dense),
                preopen, "open_or_dense_implies_preopen", {a});
    implication(preopen, beta_formula, "preopen_implies_beta_open", {a});
    implication(is_scattered(s, a).scattered, alpha, "scattered_implies_alpha_scattered", {a});

    // A trace-space witness really is a fenestration of the subspace:
    // disjoint nonempty open singletons with dense union.
    if (!alpha) {
      ++rep.vacuous_passes;
    } else {
      const Space sub = subspace_unlabeled(s, a);
      const PointSet iso_sub = open_screen(sub);
      const PointSet iso_parent = subspace_map(a).to_parent_set(iso_sub);
      const bool singletons_open = iso_parent == isolated_points(s, a);
      const bool union_dense = closure(sub, iso_sub) == sub.universe();
      if (singletons_open && union_dense) {
        ++rep.substantive_passes;
      } else {
        fail("fenestration_is_valid", {a});
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    const PointSet single = PointSet::singleton(n, x);
    if (set_predicate(s, single, SetPredicateKind::Preopen) ||
        set_predicate(s, single, SetPredicateKind::NowhereDense)) {
      ++rep.substantive_passes;
    } else {
      fail("singleton_preopen_or_nowhere_dense", {single});
    }
  }

  // Heredity of scattered sets over all (A, B subset of A).
  std::vector<std::uint8_t> scattered_tbl(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    scattered_tbl[mask] = is_scattered(s, PointSet::from_bits(n, mask)).scattered ? 1 : 0;
  }
  for (std::uint64_t a = 0; a < limit; ++a) {
    std::uint64_t b = a;
    while (true) {
      implication(scattered_tbl[a] != 0, scattered_tbl[b] != 0, "scattered_hereditary",
                  {PointSet::from_bits(n, a), PointSet::from_bits(n, b)});
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }

  const bool t1 = space_predicate(s, SpacePredicateKind::T1);
  // On a corrupted table the two t_d decision routes can disagree; surface
  // that as a lemma failure instead of letting the exception abort the suite.
  try {
    const bool td = space_predicate(s, SpacePredicateKind::TD);
    const bool semi_td = space_predicate(s, SpacePredicateKind::SemiTD);
    implication(t1, td, "t1_implies_t_d", {});
    implication(td, semi_td, "t_d_implies_semi_t_d", {});
  } catch (const Error& err) {
    rep.failures.push_back({s, {}, std::string("lemma t_d_routes_agree: ") + err.what()});
  }

  bool discrete = true;
  for (int x = 0; x < n; ++x) {
    if (s.min_nbhd(x) != PointSet::singleton(n, x)) discrete = false;
  }
  if (t1 == discrete) {
    ++rep.substantive_passes;
  } else {
    fail("t1_iff_discrete", {});
  }

  return rep;
}

// ---- Implication search --------------------------------------------------

SearchResult search_implication(int n_max, const PredExpr& antecedent,
                                const PredExpr& consequent, SubsetQuantifier quantifier,
                                bool canonical_dedup) {
  if (n_max < 0 || n_max > 6) {
    throw CapacityExceeded("search capped at n_max <= 6");
  }
  SearchResult out;
  std::unordered_set<std::string> canon_seen;
  const bool space_only = antecedent.space_level_only() && consequent.space_level_only();

  auto record = [&](const Space& s, std::optional<PointSet> subset) {
    if (canonical_dedup) {
      if (!canon_seen.insert(canonical_form(s).key()).second) return;
    }
    out.witnesses.push_back({s, std::move(subset)});
  };

  for (int k = 0; k <= n_max; ++k) {
    for_each_topology(k, [&](const Space& s) {
      ++out.spaces_scanned;
      if (space_only) {
        if (!antecedent.eval(s, s.universe())) {
          ++out.vacuous;
        } else if (consequent.eval(s, s.universe())) {
          ++out.substantive;
        } else {
          ++out.failing;
          record(s, std::nullopt);
        }
        return;
      }
      bool recorded_for_space = false;
      for (std::uint64_t mask = 0; mask < subset_limit(k); ++mask) {
        const PointSet a = PointSet::from_bits(k, mask);
        if (!antecedent.eval(s, a)) {
          ++out.vacuous;
          continue;
        }
        if (consequent.eval(s, a)) {
          ++out.substantive;
          continue;
        }
        ++out.failing;
        if (quantifier == SubsetQuantifier::Exists && recorded_for_space) continue;
        record(s, a);
        recorded_for_space = true;
      }
    });
  }
  return out;
}

// ---- Suite driver --------------------------------------------------------

namespace {

constexpr int kVerifyCap = 6;
constexpr std::size_t kMaxNotesPerScope = 5;
constexpr int kSampledLemmaSpaces = 64;

using SpaceCheck = std::function<CheckReport(const Space&)>;

CheckReport run_branch(int n, std::uint64_t row0, const SpaceCheck& fn) {
  TopologyEnumerator stream(n, row0);
  CheckReport acc;
  while (auto s = stream.next()) acc.merge(fn(*s));
  return acc;
}

CheckReport sweep_enumeration(int n, int workers, const SpaceCheck& fn) {
  if (n == 0) return fn(Space::unchecked({}));
  const std::vector<std::uint64_t> branches = first_row_branches(n);
  std::vector<CheckReport> partial(branches.size());
  const int pool_size = std::max(1, std::min<int>(workers, static_cast<int>(branches.size())));
  if (pool_size == 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) partial[b] = run_branch(n, branches[b], fn);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(pool_size));
    for (int t = 0; t < pool_size; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t b = static_cast<std::size_t>(t); b < branches.size();
               b += static_cast<std::size_t>(pool_size)) {
            partial[b] = run_branch(n, branches[b], fn);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }
  // Merging in branch order keeps output independent of the worker count.
  CheckReport out;
  for (auto& p : partial) out.merge(std::move(p));
  return out;
}

struct WindowSpec {
  long lo;
  long hi;
  const char* scope;
};

constexpr WindowSpec kWindows[] = {{-5, 5, "w[-5..5]"}, {0, 9, "w[0..9]"}};

void finish_scope(LabeledReport& lr, std::chrono::steady_clock::time_point start) {
  lr.report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  lr.report.sort_failures();
  if (lr.report.notes.size() > kMaxNotesPerScope) {
    const std::size_t extra = lr.report.notes.size() - kMaxNotesPerScope;
    lr.report.notes.resize(kMaxNotesPerScope);
    lr.report.notes.push_back("(" + std::to_string(extra) + " more notes omitted)");
  }
}

void append_sweep_scopes(std::vector<LabeledReport>& out, const std::string& suite,
                         const RunConfig& cfg, const SpaceCheck& fn) {
  for (int k = 0; k <= cfg.max_n; ++k) {
    const auto start = std::chrono::steady_clock::now();
    LabeledReport lr{suite, std::to_string(k), sweep_enumeration(k, cfg.workers, fn)};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
  for (const WindowSpec& w : kWindows) {
    const auto start = std::chrono::steady_clock::now();
    LabeledReport lr{suite, w.scope, fn(khalimsky_window(w.lo, w.hi))};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
}

CheckReport prop1_as_report(const Space& s) {
  CheckReport rep;
  rep.check_name = "prop1";
  rep.spaces_checked = 1;
  const Prop1Result res = check_proposition1(s);
  if (res.consistent) {
    ++rep.substantive_passes;
  } else {
    std::ostringstream diag;
    diag << "prop1 conditions disagree: c1=" << res.c1 << " c2=" << res.c2
         << " c3=" << res.c3 << " c4=" << res.c4;
    rep.failures.push_back({s, {}, diag.str()});
  }
  return rep;
}

std::vector<Space> all_spaces_up_to(int max_n) {
  std::vector<Space> spaces;
  for (int k = 0; k <= max_n; ++k) {
    for_each_topology(k, [&](const Space& s) { spaces.push_back(s); });
  }
  return spaces;
}

void append_product_scopes(std::vector<LabeledReport>& out, const RunConfig& cfg) {
  // Pair products over all spaces with up to 3 points, triples over up to 2,
  // and window-by-small-space pairs; every tuple within the 63-point cap.
  {
    const auto start = std::chrono::steady_clock::now();
    CheckReport acc;
    const std::vector<Space> spaces = all_spaces_up_to(std::min(cfg.max_n, 3));
    for (const Space& a : spaces) {
      for (const Space& b : spaces) acc.merge(check_observation2_product({a, b}));
    }
    LabeledReport lr{"obs2", "p2", std::move(acc)};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
  {
    const auto start = std::chrono::steady_clock::now();
    CheckReport acc;
    const std::vector<Space> spaces = all_spaces_up_to(std::min(cfg.max_n, 2));
    for (const Space& a : spaces) {
      for (const Space& b : spaces) {
        for (const Space& c : spaces) acc.merge(check_observation2_product({a, b, c}));
      }
    }
    LabeledReport lr{"obs2", "p3", std::move(acc)};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
  {
    const auto start = std::chrono::steady_clock::now();
    CheckReport acc;
    const std::vector<Space> spaces = all_spaces_up_to(std::min(cfg.max_n, 2));
    for (const WindowSpec& w : kWindows) {
      const Space window = khalimsky_window(w.lo, w.hi);
      for (const Space& t : spaces) {
        acc.merge(check_observation2_product({window, t}));
        acc.merge(check_observation2_product({t, window}));
      }
    }
    LabeledReport lr{"obs2", "pw", std::move(acc)};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
}

void append_sampled_lemma_scopes(std::vector<LabeledReport>& out, const RunConfig& cfg) {
  for (int k : {5, 6}) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k)));
    CheckReport acc;
    for (int i = 0; i < kSampledLemmaSpaces; ++i) {
      acc.merge(run_lemma_suite(random_space(k, rng)));
    }
    LabeledReport lr{"lemmas", "s" + std::to_string(k), std::move(acc)};
    finish_scope(lr, start);
    out.push_back(std::move(lr));
  }
}

void run_one_suite(Suite suite, const RunConfig& cfg, std::vector<LabeledReport>& out) {
  switch (suite) {
    case Suite::Prop1:
      append_sweep_scopes(out, "prop1", cfg, prop1_as_report);
      return;
    case Suite::Thm1:
      append_sweep_scopes(out, "thm1", cfg, check_theorem1);
      return;
    case Suite::Witness:
      append_sweep_scopes(out, "witness", cfg, check_witness_extraction);
      return;
    case Suite::Obs2:
      append_sweep_scopes(out, "obs2", cfg, check_observation2_subspace);
      append_product_scopes(out, cfg);
      return;
    case Suite::Ideal:
      append_sweep_scopes(out, "ideal", cfg, check_scattered_ideal);
      return;
    case Suite::Lemmas:
      append_sweep_scopes(out, "lemmas", cfg, run_lemma_suite);
      append_sampled_lemma_scopes(out, cfg);
      return;
    case Suite::All:
      for (Suite sub : {Suite::Prop1, Suite::Thm1, Suite::Witness, Suite::Obs2, Suite::Ideal,
                        Suite::Lemmas}) {
        run_one_suite(sub, cfg, out);
      }
      return;
  }
  throw Error("run_verify: unreachable suite");
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "prop1") return Suite::Prop1;
  if (name == "thm1") return Suite::Thm1;
  if (name == "witness") return Suite::Witness;
  if (name == "obs2") return Suite::Obs2;
  if (name == "ideal") return Suite::Ideal;
  if (name == "lemmas") return Suite::Lemmas;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

bool VerifyOutput::any_failures() const { return total_failures() > 0; }

std::uint64_t VerifyOutput::total_failures() const {
  std::uint64_t total = 0;
  for (const LabeledReport& lr : reports) total += lr.report.failures.size();
  return total;
}

VerifyOutput run_verify(Suite suite, const RunConfig& cfg) {
  if (cfg.max_n < 0 || cfg.max_n > kVerifyCap) {
    throw CapacityExceeded("verify: max_n must be within [0, " + std::to_string(kVerifyCap) +
                           "]");
  }
  if (cfg.workers < 1) throw BadRange("verify: workers must be >= 1");
  VerifyOutput out;
  run_one_suite(suite, cfg, out.reports);
  return out;
}

std::string to_csv(const VerifyOutput& out) {
  std::ostringstream os;
  os << "name,n,spaces,substantive,vacuous,failures,elapsed_ms\n";
  for (const LabeledReport& lr : out.reports) {
    os << lr.suite << ',' << lr.scope << ',' << lr.report.spaces_checked << ','
       << lr.report.substantive_passes << ',' << lr.report.vacuous_passes << ','
       << lr.report.failures.size() << ",0\n";
  }
  return os.str();
}

std::string to_text(const VerifyOutput& out) {
  std::ostringstream os;
  std::string current_suite;
  for (const LabeledReport& lr : out.reports) {
    if (lr.suite != current_suite) {
      current_suite = lr.suite;
      os << "== " << current_suite << " ==\n";
      os << std::left << std::setw(10) << "scope" << std::right << std::setw(10) << "spaces"
         << std::setw(13) << "substantive" << std::setw(10) << "vacuous" << std::setw(10)
         << "failures" << std::setw(12) << "elapsed_ms" << "\n";
    }
    os << std::left << std::setw(10) << lr.scope << std::right << std::setw(10)
       << lr.report.spaces_checked << std::setw(13) << lr.report.substantive_passes
       << std::setw(10) << lr.report.vacuous_passes << std::setw(10)
       << lr.report.failures.size() << std::setw(12) << lr.report.elapsed.count() << "\n";
    for (const std::string& note : lr.report.notes) {
      os << "  note: " << note << "\n";
    }
    std::size_t shown = 0;
    for (const Failure& f : lr.report.failures) {
      if (shown == 20) {
        os << "  (" << lr.report.failures.size() - shown << " more failures omitted)\n";
        break;
      }
      ++shown;
      os << "  FAILURE: " << f.diagnostic << "\n";
      std::istringstream topo_block(serialize_space(f.space));
      std::string line;
      while (std::getline(topo_block, line)) os << "    " << line << "\n";
      for (const PointSet& sub : f.subsets) {
        os << "    subset: " << subset_in_labels(f.space, sub) << "\n";
      }
    }
  }
  std::uint64_t failures = out.total_failures();
  os << (failures == 0 ? "result: PASS" : "result: FAIL") << " (" << failures
     << " failures)\n";
  return os.str();
}

}  // namespace topo
