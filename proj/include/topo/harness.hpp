#pragma once

// Verification harness: exhaustive checks over the topology enumeration and
// over digital-line windows, with explicit vacuity accounting, plus the
// witness extraction that gives the main implication a non-vacuous finite
// test surface.
//
// Accounting discipline: every check instance lands in exactly one of
// substantive_passes, vacuous_passes, or failures; a pass is vacuous iff the
// implication's antecedent was false for that instance. On finite spaces
// the hypothesis "dense-in-itself and semi-T_D" holds only for the empty
// space, so a harness that hid vacuity would claim confirmation it does not
// have; the separate counters keep the reports honest.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/enumeration.hpp"
#include "topo/pred_expr.hpp"
#include "topo/predicates.hpp"
#include "topo/space.hpp"

namespace topo {

struct Failure {
  Space space;
  std::vector<PointSet> subsets;
  std::string diagnostic;
};

struct CheckReport {
  std::string check_name;
  std::uint64_t spaces_checked = 0;
  std::uint64_t substantive_passes = 0;
  std::uint64_t vacuous_passes = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  std::uint64_t instances() const {
    return substantive_passes + vacuous_passes + failures.size();
  }

  void merge(CheckReport&& other);

  /// Orders failures by (point count, canonical form, subsets, diagnostic)
  /// so reports are identical regardless of worker count.
  void sort_failures();
};

// ---- prop1: the four-way equivalence ---------------------------------------

// The four conditions, computed independently of one another:
//   c1  dense-in-itself and semi-T_D
//   c2  every singleton nowhere dense
//   c3  every (finite) subset nowhere dense, scanned over all 2^n subsets
//   c4  no singleton is preopen
struct Prop1Result {
  bool c1, c2, c3, c4;
  bool consistent;
};

inline constexpr int kProp1SubsetScanCap = 20;

/// Throws CapacityExceeded when the 2^n subset scan for c3 would exceed the
/// cap (the built-in windows need up to 20 points; enumeration drivers pass
/// their own tighter bound).
Prop1Result check_proposition1(const Space& s, int subset_scan_cap = kProp1SubsetScanCap);

// ---- thm1: alpha-scattered sets are nowhere dense, with witnesses ----------

/// Implication form, per subset A: pass iff the space fails the hypothesis
/// (vacuous) or alpha-scattered(A) implies nowhere-dense(A) (substantive).
CheckReport check_theorem1(const Space& s);

// The proof objects: x isolated in A, V its minimal neighborhood with
// V & A = {x}, U the (nonempty, open) consolidation of A inside cl(A),
// and W = U & V, a nonempty open subset of cl({x}).
struct Witness {
  int x;
  PointSet w;
  PointSet a;
  PointSet u;
  PointSet v;
};

/// Mechanizes the proof on a concrete (space, subset) instance. Requires A
/// alpha-scattered with nonempty consolidation (PreconditionViolated names
/// the failing clause). Throws InternalProofStepFailed if the step the proof
/// guarantees — U meets I(A) — fails; that is either an implementation bug
/// or a genuine refutation and is never swallowed. Ties in the choice of x
/// break to the least index.
Witness theorem1_witness(const Space& s, const PointSet& a);

/// Checks all Witness invariants plus the certified conclusion that {x} has
/// nonempty consolidation. Returns a diagnostic, or nullopt when all hold.
std::optional<std::string> witness_violation(const Space& s, const Witness& wit);

/// Sweeps every subset of s: qualifying subsets must yield a valid Witness
/// (substantive); non-qualifying subsets count as vacuous.
CheckReport check_witness_extraction(const Space& s);

// ---- obs2: heredity along beta-open subspaces and finite products ----------

/// Per beta-open B: the stated heredity check (hypothesis on the whole
/// space), plus the derived pointwise strengthening — a singleton nowhere
/// dense in the space stays nowhere dense in the subspace on B. The
/// pointwise variant is implied by the stated one but is not a verbatim
/// claim; reports label it "derived".
CheckReport check_observation2_subspace(const Space& s);

/// Finite-arity product form (2 or 3 factors): the stated check, plus the
/// derived pointwise variant per product point and factor.
CheckReport check_observation2_product(const std::vector<Space>& factors);

// ---- Scattered ideal -----------------------------------------------------

inline constexpr int kIdealAllPairsCap = 12;

/// Verifies: finite additivity of scattered sets holds iff the space is T0;
/// scattered sets are hereditary unconditionally; the nowhere-dense family
/// is an ideal; the finite-set family is an ideal. Per-subset results are
/// memoized, so the all-pairs scan stays exhaustive up to n = 12, which
/// covers the built-in windows. When additivity fails on a non-T0 space the
/// first witness pair is recorded as a report note.
CheckReport check_scattered_ideal(const Space& s);

// ---- Micro-lemma suite ---------------------------------------------------

/// Every pointwise/setwise lemma the predicate layer promises, evaluated on
/// every subset (and subset pair, for heredity) of one space. Failures carry
/// the lemma id and the witness subset(s).
CheckReport run_lemma_suite(const Space& s);

// ---- Implication search --------------------------------------------------

enum class SubsetQuantifier {
  Exists,          // report the first failing subset per space
  ForAllSubsets,   // report every failing (space, subset)
};

struct SearchWitness {
  Space space;
  std::optional<PointSet> subset;  // absent for space-level-only searches
};

struct SearchResult {
  std::vector<SearchWitness> witnesses;
  std::uint64_t spaces_scanned = 0;
  std::uint64_t substantive = 0;  // antecedent true, consequent true
  std::uint64_t vacuous = 0;      // antecedent false
  std::uint64_t failing = 0;      // all failing instances (witness list may be trimmed)
};

/// Scans every topology on k <= n_max points for instances where antecedent
/// holds and consequent fails. When both expressions are space-level the scan
/// is per space; otherwise per (space, subset). canonical_dedup keeps one
/// witness per homeomorphism class.
SearchResult search_implication(int n_max, const PredExpr& antecedent,
                                const PredExpr& consequent, SubsetQuantifier quantifier,
                                bool canonical_dedup = false);

// ---- Suite driver --------------------------------------------------------

struct RunConfig {
  int max_n = 5;
  bool canonical_dedup = false;
  int workers = 1;
  enum class Format { Text, Csv } format = Format::Text;
  std::uint64_t seed = 0x746f706fULL;
  std::size_t cap_opens = kDefaultOpenCap;
};

enum class Suite { Prop1, Thm1, Witness, Obs2, Ideal, Lemmas, All };

std::optional<Suite> suite_from_name(std::string_view name);

struct LabeledReport {
  std::string suite;
  std::string scope;  // "0".."7", "w[-5..5]", "w[0..9]", "s5", "s6", "p2", "p3", "pw"
  CheckReport report;
};

struct VerifyOutput {
  std::vector<LabeledReport> reports;

  bool any_failures() const;
  std::uint64_t total_failures() const;
};

/// Runs a suite over the enumeration for n = 0..max_n plus the built-in
/// windows [-5,5] and [0,9]. Work is partitioned across workers by
/// enumeration branch; partial reports merge in branch order, so output is
/// identical for any worker count. Throws CapacityExceeded when max_n
/// exceeds the suite's cap.
VerifyOutput run_verify(Suite suite, const RunConfig& cfg);

/// Deterministic CSV (one row per suite/scope; the elapsed column is always
/// 0 so identical runs are byte-identical regardless of timing or workers).
std::string to_csv(const VerifyOutput& out);

/// Human-readable report with real timings, failure witnesses as .topo
/// blocks, and notes.
std::string to_text(const VerifyOutput& out);

}  // namespace topo
