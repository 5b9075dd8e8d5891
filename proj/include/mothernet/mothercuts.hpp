#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mothernet/electric.hpp"
#include "mothernet/nashwilliams.hpp"
#include "mothernet/network.hpp"
#include "mothernet/words.hpp"

namespace mothernet {

// Cutsets on the projected binary graphs, indexed by linear position.
//
// S_a holds the edges (x, y) with x^ < a^ <= y^. The enlarged Sbar_a adds the
// edges whose digits match a above a type-dependent position; each edge then
// belongs to a family of cutsets that can be enumerated directly, which makes
// the weight sums below closed-form.
//
// All functions here expect a binary network as produced by build_projected
// or project_network.

enum class CutsetKind { plain, enlarged };

struct MotherCutset {
  DigitWord a;
  LinearPosition position;
  std::vector<EdgeId> edges;
  CutsetKind kind = CutsetKind::plain;
};

/// x^ < a^ <= y^ after ordering the endpoints by linear position.
bool plain_membership(const Network& net, const Edge& e, LinearPosition a_hat);

/// The digit-matching rule defining Sbar_a. Types above 2 never match.
bool enlarged_membership(const Network& net, const Edge& e, const DigitWord& a);

MotherCutset cutset_plain(LinearPosition a_hat, const Network& net);
/// Scans every edge with enlarged_membership.
MotherCutset cutset_enlarged(LinearPosition a_hat, const Network& net);

/// All a (as binary masks) with e in Sbar_a, enumerated from the free digits.
std::vector<std::uint64_t> enlarged_owners(const Network& net, const Edge& e);

/// Sbar_a for every a^ in [first, last), built by inverting enlarged_owners.
/// Entry i corresponds to a^ = first + i.
std::vector<MotherCutset> enlarged_family(const Network& net, std::uint64_t first, std::uint64_t last);

/// sum_{a : e in Sbar_a} beta^a in closed form.
Rational weight_sum_over_cutsets(const Network& net, const Edge& e, const TreeShape& shape);

/// R_{e,a} = R_e beta^a / weight_sum_over_cutsets(e) for each edge of the cutset.
std::vector<Rational> cutset_shares(const Network& net, const MotherCutset& cutset, const TreeShape& shape);

/// C_a = sum_{e in Sbar_a} 1 / R_{e,a}.
Rational cutset_conductance(LinearPosition a_hat, const Network& net, const TreeShape& shape);
Rational cutset_conductance(const MotherCutset& cutset, const Network& net, const TreeShape& shape);

/// beta^{-a} prod_{i < log2 a^} (1 + beta_i), times log2 a^ for d = 2. Needs a^ >= 2.
double asymptotic_conductance(LinearPosition a_hat, const TreeShape& shape, int d);

struct LemmaReport {
  std::size_t edges_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// For every edge and every a of the network's length: plain membership is
/// equivalent to the digit rule for types -1, 0 and 1 (a != lower endpoint),
/// and implies it for type 2.
LemmaReport lemma_membership_check(const Network& net);

struct TheoremBoundOptions {
  SolveMode mode = SolveMode::automatic;
  SolverOptions solver;
  /// Also count a^ = 2^t, which still separates A from B.
  bool include_upper = false;
  bool solve = true;
  /// Confirm each Sbar_a contains every edge crossing position a^.
  bool check_separation = true;
};

struct TheoremBound {
  int degree = 0;
  std::string shape;
  int s = 0;
  int t = 0;
  std::size_t n = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  BoundReport<Rational> report;
  std::optional<ResistanceReport> resistance;
};

/// Lower bound on Res(pi^{-1}[0, 2^s), pi^{-1}[2^t, 2^n)) in the level-n projected
/// graph, from the enlarged cutsets with a^ in [2^s, 2^t) and beta^a weights.
/// Throws std::invalid_argument unless 0 <= s < t < n.
TheoremBound theorem_bound(int d, const TreeShape& shape, int s, int t, std::size_t n,
                           const TheoremBoundOptions& options = {});

struct RecurrenceRow {
  int t = 0;
  /// sum_{1 <= a^ < 2^t} C_a^{-1}
  Rational bound;
  /// Contribution of a^ in [2^{t-1}, 2^t).
  Rational increment;
  std::optional<double> resistance;
};

/// Cumulative bounds on Res(root, pi^{-1}[2^t, inf)) for t = 1..max_t, from one
/// level-(max_t + 1) graph. With `solve`, also the level-(t+2) resistance.
std::vector<RecurrenceRow> recurrence_experiment(int d, const TreeShape& shape, int max_t, bool solve = false,
                                                 const SolverOptions& solver = {});

}  // namespace mothernet
