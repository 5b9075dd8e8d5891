#include "mothernet/mothercuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mothernet/schreier.hpp"

namespace mothernet {

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

// An edge of a binary network with its endpoints ordered by linear position.
struct OrderedEdge {
  std::uint64_t low = 0;
  std::uint64_t high = 0;
  std::uint64_t low_pos = 0;
  std::uint64_t high_pos = 0;
  int type = 0;
  int k = 0;
};

OrderedEdge ordered(const Network& net, const Edge& e) {
  const auto [lo, hi] = order_by_position(net, e);
  OrderedEdge out;
  out.low = net.vertex(lo).word.to_bits();
  out.high = net.vertex(hi).word.to_bits();
  out.low_pos = net.vertex(lo).position.value;
  out.high_pos = net.vertex(hi).position.value;
  out.type = e.type;
  out.k = e.k;
  return out;
}

// Index of the (j+1)-th set bit from the right.
int nth_set_bit(std::uint64_t bits, int j) {
  for (int seen = 0; bits != 0; ++seen) {
    const int i = std::countr_zero(bits);
    if (seen == j) return i;
    bits &= bits - 1;
  }
  throw std::logic_error("word has too few nonzero digits for its edge type");
}

// Digits above this position (other than k) are pinned to the edge's digits.
int pinned_above(const OrderedEdge& e) { return nth_set_bit(e.low, e.type - 1); }

std::uint64_t pinned_mask(const OrderedEdge& e) {
  const int l = pinned_above(e);
  const std::uint64_t above = l + 1 >= 64 ? 0 : ~std::uint64_t{0} << (l + 1);
  return above & ~(std::uint64_t{1} << e.k);
}

bool digit_rule(const OrderedEdge& e, std::uint64_t a) {
  if (e.type <= 0) {
    const auto a_hat = linear_position_bits(a);
    return e.high_pos == a_hat && e.low_pos + 1 == a_hat;
  }
  if (e.type > 2) return false;
  const auto mask = pinned_mask(e);
  return (a & mask) == (e.low & mask);
}

std::vector<std::uint64_t> owners(const OrderedEdge& e) {
  if (e.type <= 0) return {inverse_linear_position_bits(e.high_pos)};
  if (e.type > 2) return {};
  const int l = pinned_above(e);
  const std::uint64_t base = e.low & pinned_mask(e);
  const std::uint64_t low_count = std::uint64_t{1} << (l + 1);
  const std::uint64_t k_bit = std::uint64_t{1} << e.k;
  std::vector<std::uint64_t> out;
  out.reserve(2 * low_count);
  for (std::uint64_t free = 0; free < low_count; ++free) {
    out.push_back(base | free);
    out.push_back(base | free | k_bit);
  }
  return out;
}

Rational closed_form_weight(const OrderedEdge& e, const TreeShape& shape, std::size_t n) {
  if (e.type <= 0) {
    return beta_weight(DigitWord::from_bits(inverse_linear_position_bits(e.high_pos), n), shape);
  }
  if (e.type > 2) throw std::invalid_argument("weight sums are defined for edge types up to 2");
  const auto k = static_cast<std::size_t>(e.k);
  Rational w = 1;
  for (std::size_t i = k + 1; i < n; ++i) {
    if ((e.low >> i) & 1U) w *= shape.beta(i);
  }
  w *= 1 + shape.beta(k);
  w *= shape.beta(k - 1);
  const auto l = static_cast<std::size_t>(pinned_above(e));
  for (std::size_t i = 0; i <= l; ++i) w *= 1 + shape.beta(i);
  return w;
}

std::size_t level_of(const Network& net) {
  if (net.vertex_count() == 0) throw std::invalid_argument("empty network");
  return net.vertex(0).word.size();
}

Rational conductance_of(const Network& net, const std::vector<EdgeId>& edges, const DigitWord& a,
                        const TreeShape& shape, std::vector<std::optional<Rational>>& weight_cache) {
  const std::size_t n = level_of(net);
  Rational total = 0;
  for (EdgeId id : edges) {
    auto& w = weight_cache[id];
    if (!w) w = closed_form_weight(ordered(net, net.edge(id)), shape, n);
    total += net.edge(id).conductance * *w;
  }
  return total * inverse_beta_weight(a, shape);
}

std::string describe_edge(const Network& net, const Edge& e) {
  std::ostringstream out;
  out << net.vertex(e.u).word.to_string() << "-" << net.vertex(e.v).word.to_string() << " (type " << e.type << ")";
  return out.str();
}

}  // namespace

bool plain_membership(const Network& net, const Edge& e, LinearPosition a_hat) {
  const auto oe = ordered(net, e);
  return oe.low_pos < a_hat.value && a_hat.value <= oe.high_pos;
}

bool enlarged_membership(const Network& net, const Edge& e, const DigitWord& a) {
  return digit_rule(ordered(net, e), a.to_bits());
}

MotherCutset cutset_plain(LinearPosition a_hat, const Network& net) {
  MotherCutset out{inverse_linear_position(a_hat, level_of(net)), a_hat, {}, CutsetKind::plain};
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    if (plain_membership(net, net.edge(static_cast<EdgeId>(id)), a_hat)) out.edges.push_back(static_cast<EdgeId>(id));
  }
  return out;
}

MotherCutset cutset_enlarged(LinearPosition a_hat, const Network& net) {
  MotherCutset out{inverse_linear_position(a_hat, level_of(net)), a_hat, {}, CutsetKind::enlarged};
  const auto a = out.a.to_bits();
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    if (digit_rule(ordered(net, net.edge(static_cast<EdgeId>(id))), a)) out.edges.push_back(static_cast<EdgeId>(id));
  }
  return out;
}

std::vector<std::uint64_t> enlarged_owners(const Network& net, const Edge& e) { return owners(ordered(net, e)); }

std::vector<MotherCutset> enlarged_family(const Network& net, std::uint64_t first, std::uint64_t last) {
  const std::size_t n = level_of(net);
  if (last > (std::uint64_t{1} << n) || first > last) throw std::invalid_argument("cutset window out of range");
  std::vector<MotherCutset> family;
  family.reserve(last - first);
  for (std::uint64_t p = first; p < last; ++p) {
    family.push_back({inverse_linear_position({p}, n), {p}, {}, CutsetKind::enlarged});
  }
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    for (std::uint64_t a : owners(ordered(net, net.edge(static_cast<EdgeId>(id))))) {
      const auto p = linear_position_bits(a);
      if (p >= first && p < last) family[p - first].edges.push_back(static_cast<EdgeId>(id));
    }
  }
  return family;
}

Rational weight_sum_over_cutsets(const Network& net, const Edge& e, const TreeShape& shape) {
  return closed_form_weight(ordered(net, e), shape, level_of(net));
}

std::vector<Rational> cutset_shares(const Network& net, const MotherCutset& cutset, const TreeShape& shape) {
  const Rational beta_a = beta_weight(cutset.a, shape);
  std::vector<Rational> shares;
  shares.reserve(cutset.edges.size());
  for (EdgeId id : cutset.edges) {
    const Edge& e = net.edge(id);
    shares.push_back(beta_a / (e.conductance * weight_sum_over_cutsets(net, e, shape)));
  }
  return shares;
}

Rational cutset_conductance(const MotherCutset& cutset, const Network& net, const TreeShape& shape) {
  std::vector<std::optional<Rational>> cache(net.edge_count());
  return conductance_of(net, cutset.edges, cutset.a, shape, cache);
}

Rational cutset_conductance(LinearPosition a_hat, const Network& net, const TreeShape& shape) {
  if (a_hat.value < 1) throw std::invalid_argument("cutsets start at linear position 1");
  return cutset_conductance(cutset_enlarged(a_hat, net), net, shape);
}

double asymptotic_conductance(LinearPosition a_hat, const TreeShape& shape, int d) {
  if (a_hat.value < 2) throw std::invalid_argument("asymptotic conductance needs a^ >= 2");
  const std::size_t n = std::bit_width(a_hat.value);
  const DigitWord a = inverse_linear_position(a_hat, n);
  double value = inverse_beta_weight(a, shape).get_d();
  for (std::size_t i = 0; i < 63 && (std::uint64_t{1} << i) < a_hat.value; ++i) {
    value *= 1.0 + shape.beta(i).get_d();
  }
  if (d == 2) value *= std::log2(static_cast<double>(a_hat.value));
  return value;
}

LemmaReport lemma_membership_check(const Network& net) {
  const std::size_t n = level_of(net);
  if (n > 20) throw std::invalid_argument("exhaustive lemma check is limited to n <= 20");
  const std::uint64_t count = std::uint64_t{1} << n;
  LemmaReport report;
  auto flag = [&](const Edge& e, std::uint64_t a, const char* what) {
    if (report.counterexamples.size() < kMaxCounterexamples) {
      report.counterexamples.push_back(describe_edge(net, e) + ", a=" + DigitWord::from_bits(a, n).to_string() +
                                       ": " + what);
    }
  };
  for (const Edge& e : net.edges()) {
    if (e.type > 2) continue;
    ++report.edges_checked;
    const auto oe = ordered(net, e);
    for (std::uint64_t a = 0; a < count; ++a) {
      ++report.pairs_checked;
      const auto a_hat = linear_position_bits(a);
      const bool in_plain = oe.low_pos < a_hat && a_hat <= oe.high_pos;
      const bool rule = digit_rule(oe, a);
      if (e.type <= 0 || (e.type == 1 && a != oe.low)) {
        if (in_plain != rule) flag(e, a, in_plain ? "in S_a but fails the digit rule" : "digit rule without S_a");
      } else if (e.type == 2 && in_plain && !rule) {
        flag(e, a, "in S_a but fails the digit rule");
      }
    }
  }
  return report;
}

TheoremBound theorem_bound(int d, const TreeShape& shape, int s, int t, std::size_t n,
                           const TheoremBoundOptions& options) {
  if (s < 0 || s >= t || static_cast<std::size_t>(t) >= n) {
    throw std::invalid_argument("theorem_bound needs 0 <= s < t < n");
  }
  TheoremBound out;
  out.degree = d;
  out.shape = shape.describe();
  out.s = s;
  out.t = t;
  out.n = n;
  out.first = std::uint64_t{1} << s;
  out.last = (std::uint64_t{1} << t) + (options.include_upper ? 1 : 0);

  const Network net = build_projected(d, shape, n);
  const auto family = enlarged_family(net, out.first, out.last);
  std::vector<std::optional<Rational>> cache(net.edge_count());
  std::vector<bool> member(net.edge_count());
  std::vector<OrderedEdge> oriented;
  if (options.check_separation) {
    for (const Edge& e : net.edges()) oriented.push_back(ordered(net, e));
  }

  for (const MotherCutset& cut : family) {
    if (options.check_separation) {
      std::fill(member.begin(), member.end(), false);
      for (EdgeId id : cut.edges) member[id] = true;
      for (std::size_t id = 0; id < oriented.size(); ++id) {
        if (oriented[id].low_pos < cut.position.value && cut.position.value <= oriented[id].high_pos && !member[id]) {
          throw std::logic_error("enlarged cutset " + cut.a.to_string() + " misses a crossing edge");
        }
      }
    }
    CutsetRow<Rational> row;
    row.id = cut.position.value;
    row.label = cut.a.to_string();
    row.size = cut.edges.size();
    row.weight = beta_weight(cut.a, shape);
    row.split_conductance = conductance_of(net, cut.edges, cut.a, shape, cache);
    row.contribution = 1 / *row.split_conductance;
    out.report.bound += row.contribution;
    out.report.rows.push_back(std::move(row));
  }

  if (options.solve) {
    const auto sources = net.vertices_in_positions(0, out.first);
    const auto sinks = net.vertices_in_positions(std::uint64_t{1} << t, std::uint64_t{1} << n);
    out.resistance = compute_resistance(net, sources, sinks, options.mode, options.solver);
    if (!out.resistance->infinite) {
      out.report.solver_resistance = out.resistance->value;
      out.report.gap_ratio = out.report.bound.get_d() / out.resistance->value;
    }
  }
  return out;
}

std::vector<RecurrenceRow> recurrence_experiment(int d, const TreeShape& shape, int max_t, bool solve,
                                                 const SolverOptions& solver) {
  if (d < 0 || max_t < 1 || max_t > 24) throw std::invalid_argument("recurrence experiment needs d >= 0, 1 <= t <= 24");
  const std::size_t n = static_cast<std::size_t>(max_t) + 1;
  const Network net = build_projected(d, shape, n);
  const auto family = enlarged_family(net, 1, std::uint64_t{1} << max_t);
  std::vector<std::optional<Rational>> cache(net.edge_count());

  std::vector<RecurrenceRow> rows(static_cast<std::size_t>(max_t));
  for (const MotherCutset& cut : family) {
    const int group = std::bit_width(cut.position.value) - 1;  // floor(log2 a^)
    rows[static_cast<std::size_t>(group)].increment += 1 / conductance_of(net, cut.edges, cut.a, shape, cache);
  }
  Rational running = 0;
  for (int t = 1; t <= max_t; ++t) {
    RecurrenceRow& row = rows[static_cast<std::size_t>(t - 1)];
    row.t = t;
    running += row.increment;
    row.bound = running;
    if (solve) {
      const std::size_t level = static_cast<std::size_t>(t) + 2;
      const Network g = build_projected(d, shape, level);
      const std::vector<VertexId> root{0};
      const auto sinks = g.vertices_in_positions(std::uint64_t{1} << t, std::uint64_t{1} << level);
      row.resistance = compute_resistance(g, root, sinks, SolveMode::automatic, solver).value;
    }
  }
  return rows;
}

}  // namespace mothernet
