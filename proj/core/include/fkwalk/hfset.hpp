#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fkwalk/errors.hpp"

namespace fkwalk {

/// Hereditarily finite set in canonical form: elements deduplicated and
/// sorted by the canonical total order (cardinality first, ties broken
/// lexicographically by elementwise canonical order). Immutable value type.
class HFSet {
 public:
  /// The empty set.
  HFSet() = default;

  /// Canonicalizes (dedupes and sorts) the given elements.
  static HFSet make(std::vector<HFSet> elements, std::size_t budget = kNodeBudget);

  const std::vector<HFSet>& elements() const { return elements_; }
  std::size_t cardinality() const { return elements_.size(); }
  bool is_empty() const { return elements_.empty(); }
  /// Total nodes in the tree, counting this set itself.
  std::size_t node_count() const { return nodes_; }
  /// Nesting depth: rank({}) = 0, rank(s) = 1 + max rank of elements.
  std::size_t rank() const { return rank_; }

  /// Canonical total order: negative, zero, or positive.
  static int compare(const HFSet& a, const HFSet& b);
  friend bool operator==(const HFSet& a, const HFSet& b) { return compare(a, b) == 0; }
  friend bool operator!=(const HFSet& a, const HFSet& b) { return compare(a, b) != 0; }
  friend bool operator<(const HFSet& a, const HFSet& b) { return compare(a, b) < 0; }

  /// Default operation budget in total nodes.
  static constexpr std::size_t kNodeBudget = std::size_t(1) << 16;

 private:
  std::vector<HFSet> elements_;
  std::size_t nodes_ = 1;
  std::size_t rank_ = 0;
};

bool is_member(const HFSet& a, const HFSet& s);
bool is_subset(const HFSet& a, const HFSet& s);
HFSet insert(const HFSet& s, const HFSet& a, std::size_t budget = HFSet::kNodeBudget);
HFSet set_union(const HFSet& s1, const HFSet& s2, std::size_t budget = HFSet::kNodeBudget);
HFSet set_intersection(const HFSet& s1, const HFSet& s2);

/// Suc(x) = x union {x}.
HFSet successor(const HFSet& s, std::size_t budget = HFSet::kNodeBudget);

/// Iterated successor of the empty set; k <= 16 (node count doubles per step).
HFSet von_neumann_natural(int k);

HFSet power_set(const HFSet& s, std::size_t budget = HFSet::kNodeBudget);

/// U_0(s) = s, U_k(s) = U_{k-1}(s) union P(U_{k-1}(s)).
HFSet cumulative_power_set(const HFSet& s, int k, std::size_t budget = HFSet::kNodeBudget);

/// Peano arithmetic on von Neumann naturals, by the defining recursions
/// (a + Suc(b) = Suc(a + b), a * Suc(b) = a * b + a, a ^ Suc(b) = a ^ b * a).
/// Non-natural inputs raise DomainError; results past natural(16) exhaust
/// the node budget.
HFSet nat_add(const HFSet& a, const HFSet& b, std::size_t budget = HFSet::kNodeBudget);
HFSet nat_mul(const HFSet& a, const HFSet& b, std::size_t budget = HFSet::kNodeBudget);
HFSet nat_exp(const HFSet& a, const HFSet& b, std::size_t budget = HFSet::kNodeBudget);

/// True iff s is a von Neumann natural (checked structurally).
bool is_natural(const HFSet& s);

/// Exhaustive three-clause check: transitivity (every element is a subset),
/// trichotomy of membership among distinct elements, and epsilon-minimality
/// of every nonempty subset. Requires cardinality <= 12 (2^|s| subsets).
bool is_ordinal(const HFSet& s);

/// Canonical brace text, no whitespace: "{}", "{{},{{}}}", ...
std::string render(const HFSet& s);

/// Accepts arbitrary order and duplicates (and whitespace), canonicalizes.
/// Malformed input raises ParseError with the offending position.
HFSet parse(const std::string& text, std::size_t budget = HFSet::kNodeBudget);

}  // namespace fkwalk
