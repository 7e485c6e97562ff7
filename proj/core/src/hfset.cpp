#include "fkwalk/hfset.hpp"

#include <algorithm>
#include <cctype>

namespace fkwalk {

namespace {

void check_budget(std::size_t nodes, std::size_t budget) {
  if (nodes > budget) throw ResourceError("set node budget exceeded");
}

}  // namespace

HFSet HFSet::make(std::vector<HFSet> elements, std::size_t budget) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end(),
                             [](const HFSet& a, const HFSet& b) { return compare(a, b) == 0; }),
                 elements.end());
  HFSet s;
  s.nodes_ = 1;
  s.rank_ = 0;
  for (const HFSet& e : elements) {
    s.nodes_ += e.nodes_;
    s.rank_ = std::max(s.rank_, e.rank_ + 1);
  }
  check_budget(s.nodes_, budget);
  s.elements_ = std::move(elements);
  return s;
}

int HFSet::compare(const HFSet& a, const HFSet& b) {
  if (a.elements_.size() != b.elements_.size())
    return a.elements_.size() < b.elements_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const int c = compare(a.elements_[i], b.elements_[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool is_member(const HFSet& a, const HFSet& s) {
  return std::binary_search(s.elements().begin(), s.elements().end(), a);
}

bool is_subset(const HFSet& a, const HFSet& s) {
  return std::includes(s.elements().begin(), s.elements().end(),
                       a.elements().begin(), a.elements().end());
}

HFSet insert(const HFSet& s, const HFSet& a, std::size_t budget) {
  std::vector<HFSet> elems = s.elements();
  elems.push_back(a);
  return HFSet::make(std::move(elems), budget);
}

HFSet set_union(const HFSet& s1, const HFSet& s2, std::size_t budget) {
  std::vector<HFSet> elems = s1.elements();
  elems.insert(elems.end(), s2.elements().begin(), s2.elements().end());
  return HFSet::make(std::move(elems), budget);
}

HFSet set_intersection(const HFSet& s1, const HFSet& s2) {
  std::vector<HFSet> elems;
  std::set_intersection(s1.elements().begin(), s1.elements().end(),
                        s2.elements().begin(), s2.elements().end(),
                        std::back_inserter(elems));
  return HFSet::make(std::move(elems));
}

HFSet successor(const HFSet& s, std::size_t budget) {
  return insert(s, s, budget);
}

HFSet von_neumann_natural(int k) {
  if (k < 0) throw DomainError("natural index must be nonnegative");
  if (k > 16) throw ResourceError("natural index above 16 exceeds the node budget");
  HFSet s;
  for (int i = 0; i < k; ++i) s = successor(s);
  return s;
}

HFSet power_set(const HFSet& s, std::size_t budget) {
  const std::size_t m = s.cardinality();
  if (m >= 16) throw ResourceError("power set of a 16-element set exceeds the node budget");
  std::vector<HFSet> subsets;
  subsets.reserve(std::size_t(1) << m);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<HFSet> elems;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) elems.push_back(s.elements()[i]);
    subsets.push_back(HFSet::make(std::move(elems), budget));
  }
  return HFSet::make(std::move(subsets), budget);
}

HFSet cumulative_power_set(const HFSet& s, int k, std::size_t budget) {
  if (k < 0) throw DomainError("cumulative power set depth must be nonnegative");
  HFSet u = s;
  for (int i = 0; i < k; ++i) u = set_union(u, power_set(u, budget), budget);
  return u;
}

bool is_natural(const HFSet& s) {
  // natural(k) = {natural(0), ..., natural(k-1)}; in canonical order the
  // i-th element must be exactly the i-cardinality natural, checked by
  // requiring each element to equal the set of its predecessors.
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].cardinality() != i) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (HFSet::compare(e[i].elements()[j], e[j]) != 0) return false;
  }
  return true;
}

namespace {

std::size_t nat_index(const HFSet& s, const char* op) {
  if (!is_natural(s)) throw DomainError(std::string(op) + ": operand is not a von Neumann natural");
  return s.cardinality();
}

const HFSet& predecessor(const HFSet& s) {
  // For a nonzero natural, the largest element is the predecessor.
  return s.elements().back();
}

}  // namespace

HFSet nat_add(const HFSet& a, const HFSet& b, std::size_t budget) {
  nat_index(a, "nat_add");
  nat_index(b, "nat_add");
  if (b.is_empty()) return a;
  return successor(nat_add(a, predecessor(b), budget), budget);
}

HFSet nat_mul(const HFSet& a, const HFSet& b, std::size_t budget) {
  nat_index(a, "nat_mul");
  nat_index(b, "nat_mul");
  if (b.is_empty()) return HFSet();
  return nat_add(nat_mul(a, predecessor(b), budget), a, budget);
}

HFSet nat_exp(const HFSet& a, const HFSet& b, std::size_t budget) {
  nat_index(a, "nat_exp");
  nat_index(b, "nat_exp");
  if (b.is_empty()) return von_neumann_natural(1);
  return nat_mul(nat_exp(a, predecessor(b), budget), a, budget);
}

bool is_ordinal(const HFSet& s) {
  const auto& e = s.elements();
  if (e.size() > 12) throw ResourceError("ordinal check limited to 12 elements");
  // Transitivity: every element is a subset.
  for (const HFSet& x : e)
    if (!is_subset(x, s)) return false;
  // Trichotomy of membership among distinct elements.
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!is_member(e[i], e[j]) && !is_member(e[j], e[i])) return false;
  // Every nonempty subset has an epsilon-minimal element.
  for (std::size_t mask = 1; mask < (std::size_t(1) << e.size()); ++mask) {
    bool has_minimal = false;
    for (std::size_t i = 0; i < e.size() && !has_minimal; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!(mask & (std::size_t(1) << j))) continue;
        if (is_member(e[j], e[i])) { minimal = false; break; }
      }
      has_minimal = minimal;
    }
    if (!has_minimal) return false;
  }
  return true;
}

namespace {

void render_into(const HFSet& s, std::string& out) {
  out.push_back('{');
  bool first = true;
  for (const HFSet& e : s.elements()) {
    if (!first) out.push_back(',');
    first = false;
    render_into(e, out);
  }
  out.push_back('}');
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t budget;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  HFSet parse_set() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '{')
      throw ParseError("expected '{'", pos);
    ++pos;
    std::vector<HFSet> elems;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return HFSet();
    }
    while (true) {
      elems.push_back(parse_set());
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated set", pos);
      if (text[pos] == ',') { ++pos; continue; }
      if (text[pos] == '}') { ++pos; break; }
      throw ParseError("expected ',' or '}'", pos);
    }
    return HFSet::make(std::move(elems), budget);
  }
};

}  // namespace

std::string render(const HFSet& s) {
  std::string out;
  out.reserve(2 * s.node_count());
  render_into(s, out);
  return out;
}

HFSet parse(const std::string& text, std::size_t budget) {
  Parser p{text, 0, budget};
  HFSet s = p.parse_set();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing characters after set", p.pos);
  return s;
}

}  // namespace fkwalk
