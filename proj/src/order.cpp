#include "tjurina/order.hpp"

#include <algorithm>
#include <numeric>

#include "tjurina/errors.hpp"

namespace tjurina {

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind) {
  if (nvars < 1 || nvars > Monomial::kMaxVars) {
    throw ArgumentError("monomial order: variable count must be 1..3");
  }
  precedence_.resize(static_cast<std::size_t>(nvars));
  std::iota(precedence_.begin(), precedence_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<int> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw ArgumentError("monomial order: precedence must be a permutation");
    }
  }
  if (precedence_.empty() || precedence_.size() > Monomial::kMaxVars) {
    throw ArgumentError("monomial order: variable count must be 1..3");
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::Lex) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::Degrevlex) {
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
    return std::strong_ordering::equal;
  }
  for (int v : precedence_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grlex:
      return "grlex";
    case OrderKind::Degrevlex:
      return "degrevlex";
  }
  return "?";
}

}  // namespace tjurina
