#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bwd/field.hpp"

namespace bwd {

// A subset of GF(q): strictly increasing element indices, all below q.
class FSubset {
 public:
  FSubset() = default;
  // Sorts and deduplicates. Throws BadArgument for indices >= q.
  FSubset(std::uint32_t q, std::vector<Element> elems);

  static FSubset empty(std::uint32_t q) { return FSubset(q, {}); }
  static FSubset whole(const Field& field);
  static FSubset of(const Field& field, std::initializer_list<std::uint32_t> indices);

  std::uint32_t q() const { return q_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Element x) const;

  const std::vector<Element>& elements() const { return elems_; }
  std::span<const Element> span() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  Element operator[](std::size_t i) const { return elems_[i]; }

  bool operator==(const FSubset&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t q_ = 0;
  std::vector<Element> elems_;
};

FSubset set_union(const FSubset& a, const FSubset& b);
FSubset set_intersection(const FSubset& a, const FSubset& b);
FSubset set_difference(const FSubset& a, const FSubset& b);
bool disjoint(const FSubset& a, const FSubset& b);
// Elements of a other than zero.
FSubset nonzero_part(const FSubset& a);

FSubset sumset(const Field& field, const FSubset& a, const FSubset& b);
FSubset product_set(const Field& field, const FSubset& a, const FSubset& b);

}  // namespace bwd
