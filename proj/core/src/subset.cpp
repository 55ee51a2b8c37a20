#include "bwd/subset.hpp"

#include <algorithm>
#include <iterator>

#include "bwd/error.hpp"

namespace bwd {

FSubset::FSubset(std::uint32_t q, std::vector<Element> elems) : q_(q), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.back().index >= q_) {
    throw BadArgument("set element " + std::to_string(elems_.back().index) +
                      " out of range for q = " + std::to_string(q_));
  }
}

FSubset FSubset::whole(const Field& field) {
  std::vector<Element> all(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) all[i] = Element{i};
  return FSubset(field.q(), std::move(all));
}

FSubset FSubset::of(const Field& field, std::initializer_list<std::uint32_t> indices) {
  std::vector<Element> elems;
  for (std::uint32_t i : indices) elems.push_back(Element{i});
  return FSubset(field.q(), std::move(elems));
}

bool FSubset::contains(Element x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string FSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i].index);
  }
  return out + "}";
}

FSubset set_union(const FSubset& a, const FSubset& b) {
  std::vector<Element> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FSubset(std::max(a.q(), b.q()), std::move(out));
}

FSubset set_intersection(const FSubset& a, const FSubset& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FSubset(std::max(a.q(), b.q()), std::move(out));
}

FSubset set_difference(const FSubset& a, const FSubset& b) {
  std::vector<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FSubset(a.q(), std::move(out));
}

bool disjoint(const FSubset& a, const FSubset& b) { return set_intersection(a, b).empty(); }

FSubset nonzero_part(const FSubset& a) {
  std::vector<Element> out;
  for (Element x : a) {
    if (x.index != 0) out.push_back(x);
  }
  return FSubset(a.q(), std::move(out));
}

FSubset sumset(const Field& field, const FSubset& a, const FSubset& b) {
  std::vector<char> hit(field.q(), 0);
  for (Element x : a) {
    for (Element y : b) hit[field.add(x, y).index] = 1;
  }
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    if (hit[i]) out.push_back(Element{i});
  }
  return FSubset(field.q(), std::move(out));
}

FSubset product_set(const Field& field, const FSubset& a, const FSubset& b) {
  std::vector<char> hit(field.q(), 0);
  for (Element x : a) {
    for (Element y : b) hit[field.mul(x, y).index] = 1;
  }
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    if (hit[i]) out.push_back(Element{i});
  }
  return FSubset(field.q(), std::move(out));
}

}  // namespace bwd
