#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace posr {

/// Index of an element inside an operation table.
using Element = unsigned;

/// Largest po-semiring order the library handles; element subsets are
/// 64-bit masks.
inline constexpr std::size_t kMaxOrder = 64;

class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(iterator a, iterator b) { return a.rest_ == b.rest_; }

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> xs) {
    for (Element x : xs) insert(x);
  }

  static constexpr ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr ElementSet full(std::size_t n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  bool contains(Element x) const { return x < 64 && ((mask_ >> x) & 1U) != 0; }
  void insert(Element x) { mask_ |= std::uint64_t{1} << x; }
  void erase(Element x) { mask_ &= ~(std::uint64_t{1} << x); }

  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  /// Least member; undefined on the empty set.
  Element front() const { return static_cast<Element>(std::countr_zero(mask_)); }

  bool is_subset_of(ElementSet other) const { return (mask_ & ~other.mask_) == 0; }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend ElementSet operator|(ElementSet a, ElementSet b) { return from_mask(a.mask_ | b.mask_); }
  friend ElementSet operator&(ElementSet a, ElementSet b) { return from_mask(a.mask_ & b.mask_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(ElementSet a, ElementSet b) = default;

  /// Orders by size, then by sorted member list.
  friend bool operator<(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_vector() < b.to_vector();
  }

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace posr
