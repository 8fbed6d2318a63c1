#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "leinster/error.hpp"

namespace leinster {

using Element = std::uint32_t;

/// A subset of the elements of a group with `parent_order` elements, stored as
/// a bit vector. Subgroup-producing operations set the subgroup flag.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::size_t parent_order)
      : parent_order_(parent_order), words_((parent_order + 63) / 64, 0) {}

  ElementSet(std::size_t parent_order, std::initializer_list<Element> ids)
      : ElementSet(parent_order) {
    for (Element id : ids) insert(id);
  }

  static ElementSet from_ids(std::size_t parent_order, const std::vector<Element>& ids) {
    ElementSet s(parent_order);
    for (Element id : ids) s.insert(id);
    return s;
  }

  static ElementSet full(std::size_t parent_order) {
    ElementSet s(parent_order);
    for (std::size_t i = 0; i < parent_order; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t parent_order() const { return parent_order_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Element id) const {
    return id < parent_order_ && ((words_[id >> 6] >> (id & 63)) & 1u) != 0;
  }

  /// Returns true when `id` was not already present.
  bool insert(Element id) {
    if (id >= parent_order_) {
      throw InputError("element id " + std::to_string(id) + " out of range for order " +
                       std::to_string(parent_order_));
    }
    std::uint64_t& w = words_[id >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (id & 63);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
  }

  void insert_all(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    recount();
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  /// Smallest member id; parent_order() when empty.
  Element min_member() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return static_cast<Element>(i * 64 + std::countr_zero(words_[i]));
    }
    return static_cast<Element>(parent_order_);
  }

  /// Members in ascending id order.
  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<Element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool flagged_subgroup() const { return subgroup_; }
  void flag_subgroup(bool on = true) { subgroup_ = on; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Cache serialization: the sorted id list, e.g. "[0,2,4]".
  std::string serialize() const {
    std::string out = "[";
    bool first = true;
    for_each([&](Element e) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    });
    return out + "]";
  }

  // Equality and ordering ignore the subgroup flag.
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.parent_order_ == b.parent_order_ && a.words_ == b.words_;
  }

 private:
  void recount() {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    size_ = n;
  }

  std::size_t parent_order_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  bool subgroup_ = false;
};

/// Ordering used for deterministic reports: by size, then by ascending member
/// list.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    if (wa[i] == wb[i]) continue;
    const std::uint64_t diff = wa[i] ^ wb[i];
    const std::uint64_t low = diff & (~diff + 1);
    return (wa[i] & low) != 0;
  }
  return false;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.parent_order());
    for (std::uint64_t w : s.words()) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace leinster
