#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallhyper {

using mask_t = std::uint64_t;

/// Carrier of a finite structure. Elements are the indices 0..size()-1.
/// Capped at 64 so every subset fits in a single machine word; invalid
/// sizes are rejected here, at construction.
class Carrier {
 public:
  static constexpr int kMaxSize = 64;

  explicit Carrier(int n) : n_(n) {
    if (n < 1 || n > kMaxSize) {
      throw std::invalid_argument("carrier size must be in [1, " +
                                  std::to_string(kMaxSize) + "], got " +
                                  std::to_string(n));
    }
  }

  int size() const { return n_; }

  /// Bit mask with one bit per carrier element.
  mask_t full_mask() const {
    return n_ == kMaxSize ? ~mask_t{0} : (mask_t{1} << n_) - 1;
  }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  int n_;
};

/// Immutable subset of a carrier, one bit per element. Equality is
/// extensional: two subsets over the same carrier with the same members
/// compare equal. The empty subset is representable (it is a useful fold
/// seed); operations whose domain is the nonempty subsets check that
/// precondition themselves.
class Subset {
 public:
  static Subset empty(Carrier c) { return Subset(c, 0); }
  static Subset full(Carrier c) { return Subset(c, c.full_mask()); }

  static Subset singleton(Carrier c, int element) {
    check_element(c, element);
    return Subset(c, mask_t{1} << element);
  }

  static Subset of(Carrier c, std::initializer_list<int> elements) {
    mask_t bits = 0;
    for (int e : elements) {
      check_element(c, e);
      bits |= mask_t{1} << e;
    }
    return Subset(c, bits);
  }

  static Subset from_elements(Carrier c, std::span<const int> elements) {
    mask_t bits = 0;
    for (int e : elements) {
      check_element(c, e);
      bits |= mask_t{1} << e;
    }
    return Subset(c, bits);
  }

  /// Builds a subset from a raw bit mask; bits outside the carrier are
  /// rejected.
  static Subset from_mask(Carrier c, mask_t bits) {
    if ((bits & ~c.full_mask()) != 0) {
      throw std::invalid_argument("subset mask has bits outside the carrier");
    }
    return Subset(c, bits);
  }

  Carrier carrier() const { return Carrier(n_); }
  int carrier_n() const { return n_; }
  mask_t mask() const { return bits_; }

  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == carrier().full_mask(); }
  int size() const { return std::popcount(bits_); }

  bool contains(int element) const {
    check_element(carrier(), element);
    return (bits_ >> element) & 1;
  }

  bool is_subset_of(const Subset& other) const {
    check_same_carrier(other);
    return (bits_ & ~other.bits_) == 0;
  }

  /// Members in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (mask_t m = bits_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  friend Subset operator|(const Subset& a, const Subset& b) {
    a.check_same_carrier(b);
    return Subset(a.carrier(), a.bits_ | b.bits_);
  }

  friend Subset operator&(const Subset& a, const Subset& b) {
    a.check_same_carrier(b);
    return Subset(a.carrier(), a.bits_ & b.bits_);
  }

  Subset& operator|=(const Subset& other) { return *this = *this | other; }
  Subset& operator&=(const Subset& other) { return *this = *this & other; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  Subset(Carrier c, mask_t bits) : n_(c.size()), bits_(bits) {}

  static void check_element(Carrier c, int element) {
    if (element < 0 || element >= c.size()) {
      throw std::out_of_range("element " + std::to_string(element) +
                              " outside carrier of size " +
                              std::to_string(c.size()));
    }
  }

  void check_same_carrier(const Subset& other) const {
    if (n_ != other.n_) {
      throw std::invalid_argument("subsets over different carriers (" +
                                  std::to_string(n_) + " vs " +
                                  std::to_string(other.n_) + ")");
    }
  }

  int n_;
  mask_t bits_;
};

/// "{0,2}" rendering for messages and counterexample records.
inline std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

/// Lazy range over the 2^n - 1 nonempty subsets of a carrier, in ascending
/// bit-vector (numeric mask) order.
class NonemptySubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;

    iterator(Carrier c, mask_t cur) : c_(c), cur_(cur) {}

    Subset operator*() const { return Subset::from_mask(c_, cur_); }

    iterator& operator++() {
      // cur_ == 0 is the end sentinel; stepping past the full mask wraps
      // there, which also avoids overflow at n == 64.
      cur_ = cur_ == c_.full_mask() ? 0 : cur_ + 1;
      return *this;
    }

    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cur_ == b.cur_;
    }

   private:
    Carrier c_;
    mask_t cur_;
  };

  explicit NonemptySubsetRange(Carrier c) : c_(c) {}

  iterator begin() const { return iterator(c_, 1); }
  iterator end() const { return iterator(c_, 0); }

  /// 2^n - 1; equals the full carrier mask read as a number.
  std::uint64_t size() const { return c_.full_mask(); }

 private:
  Carrier c_;
};

inline NonemptySubsetRange enumerate_nonempty_subsets(Carrier c) {
  return NonemptySubsetRange(c);
}

}  // namespace smallhyper
