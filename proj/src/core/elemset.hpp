#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace mvalg {

/// Membership vector over a carrier of fixed size. Structures hand these out
/// for every set-valued operation, so union/intersection/subset are the hot
/// path and element identity is by index.
class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static ElemSet single(int n, int i) {
    ElemSet s(n);
    s.set(i);
    return s;
  }
  static ElemSet full(int n) {
    ElemSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static ElemSet of(int n, std::initializer_list<int> is) {
    ElemSet s(n);
    for (int i : is) s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// Members in ascending index order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  int first() const { return next(-1); }

  /// Smallest member strictly greater than i, or -1.
  int next(int i) const {
    for (int j = i + 1; j < n_; ++j) {
      std::uint64_t w = w_[j >> 6] >> (j & 63);
      if (w == 0) {
        j |= 63;  // skip to word end
        continue;
      }
      return j + __builtin_ctzll(w);
    }
    return -1;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace mvalg
