#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "olab/config.hpp"

namespace olab {

// Permutation of {0, ..., n-1} stored as an image table.
class perm {
public:
  perm() = default;
  explicit perm(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit perm(std::vector<int> images) : img_(std::move(images)) {}

  std::size_t degree() const { return img_.size(); }
  int operator[](int p) const { return img_[static_cast<std::size_t>(p)]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i))
        return false;
    return true;
  }

  // (a * b)[p] == a[b[p]]: apply b first, then a.
  friend perm operator*(const perm &a, const perm &b) {
    std::vector<int> r(a.img_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
    return perm(std::move(r));
  }

  perm inverse() const {
    std::vector<int> r(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return perm(std::move(r));
  }

  bool operator==(const perm &o) const { return img_ == o.img_; }
  bool operator!=(const perm &o) const { return img_ != o.img_; }
  bool operator<(const perm &o) const { return img_ < o.img_; }

  const std::vector<int> &images() const { return img_; }

  // Sorted cycle lengths >= 2; conjugation invariant.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> t;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i])
        continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
        seen[j] = true;
        ++len;
      }
      if (len > 1)
        t.push_back(len);
    }
    std::sort(t.begin(), t.end());
    return t;
  }

  int order() const {
    std::vector<bool> seen(img_.size(), false);
    std::int64_t o = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i])
        continue;
      std::int64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
        seen[j] = true;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return static_cast<int>(o);
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : img_) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  friend std::ostream &operator<<(std::ostream &os, const perm &p) {
    std::vector<bool> seen(p.img_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.img_.size(); ++i) {
      if (seen[i] || p.img_[i] == static_cast<int>(i)) {
        seen[i] = true;
        continue;
      }
      os << '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first)
          os << ' ';
        os << j;
        first = false;
        j = static_cast<std::size_t>(p.img_[j]);
      }
      os << ')';
      any = true;
    }
    if (!any)
      os << "()";
    return os;
  }

private:
  std::vector<int> img_;
};

struct perm_hash {
  std::size_t operator()(const perm &p) const { return p.hash(); }
};

} // namespace olab
