#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <vector>

#include "errors.hpp"

namespace sgb {

/// Bijection on {0, ..., n-1}. Composition applies the right operand first.
class Permutation {
public:
  using point_type = std::uint16_t;

  Permutation() = default;

  explicit Permutation(std::vector<point_type> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto p : images_) {
      if (p >= images_.size() || seen[p])
        throw InvalidInput("image list is not a permutation");
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<point_type> im(degree);
    std::iota(im.begin(), im.end(), point_type{0});
    return Permutation(std::move(im));
  }

  /// Builds from disjoint cycles, 0-based.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<point_type>> &cycles) {
    std::vector<point_type> im(degree);
    std::iota(im.begin(), im.end(), point_type{0});
    for (const auto &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree)
          throw InvalidInput("cycle point out of range");
        im[c[i]] = c[(i + 1) % c.size()];
      }
    return Permutation(std::move(im));
  }

  std::size_t degree() const { return images_.size(); }
  point_type operator()(std::size_t x) const { return images_[x]; }
  const std::vector<point_type> &images() const { return images_; }

  Permutation inverse() const {
    std::vector<point_type> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[images_[i]] = static_cast<point_type>(i);
    Permutation r;
    r.images_ = std::move(inv);
    return r;
  }

  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
      throw InvalidInput("degree mismatch in permutation product");
    Permutation r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i)
      r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Permutation &p) {
    os << '[';
    for (std::size_t i = 0; i < p.degree(); ++i)
      os << (i ? " " : "") << p.images_[i];
    return os << ']';
  }

private:
  std::vector<point_type> images_;
};

} // namespace sgb

template <> struct std::hash<sgb::Permutation> {
  std::size_t operator()(const sgb::Permutation &p) const noexcept {
    std::size_t h = p.degree();
    for (auto x : p.images())
      h = h * 1000003u ^ x;
    return h;
  }
};
