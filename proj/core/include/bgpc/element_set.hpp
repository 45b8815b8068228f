#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bgpc {

/// Maximum ground-set size of a Matroid value (one bit per element).
inline constexpr std::size_t kMaxGround = 64;

/// Subset of a matroid's ground set, indexed by ground position.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(std::size_t i) { return ElementSet(std::uint64_t{1} << i); }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr ElementSet with(std::size_t i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(std::size_t i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const ElementSet&) const = default;

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bgpc
