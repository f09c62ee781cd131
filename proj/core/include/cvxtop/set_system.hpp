#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace cvxtop {

/// Fixed-width bit set over at most 64 dense indices. Used for subsets of a
/// ground set (ElementSet) and for subfamilies given by member positions
/// (Selector).
template <typename Tag>
class BitSet64 {
 public:
  static constexpr int kCapacity = 64;

  constexpr BitSet64() = default;
  constexpr explicit BitSet64(std::uint64_t bits) : bits_(bits) {}
  BitSet64(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }
  static BitSet64 from_indices(const std::vector<int>& indices) {
    BitSet64 s;
    for (int i : indices) s.insert(i);
    return s;
  }
  /// {0, ..., n-1}.
  static constexpr BitSet64 full(int n) {
    return BitSet64(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(BitSet64 other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet64 other) const { return (bits_ & other.bits_) != 0; }
  /// Largest index present plus one (0 when empty).
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr BitSet64 operator&(BitSet64 o) const { return BitSet64(bits_ & o.bits_); }
  constexpr BitSet64 operator|(BitSet64 o) const { return BitSet64(bits_ | o.bits_); }
  constexpr BitSet64 operator^(BitSet64 o) const { return BitSet64(bits_ ^ o.bits_); }
  constexpr BitSet64 minus(BitSet64 o) const { return BitSet64(bits_ & ~o.bits_); }
  constexpr BitSet64& operator&=(BitSet64 o) { bits_ &= o.bits_; return *this; }
  constexpr BitSet64& operator|=(BitSet64 o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const BitSet64&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct ElementTag {};
struct MemberTag {};

/// Subset of a ground set {0, ..., ground_size-1}.
using ElementSet = BitSet64<ElementTag>;
/// Subfamily of a SetSystem, given by member positions.
using Selector = BitSet64<MemberTag>;

/// A finite set system: a ground set of dense indices and an ordered list of
/// member subsets. Duplicates and empty members are allowed.
class SetSystem {
 public:
  static constexpr int kMaxGround = ElementSet::kCapacity;
  static constexpr int kMaxMembers = Selector::kCapacity;

  /// Throws InputError if ground_size is outside [1, 64], a member has an
  /// element outside the ground set, or there are more than 64 members.
  SetSystem(int ground_size, std::vector<ElementSet> members);

  int ground_size() const { return ground_size_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<ElementSet>& members() const { return members_; }
  const ElementSet& member(int i) const { return members_.at(static_cast<std::size_t>(i)); }
  ElementSet ground() const { return ElementSet::full(ground_size_); }
  /// Selector over every member position.
  Selector all() const { return Selector::full(size()); }

  bool operator==(const SetSystem&) const = default;

 private:
  int ground_size_;
  std::vector<ElementSet> members_;
};

/// Intersection of the selected members; the ground set for the empty selector.
ElementSet meet(const SetSystem& f, Selector g);

/// F-convex hull: intersection of all members containing `p`, or the full
/// ground set when no member does.
ElementSet hull(const SetSystem& f, ElementSet p);

bool is_clique(const SetSystem& f, Selector g);

/// True iff every sub-selector of G with at most c members is a clique. For
/// |G| >= c this is "every c-element subset is a clique"; for |G| < c it
/// requires G itself to be a clique.
bool is_cwise_clique(const SetSystem& f, Selector g, int c);

/// The members at the positions of `g`, in order.
SetSystem restrict(const SetSystem& f, Selector g);

/// Throws InputError if `g` names a position outside the member list.
void check_selector(const SetSystem& f, Selector g);

// ".ss" text format:
//   # comment
//   ground <n>
//   set <i1> <i2> ...
SetSystem parse_set_system(std::istream& in);
SetSystem parse_set_system(const std::string& text);
SetSystem load_set_system(const std::string& path);
std::string format_set_system(const SetSystem& f);

}  // namespace cvxtop
