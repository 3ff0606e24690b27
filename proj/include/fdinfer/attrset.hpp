#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdinfer {

/// True for names matching `[A-Za-z][A-Za-z0-9_]*`.
bool is_valid_identifier(std::string_view name) noexcept;

/// A single relation attribute. Construction validates the name.
class Attribute {
 public:
  explicit Attribute(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Attribute&, const Attribute&) = default;
  friend std::strong_ordering operator<=>(const Attribute& a, const Attribute& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

/// Canonical attribute set: members strictly ascending by name.
///
/// Permuted or repeated input lists collapse to the same value, so equality
/// is plain element-wise comparison.
class AttrSet {
 public:
  AttrSet() = default;
  AttrSet(std::initializer_list<std::string_view> names);

  static AttrSet from_names(std::span<const std::string> names);
  static AttrSet from_attributes(std::vector<Attribute> attrs);

  const std::vector<Attribute>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const AttrSet&, const AttrSet&) = default;
  friend auto operator<=>(const AttrSet&, const AttrSet&) = default;

 private:
  std::vector<Attribute> members_;
};

AttrSet canonical_attrset(std::span<const std::string> names);

AttrSet set_union(const AttrSet& a, const AttrSet& b);
AttrSet set_difference(const AttrSet& a, const AttrSet& b);
AttrSet set_insert(const AttrSet& s, const Attribute& a);
bool contains(const AttrSet& s, const Attribute& a);
bool is_subset(const AttrSet& sub, const AttrSet& super);

/// Names joined with `sep`.
std::string join(const AttrSet& s, std::string_view sep);

/// True when every member name is one character long.
bool all_single_char(const AttrSet& s) noexcept;

/// A determinant/dependent pair without provenance.
struct Dependency {
  AttrSet determinant;
  AttrSet dependent;

  friend bool operator==(const Dependency&, const Dependency&) = default;
  friend auto operator<=>(const Dependency&, const Dependency&) = default;
};

/// Throws ValidationError when either side is empty.
void require_nonempty(const Dependency& fd);

/// Bitmask over a universe; bit i is the i-th attribute in canonical order.
using AttrBits = std::uint64_t;

/// The full attribute set of a relation. At most 64 attributes, so any
/// subset fits an AttrBits mask whose bit order equals canonical order.
class Universe {
 public:
  static constexpr std::size_t kMaxAttributes = 64;

  Universe() = default;
  explicit Universe(AttrSet attrs);

  const AttrSet& attrs() const noexcept { return attrs_; }
  std::size_t size() const noexcept { return attrs_.size(); }
  bool empty() const noexcept { return attrs_.empty(); }

  AttrBits all() const noexcept;
  bool contains(const Attribute& a) const;
  bool covers(const AttrSet& s) const;

  /// Throws ValidationError naming the first attribute outside the universe.
  AttrBits bits_of(const AttrSet& s) const;
  AttrSet set_of(AttrBits bits) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  AttrSet attrs_;
};

}  // namespace fdinfer
