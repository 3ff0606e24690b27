#include "fdinfer/attrset.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "fdinfer/error.hpp"

namespace fdinfer {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty() || !is_alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return is_alpha(c) || is_digit(c) || c == '_'; });
}

Attribute::Attribute(std::string name) : name_(std::move(name)) {
  if (!is_valid_identifier(name_)) {
    throw ValidationError("invalid attribute identifier '" + name_ + "'");
  }
}

AttrSet::AttrSet(std::initializer_list<std::string_view> names) {
  std::vector<Attribute> attrs;
  attrs.reserve(names.size());
  for (auto n : names) attrs.emplace_back(std::string(n));
  *this = from_attributes(std::move(attrs));
}

AttrSet AttrSet::from_names(std::span<const std::string> names) {
  std::vector<Attribute> attrs;
  attrs.reserve(names.size());
  for (const auto& n : names) attrs.emplace_back(n);
  return from_attributes(std::move(attrs));
}

AttrSet AttrSet::from_attributes(std::vector<Attribute> attrs) {
  std::sort(attrs.begin(), attrs.end());
  attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
  AttrSet out;
  out.members_ = std::move(attrs);
  return out;
}

AttrSet canonical_attrset(std::span<const std::string> names) { return AttrSet::from_names(names); }

AttrSet set_union(const AttrSet& a, const AttrSet& b) {
  std::vector<Attribute> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AttrSet::from_attributes(std::move(out));
}

AttrSet set_difference(const AttrSet& a, const AttrSet& b) {
  std::vector<Attribute> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return AttrSet::from_attributes(std::move(out));
}

AttrSet set_insert(const AttrSet& s, const Attribute& a) {
  if (contains(s, a)) return s;
  std::vector<Attribute> out = s.members();
  out.push_back(a);
  return AttrSet::from_attributes(std::move(out));
}

bool contains(const AttrSet& s, const Attribute& a) {
  return std::binary_search(s.begin(), s.end(), a);
}

bool is_subset(const AttrSet& sub, const AttrSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string join(const AttrSet& s, std::string_view sep) {
  std::string out;
  for (const auto& a : s) {
    if (!out.empty()) out += sep;
    out += a.name();
  }
  return out;
}

bool all_single_char(const AttrSet& s) noexcept {
  return std::all_of(s.begin(), s.end(), [](const Attribute& a) { return a.name().size() == 1; });
}

void require_nonempty(const Dependency& fd) {
  if (fd.determinant.empty()) throw ValidationError("empty determinant");
  if (fd.dependent.empty()) throw ValidationError("empty dependent");
}

Universe::Universe(AttrSet attrs) : attrs_(std::move(attrs)) {
  if (attrs_.size() > kMaxAttributes) {
    throw ValidationError("universe has " + std::to_string(attrs_.size()) +
                          " attributes; at most " + std::to_string(kMaxAttributes) +
                          " are supported");
  }
}

AttrBits Universe::all() const noexcept {
  return attrs_.size() == 64 ? ~AttrBits{0} : (AttrBits{1} << attrs_.size()) - 1;
}

bool Universe::contains(const Attribute& a) const { return fdinfer::contains(attrs_, a); }

bool Universe::covers(const AttrSet& s) const { return is_subset(s, attrs_); }

AttrBits Universe::bits_of(const AttrSet& s) const {
  AttrBits bits = 0;
  const auto& all = attrs_.members();
  for (const auto& a : s) {
    auto it = std::lower_bound(all.begin(), all.end(), a);
    if (it == all.end() || *it != a) {
      throw ValidationError("attribute '" + a.name() + "' is not declared in the universe");
    }
    bits |= AttrBits{1} << static_cast<unsigned>(it - all.begin());
  }
  return bits;
}

AttrSet Universe::set_of(AttrBits bits) const {
  std::vector<Attribute> out;
  out.reserve(static_cast<std::size_t>(std::popcount(bits)));
  const auto& all = attrs_.members();
  while (bits != 0) {
    auto i = static_cast<std::size_t>(std::countr_zero(bits));
    if (i >= all.size()) throw ValidationError("attribute mask exceeds universe");
    out.push_back(all[i]);
    bits &= bits - 1;
  }
  return AttrSet::from_attributes(std::move(out));
}

}  // namespace fdinfer
