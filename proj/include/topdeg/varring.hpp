#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topdeg {

class VarRing;
using RingPtr = std::shared_ptr<const VarRing>;

// An ordered list of variable names.  Immutable; shared by every polynomial
// built over it.  Two rings are interchangeable iff their name lists match.
class VarRing {
public:
  static RingPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index(std::string_view name) const;
  bool same(const VarRing& other) const { return names_ == other.names_; }

private:
  explicit VarRing(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same(*b));
}

// Suffix used for the second copy of each variable in a doubled ring.  '#'
// starts a comment in problem files, so file-declared names never contain it
// and doubling cannot collide with them; a collision through the library API
// surfaces as a duplicate-name error from make().  The same convention tags
// the elimination variable (see groebner).
inline constexpr std::string_view kPrimeSuffix = "#p";

// Ring with a primed copy of every variable appended: x1,...,xn,x1#p,...,xn#p.
RingPtr doubled_ring(const RingPtr& ring);

} // namespace topdeg
