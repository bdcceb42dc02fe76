#include "topdeg/varring.hpp"

#include "topdeg/errors.hpp"

namespace topdeg {

VarRing::VarRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

RingPtr VarRing::make(std::vector<std::string> names) {
  if (names.empty()) fail(ErrorKind::Validation, "a ring needs at least one variable");
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::Validation, "empty variable name");
  }
  auto ring = RingPtr(new VarRing(std::move(names)));
  if (ring->index_.size() != ring->names_.size())
    fail(ErrorKind::Validation, "duplicate variable name");
  return ring;
}

std::optional<std::size_t> VarRing::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr doubled_ring(const RingPtr& ring) {
  std::vector<std::string> names = ring->names();
  names.reserve(2 * names.size());
  for (std::size_t i = 0; i < ring->size(); ++i)
    names.push_back(ring->name(i) + std::string(kPrimeSuffix));
  return VarRing::make(std::move(names));
}

} // namespace topdeg
