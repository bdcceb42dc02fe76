#pragma once

#include <cstddef>
#include <string>

#include "topdeg/monomial.hpp"

namespace topdeg {

// Monomial orders: degrevlex (default), lex, and block(k), which compares the
// first k variables degrevlex, then the rest degrevlex — lex between the two
// blocks, so it eliminates the first k variables.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block_size = 0; // leading variables eliminated (block only)

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::block || block_size == o.block_size);
  }

  std::string str() const;
};

} // namespace topdeg
