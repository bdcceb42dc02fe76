#include "topdeg/monomial_order.hpp"

namespace topdeg {

namespace {

// degrevlex on the variable slice [lo, hi): higher total degree wins; on a
// tie the *last* differing exponent decides, smaller exponent winning.
int cmp_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp(i);
    db += b.exp(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  }
  return 0;
}

} // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::degrevlex:
      return cmp_degrevlex(a, b, 0, a.nvars());
    case Kind::lex:
      return cmp_lex(a, b);
    case Kind::block: {
      int c = cmp_degrevlex(a, b, 0, block_size);
      if (c != 0) return c;
      return cmp_degrevlex(a, b, block_size, a.nvars());
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case Kind::degrevlex: return "degrevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block(" + std::to_string(block_size) + ")";
  }
  return "?";
}

} // namespace topdeg
