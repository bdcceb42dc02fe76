#include "topdeg/ideal.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "topdeg/errors.hpp"
#include "topdeg/runtime.hpp"

namespace topdeg {

namespace {

// ---------------------------------------------------------------------------
// Basis construction runs over Z: rational inputs are scaled to primitive
// integer polynomials and reduction steps are cross-multiplications, so no
// rational gcd work happens in the inner loop.  Only the final reduced basis
// (and the public normal form) is rational and monic.
// ---------------------------------------------------------------------------

// Abort signal for bounded basis attempts: strategies that are only worth
// running while coefficients stay small set a cap, catch the overflow, and
// move on to a differently-shaped computation of the same ideal.
struct CoeffCapExceeded {};

thread_local int g_coeff_cap_bits = 0;
#ifdef TOPDEG_TRACE_QUOTIENT
thread_local std::size_t g_trace_max_bits = 0;
#endif

struct ScopedCoeffCap {
  int prev;
  explicit ScopedCoeffCap(int bits) : prev(g_coeff_cap_bits) { g_coeff_cap_bits = bits; }
  ~ScopedCoeffCap() { g_coeff_cap_bits = prev; }
};

// GMP stays fast well past this size; the cap only exists to spot runs that
// are clearly headed for the exponential regime (hundreds of kilobits).
constexpr int kMeetCapBits = 1 << 17;

struct ZTerm {
  Monomial m;
  Integer c;
};

struct ZPoly {
  std::vector<ZTerm> t; // strictly descending under the active order
  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Integer& lc() const { return t.front().c; }
};

// Divide out the content and make the leading coefficient positive.
void make_primitive(std::vector<ZTerm>& t) {
  if (t.empty()) return;
  Integer g(0);
  for (const auto& tt : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tt.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(t.front().c) < 0) g = -g;
  if (g != 1)
    for (auto& tt : t) mpz_divexact(tt.c.get_mpz_t(), tt.c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& ord) {
  ZPoly z;
  if (p.is_zero()) return z;
  Integer den(1);
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  z.t.reserve(p.term_count());
  for (const auto& t : p.terms())
    z.t.push_back({t.mono, Integer(t.coeff.get_num() * (den / t.coeff.get_den()))});
  std::sort(z.t.begin(), z.t.end(),
            [&](const ZTerm& a, const ZTerm& b) { return ord.cmp(a.m, b.m) > 0; });
  make_primitive(z.t);
  return z;
}

Polynomial to_polynomial(const ZPoly& z, const RingPtr& ring, bool monic) {
  std::vector<Term> terms;
  terms.reserve(z.t.size());
  Rational scale(1);
  if (monic && !z.zero()) scale = Rational(1) / Rational(z.lc());
  for (const auto& t : z.t) terms.push_back({t.m, Rational(t.c) * scale});
  return Polynomial::from_terms(ring, std::move(terms));
}

// a*(mf*f) - b*(mg*g) as one sorted merge.  Callers arrange for the leading
// terms to cancel (S-polynomials, reduction steps).
std::vector<ZTerm> combine(const std::vector<ZTerm>& f, const Integer& a, const Monomial& mf,
                           const std::vector<ZTerm>& g, const Integer& b, const Monomial& mg,
                           const MonomialOrder& ord, std::size_t f_from = 0,
                           std::size_t g_from = 0) {
  std::vector<ZTerm> out;
  out.reserve(f.size() - f_from + g.size() - g_from);
  std::size_t i = f_from, j = g_from;
  bool shift_f = !mf.is_one(), shift_g = !mg.is_one();
  Monomial fm, gm;
  bool have_f = false, have_g = false;
  while (true) {
    if (!have_f && i < f.size()) {
      fm = shift_f ? f[i].m * mf : f[i].m;
      have_f = true;
    }
    if (!have_g && j < g.size()) {
      gm = shift_g ? g[j].m * mg : g[j].m;
      have_g = true;
    }
    if (!have_f && !have_g) break;
    int c = !have_f ? -1 : !have_g ? 1 : ord.cmp(fm, gm);
    if (c > 0) {
      out.push_back({std::move(fm), Integer(a * f[i].c)});
      ++i;
      have_f = false;
    } else if (c < 0) {
      out.push_back({std::move(gm), Integer(-b * g[j].c)});
      ++j;
      have_g = false;
    } else {
      Integer s = a * f[i].c - b * g[j].c;
      if (s != 0) out.push_back({std::move(fm), std::move(s)});
      ++i, ++j;
      have_f = have_g = false;
    }
  }
  return out;
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  Integer gc;
  mpz_gcd(gc.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
  ZPoly s;
  s.t = combine(f.t, Integer(g.lc() / gc), l.divided_by(f.lm()),
                g.t, Integer(f.lc() / gc), l.divided_by(g.lm()), ord);
  make_primitive(s.t);
  return s;
}

// Full division remainder of p by the current basis, up to a positive scalar.
// Keeps everything integral: each step rescales both the pending terms and
// the already-irreducible remainder by the reducer's cofactor.
ZPoly reduce_full(ZPoly p, const std::vector<ZPoly>& basis, const MonomialOrder& ord) {
  std::vector<ZTerm> done;
  std::vector<ZTerm> cur = std::move(p.t);
  std::size_t head = 0;
  int steps_since_strip = 0;
  const Monomial one_m(cur.empty() ? 0 : cur.front().m.nvars());

  while (head < cur.size()) {
    const Monomial& lm = cur[head].m;
    int best = -1;
    std::size_t best_len = SIZE_MAX;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].zero() || !basis[k].lm().divides(lm)) continue;
      if (basis[k].t.size() < best_len) {
        best_len = basis[k].t.size();
        best = int(k);
      }
    }
    if (best < 0) {
      done.push_back(std::move(cur[head]));
      ++head;
      continue;
    }
    const ZPoly& g = basis[std::size_t(best)];
    Integer gc;
    mpz_gcd(gc.get_mpz_t(), cur[head].c.get_mpz_t(), g.lc().get_mpz_t());
    Integer a(g.lc() / gc);  // positive: basis elements are primitive
    Integer b(cur[head].c / gc);
    if (a != 1)
      for (auto& t : done) t.c *= a;
    cur = combine(cur, a, one_m, g.t, b, lm.divided_by(g.lm()), ord, head, 0);
    head = 0;

    // The cross-multiplications inflate coefficients; strip the joint
    // content now and then so reductions stay cheap.
    if (++steps_since_strip >= 16) {
      steps_since_strip = 0;
      const std::vector<ZTerm>& probe = done.empty() ? cur : done;
      if (!probe.empty() && mpz_sizeinbase(probe.front().c.get_mpz_t(), 2) > 256) {
        Integer g2(0);
        for (const auto& t : done) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : cur) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.c.get_mpz_t());
        if (g2 > 1) {
          for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g2.get_mpz_t());
          for (auto& t : cur) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g2.get_mpz_t());
        }
        if (g_coeff_cap_bits) {
          const std::vector<ZTerm>& after = done.empty() ? cur : done;
          if (!after.empty()) {
            const std::size_t bits = mpz_sizeinbase(after.front().c.get_mpz_t(), 2);
#ifdef TOPDEG_TRACE_QUOTIENT
            g_trace_max_bits = std::max(g_trace_max_bits, bits);
#endif
            if (bits > std::size_t(g_coeff_cap_bits)) throw CoeffCapExceeded{};
          }
        }
      }
    }
  }
  ZPoly r;
  r.t = std::move(done);
  make_primitive(r.t);
  return r;
}

// ---------------------------------------------------------------------------
// Buchberger with the Gebauer-Moeller pair update (chain criterion among new
// pairs, coprime-leading-term drop, back-pruning of old pairs) and normal
// pair selection (smallest lcm in the active order).
// ---------------------------------------------------------------------------

struct Pair {
  std::uint32_t i, j;
  Monomial l; // lcm of the leading monomials
};

class Buchberger {
public:
  Buchberger(const MonomialOrder& ord) : ord_(ord) {}

  void add_input(ZPoly p) {
    if (p.zero()) return;
    ZPoly r = reduce_full(std::move(p), basis_, ord_);
    if (!r.zero()) insert(std::move(r));
  }

  void run() {
    int since_deadline = 0;
    while (!pairs_.empty()) {
      if (++since_deadline >= 64) {
        since_deadline = 0;
        check_deadline();
      }
      std::size_t pick = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[pick])) pick = k;
      Pair p = std::move(pairs_[pick]);
      pairs_[pick] = std::move(pairs_.back());
      pairs_.pop_back();

      ZPoly s = spoly(basis_[p.i], basis_[p.j], ord_);
      ZPoly r = reduce_full(std::move(s), basis_, ord_);
      if (!r.zero()) insert(std::move(r));
    }
  }

  const std::vector<ZPoly>& basis() const { return basis_; }

private:
  bool pair_less(const Pair& a, const Pair& b) const {
    int c = ord_.cmp(a.l, b.l);
    if (c != 0) return c < 0;
    c = Monomial::cmp_exponents(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void insert(ZPoly h) {
    const std::uint32_t t = std::uint32_t(basis_.size());
    const Monomial& lmh = h.lm();

    // Candidate pairs with every live element, minimal-lcm filtered: a pair
    // survives only if no other candidate's lcm divides its own (ties keep
    // the first), then coprime leading terms are dropped outright.
    std::vector<Pair> cand;
    for (std::uint32_t i = 0; i < t; ++i)
      if (alive_[i]) cand.push_back({i, t, Monomial::lcm(basis_[i].lm(), lmh)});
    std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
      int c = ord_.cmp(a.l, b.l);
      if (c != 0) return c < 0;
      c = Monomial::cmp_exponents(a.l, b.l);
      if (c != 0) return c < 0;
      return a.i < b.i;
    });
    std::vector<Pair> kept;
    for (auto& c : cand) {
      bool dominated = false;
      for (const auto& k : kept)
        if (k.l.divides(c.l)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(std::move(c));
    }
    // Old pairs whose lcm the new leading monomial properly refines are done
    // for (chain criterion).
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lmh.divides(p.l)) return false;
      if (Monomial::lcm(basis_[p.i].lm(), lmh) == p.l) return false;
      if (Monomial::lcm(basis_[p.j].lm(), lmh) == p.l) return false;
      return true;
    });
    for (auto& k : kept)
      if (!basis_[k.i].lm().coprime(lmh)) pairs_.push_back(std::move(k));

    // Elements whose leading monomial the new one divides stop spawning
    // pairs; they remain available as reducers.
    for (std::uint32_t i = 0; i < t; ++i)
      if (alive_[i] && lmh.divides(basis_[i].lm())) alive_[i] = false;

    basis_.push_back(std::move(h));
    alive_.push_back(true);
  }

  MonomialOrder ord_;
  std::vector<ZPoly> basis_;
  std::vector<char> alive_;
  std::vector<Pair> pairs_;
};

// Final interreduction: keep the minimal leading monomials, then one full
// normal-form pass per element (leading monomials are fixed by then, so a
// single pass yields the unique reduced basis).
std::vector<Polynomial> reduce_basis(const std::vector<ZPoly>& raw, const RingPtr& ring,
                                     const MonomialOrder& ord) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!raw[i].zero()) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.cmp(raw[a].lm(), raw[b].lm());
    if (c != 0) return c < 0;
    return Monomial::cmp_exponents(raw[a].lm(), raw[b].lm()) < 0;
  });
  std::vector<std::size_t> minimal;
  for (auto i : idx) {
    bool divisible = false;
    for (auto k : minimal)
      if (raw[k].lm().divides(raw[i].lm())) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(i);
  }

  std::vector<ZPoly> kept;
  kept.reserve(minimal.size());
  for (auto i : minimal) kept.push_back(raw[i]);

  std::vector<Polynomial> out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<ZPoly> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    // Tail-reduce: the head is irreducible by minimality.
    ZPoly r = reduce_full(kept[i], others, ord);
    out[i] = to_polynomial(r, ring, /*monic=*/true);
  }
  return out;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const MonomialOrder& ord) {
  std::vector<ZPoly> inputs;
  for (const auto& g : gens) {
    ZPoly z = to_zpoly(g, ord);
    if (!z.zero()) inputs.push_back(std::move(z));
  }
  // Feed inputs small-to-large: later ones reduce against earlier ones on
  // entry, which both dedupes and pre-trims the generating set.
  std::sort(inputs.begin(), inputs.end(), [&](const ZPoly& a, const ZPoly& b) {
    int c = ord.cmp(a.lm(), b.lm());
    if (c != 0) return c < 0;
    return a.t.size() < b.t.size();
  });
  Buchberger run(ord);
  for (auto& p : inputs) run.add_input(std::move(p));
  run.run();
  return reduce_basis(run.basis(), ring, ord);
}

} // namespace

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens, MonomialOrder order)
    : ring_(std::move(ring)), gens_(std::move(gens)), order_(order),
      cache_(std::make_shared<GbCache>()) {
  for (const auto& g : gens_)
    if (!same_ring(g.ring(), ring_))
      fail(ErrorKind::RingMismatch, "ideal generator over a different ring");
  if (order_.kind == MonomialOrder::Kind::block &&
      (order_.block_size == 0 || order_.block_size >= ring_->size()))
    fail(ErrorKind::Validation, "block order must split the variables");
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once,
                 [this] { cache_->basis = buchberger(gens_, ring_, order_); });
  return cache_->basis;
}

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

namespace {

// Division context: basis terms pre-sorted under the ideal's order, reused
// across many normal-form calls (the multiplication-table fill in particular).
struct NfContext {
  RingPtr ring;
  MonomialOrder ord;
  std::vector<std::vector<Term>> reducers; // monic, descending under ord

  NfContext(const Ideal& I) : ring(I.ring()), ord(I.order()) {
    for (const auto& g : I.groebner_basis()) {
      std::vector<Term> t(g.terms());
      std::sort(t.begin(), t.end(),
                [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
      reducers.push_back(std::move(t));
    }
  }

  Polynomial reduce(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring))
      fail(ErrorKind::RingMismatch, "normal form of a polynomial over a different ring");
    std::vector<Term> cur(f.terms());
    std::sort(cur.begin(), cur.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    std::vector<Term> done;
    std::size_t head = 0;
    while (head < cur.size()) {
      const Monomial& lm = cur[head].mono;
      const std::vector<Term>* g = nullptr;
      for (const auto& red : reducers)
        if (red.front().mono.divides(lm)) {
          g = &red;
          break;
        }
      if (!g) {
        done.push_back(std::move(cur[head]));
        ++head;
        continue;
      }
      // f -= c * m * g with g monic: the head cancels against g's lead.
      Rational c = cur[head].coeff;
      Monomial m = lm.divided_by((*g)[0].mono);
      std::vector<Term> next;
      next.reserve(cur.size() - head + g->size());
      std::size_t i = head + 1, j = 1;
      while (i < cur.size() || j < g->size()) {
        int cm;
        if (i >= cur.size()) cm = -1;
        else if (j >= g->size()) cm = 1;
        else cm = ord.cmp(cur[i].mono, (*g)[j].mono * m);
        if (cm > 0) {
          next.push_back(std::move(cur[i++]));
        } else if (cm < 0) {
          next.push_back({(*g)[j].mono * m, -c * (*g)[j].coeff});
          ++j;
        } else {
          Rational s = cur[i].coeff - c * (*g)[j].coeff;
          if (s != 0) next.push_back({cur[i].mono, std::move(s)});
          ++i, ++j;
        }
      }
      cur = std::move(next);
      head = 0;
    }
    return Polynomial::from_terms(ring, std::move(done));
  }
};

} // namespace

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return NfContext(I).reduce(f);
}

// ---------------------------------------------------------------------------
// Ideal arithmetic
// ---------------------------------------------------------------------------

namespace {

void require_compatible(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    fail(ErrorKind::RingMismatch, "ideals over different rings");
}

std::vector<Polynomial> nonzero_gens(const Ideal& I) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators())
    if (!g.is_zero()) out.push_back(g);
  return out;
}

// J : l^inf without any elimination order.  Adjoin z as the cheapest
// degrevlex variable together with z - l, homogenize the generators with #h,
// and take one degree-reverse-lexicographic basis of the homogeneous ideal:
// stripping the z-powers off its elements is then exactly saturation by z
// (degrevlex pushes every z factor to the tail, so a basis element divisible
// by z stays one after division).  Sending #h to 1 and z back to l lands the
// saturation in the original ring.  Callers must certify the result against
// the ideal they actually want; nothing here is trusted downstream.
Ideal saturation_candidate(const Ideal& J, const Polynomial& l) {
  const RingPtr& ring = J.ring();
  const std::size_t n = ring->size();

  std::vector<std::string> names(ring->names().begin(), ring->names().end());
  names.push_back("#h");
  names.push_back("#z");
  RingPtr ext = VarRing::make(std::move(names));

  auto homogenize = [&](const Polynomial& p) {
    std::uint32_t deg = 0;
    for (const auto& t : p.terms()) deg = std::max(deg, t.mono.degree());
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      std::vector<std::uint16_t> e = t.mono.exponents();
      e[n] = std::uint16_t(deg - t.mono.degree());
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
  };

  std::vector<Polynomial> gens;
  for (const auto& g : nonzero_gens(J)) gens.push_back(homogenize(embed(g, ext)));
  gens.push_back(homogenize(Polynomial::variable(ext, n + 1) - embed(l, ext)));

  Ideal K(ext, std::move(gens)); // homogeneous, degrevlex, z cheapest

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring, i));
  images.push_back(Polynomial::constant(ring, 1)); // #h
  images.push_back(l);                             // #z

  std::vector<Polynomial> out;
  for (const auto& g : K.groebner_basis()) {
    std::uint16_t minz = std::numeric_limits<std::uint16_t>::max();
    for (const auto& t : g.terms()) minz = std::min(minz, t.mono.exp(n + 1));
    std::vector<Term> terms;
    terms.reserve(g.term_count());
    for (const auto& t : g.terms()) {
      std::vector<std::uint16_t> e = t.mono.exponents();
      e[n + 1] = std::uint16_t(e[n + 1] - minz);
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.push_back(substitute(Polynomial::from_terms(ext, std::move(terms)), ring, images));
  }
  return Ideal(ring, std::move(out), J.order());
}

Ideal unit_ideal(const RingPtr& ring, const MonomialOrder& ord) {
  return Ideal(ring, {Polynomial::constant(ring, 1)}, ord);
}

} // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_compatible(I, J);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens), I.order());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_compatible(I, J);
  std::vector<Polynomial> gens;
  for (const auto& a : nonzero_gens(I))
    for (const auto& b : nonzero_gens(J)) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens), I.order());
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_compatible(I, J);
  const auto& gi = I.groebner_basis();
  const auto& gj = J.groebner_basis();
  if (gi.empty()) return Ideal(I.ring(), {}, I.order());
  if (gj.empty()) return Ideal(I.ring(), {}, I.order());

  // Tag ring (#t, x1..xn); eliminate t from t*I + (1-t)*J.
  const RingPtr& ring = I.ring();
  std::vector<std::string> names;
  names.reserve(ring->size() + 1);
  names.push_back("#t");
  for (const auto& n : ring->names()) names.push_back(n);
  RingPtr tagged = VarRing::make(std::move(names));

  auto lift = [&](const Polynomial& p, bool with_t) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      std::vector<std::uint16_t> e(ring->size() + 1, 0);
      e[0] = with_t ? 1 : 0;
      for (std::size_t k = 0; k < ring->size(); ++k) e[k + 1] = t.mono.exp(k);
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(tagged, std::move(terms));
  };

  std::vector<Polynomial> gens;
  for (const auto& f : gi) gens.push_back(lift(f, true));               // t f
  for (const auto& g : gj) gens.push_back(lift(g, false) - lift(g, true)); // (1-t) g

  Ideal elim(tagged, std::move(gens), MonomialOrder::block(1));
  std::vector<Polynomial> result;
  for (const auto& p : elim.groebner_basis()) {
    bool has_t = false;
    for (const auto& t : p.terms())
      if (t.mono.exp(0)) {
        has_t = true;
        break;
      }
    if (has_t) continue;
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      std::vector<std::uint16_t> e(ring->size());
      for (std::size_t k = 0; k < ring->size(); ++k) e[k] = t.mono.exp(k + 1);
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    result.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(result), I.order());
}

Ideal ideal_quotient(const Ideal& J, const Ideal& I) {
  require_compatible(J, I);
  std::vector<Polynomial> gens = nonzero_gens(I);
  // J : (0) is the whole ring.
  if (gens.empty()) return unit_ideal(J.ring(), J.order());

  NfContext nf(J);
  // Generators already in J contribute the unit ideal to the meet below.
  std::vector<Polynomial> live;
  for (const auto& g : gens)
    if (!nf.reduce(g).is_zero()) live.push_back(g);
  if (live.empty()) return unit_ideal(J.ring(), J.order());

  auto colon_principal = [&](const Polynomial& g) {
    Ideal principal(J.ring(), {g}, J.order());
    Ideal meet = ideal_intersect(J, principal);
    std::vector<Polynomial> quot;
    for (const auto& k : meet.generators())
      quot.push_back(exact_poly_divide(k, g, J.order()));
    return Ideal(J.ring(), std::move(quot), J.order());
  };

  auto meet_of_colons = [&]() {
    std::optional<Ideal> acc;
    for (const auto& g : live) {
      Ideal part = colon_principal(g);
      acc = acc ? ideal_intersect(*acc, part) : part;
    }
    return acc ? *acc : unit_ideal(J.ring(), J.order());
  };

  // The generator-by-generator meet is exact as-is and cheap on sparse
  // inputs, but its tag eliminations can blow past any coefficient bound on
  // dense ones.  Run it under a bit cap first and treat an overflow as "wrong
  // tool for this ideal".
  try {
    ScopedCoeffCap cap(kMeetCapBits);
#ifdef TOPDEG_TRACE_QUOTIENT
    g_trace_max_bits = 0;
    Ideal r = meet_of_colons();
    std::fprintf(stderr, "[quotient] capped meet ok, max bits %zu\n", g_trace_max_bits);
    return r;
#else
    return meet_of_colons();
#endif
  } catch (const CoeffCapExceeded&) {
#ifdef TOPDEG_TRACE_QUOTIENT
    std::fprintf(stderr, "[quotient] capped meet aborted at %zu bits\n", g_trace_max_bits);
#endif
  }

  // Saturation route: J : I sits inside J : l inside J : l^inf for any l in
  // I, and the missing inclusion holds exactly when every product h*g with h
  // in the candidate lands in J.  A passing certificate therefore proves the
  // candidate IS the colon; a failing one costs a degrevlex basis, never
  // correctness.
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt > 0 && live.size() < 2) break; // same combination again
    Polynomial l(J.ring());
    Rational c(1);
    for (const auto& g : live) {
      l += g * c;
      c += Rational(attempt + 1);
    }
    if (nf.reduce(l).is_zero()) continue;
    Ideal guess = saturation_candidate(J, l);
    bool certified = true;
    for (const auto& h : guess.groebner_basis()) {
      for (const auto& g : live)
        if (!nf.reduce(h * g).is_zero()) {
          certified = false;
          break;
        }
      if (!certified) break;
    }
#ifdef TOPDEG_TRACE_QUOTIENT
    std::fprintf(stderr, "[quotient] saturation attempt %d: %s\n", attempt,
                 certified ? "certified" : "rejected");
#endif
    if (certified) return guess;
  }

  return meet_of_colons();
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  const std::size_t n = I.ring()->size();
  if (is_unit_ideal(I)) return std::vector<Monomial>{};
  if (gb.empty()) return std::nullopt; // zero ideal, n >= 1

  std::vector<Monomial> lms;
  const MonomialOrder& ord = I.order();
  for (const auto& g : gb) {
    const Term* lead = &g.terms().front();
    for (const auto& t : g.terms())
      if (ord.cmp(t.mono, lead->mono) > 0) lead = &t;
    lms.push_back(lead->mono);
  }

  // Finite dimension iff every variable has a pure power among the leads.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : lms)
    for (std::size_t v = 0; v < n; ++v)
      if (m.exp(v) == m.degree() && m.degree() > 0)
        bound[v] = bound[v] ? std::min(bound[v], std::uint32_t(m.exp(v))) : m.exp(v);
  unsigned long long box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (bound[v] == 0) return std::nullopt;
    box *= bound[v];
    if (box > (1ull << 22))
      fail(ErrorKind::Validation, "standard monomial enumeration too large");
  }

  std::vector<Monomial> basis;
  std::vector<std::uint16_t> e(n, 0);
  while (true) {
    Monomial m((std::vector<std::uint16_t>(e)));
    bool reducible = false;
    for (const auto& l : lms)
      if (l.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(std::move(m));
    std::size_t v = 0;
    while (v < n) {
      if (++e[v] < bound[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
    int c = ord.cmp(a, b);
    if (c != 0) return c < 0;
    return Monomial::cmp_exponents(a, b) < 0;
  });
  return basis;
}

Polynomial exact_poly_divide(const Polynomial& p, const Polynomial& g,
                             const MonomialOrder& order) {
  if (g.is_zero()) fail(ErrorKind::Validation, "division by the zero polynomial");
  auto leading = [&](const Polynomial& q) {
    const Term* lead = &q.terms().front();
    for (const auto& t : q.terms())
      if (order.cmp(t.mono, lead->mono) > 0) lead = &t;
    return lead;
  };
  const Term* lg = leading(g);
  Polynomial quotient(p.ring());
  Polynomial rem = p;
  while (!rem.is_zero()) {
    const Term* lr = leading(rem);
    if (!lg->mono.divides(lr->mono))
      fail(ErrorKind::Internal, "exact_poly_divide: not a multiple of the divisor");
    Polynomial piece =
        Polynomial::monomial(p.ring(), lr->mono.divided_by(lg->mono), lr->coeff / lg->coeff);
    quotient += piece;
    rem -= piece * g;
  }
  return quotient;
}

bool buchberger_certifies(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  if (gb.size() < 2) return true;
  NfContext nf(I);
  const MonomialOrder& ord = I.order();
  auto leading = [&](const Polynomial& q) {
    const Term* lead = &q.terms().front();
    for (const auto& t : q.terms())
      if (ord.cmp(t.mono, lead->mono) > 0) lead = &t;
    return lead;
  };
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Term* li = leading(gb[i]);
      const Term* lj = leading(gb[j]);
      Monomial l = Monomial::lcm(li->mono, lj->mono);
      Polynomial s =
          Polynomial::monomial(I.ring(), l.divided_by(li->mono), Rational(1) / li->coeff) * gb[i] -
          Polynomial::monomial(I.ring(), l.divided_by(lj->mono), Rational(1) / lj->coeff) * gb[j];
      if (!nf.reduce(s).is_zero()) return false;
    }
  }
  return true;
}

} // namespace topdeg
