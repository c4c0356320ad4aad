#include "lienil/algebra.hpp"

#include <algorithm>
#include <deque>

#include "lienil/errors.hpp"

namespace lienil {

namespace {

// Two-sided (or conjugation) closure driver: every residue that enlarges the
// span is queued and pushed through `expand`, which feeds new candidates.
template <class Expand>
void close_span(SpanBuilder& builder, std::deque<std::vector<Coeff>>& queue, Expand&& expand) {
  std::vector<Coeff> residue;
  while (!queue.empty()) {
    std::vector<Coeff> v = std::move(queue.front());
    queue.pop_front();
    expand(v, [&](std::span<const Coeff> candidate) {
      if (builder.insert(candidate, &residue)) queue.push_back(residue);
    });
  }
}

void check_chain_cap(AlgebraContext const& ctx, std::size_t length) {
  if (length > ctx.dim() + 2) throw InvariantError("ideal chain did not reach zero within |G| + 2 steps");
}

void check_strict(std::vector<Ideal> const& terms) {
  std::size_t n = terms.size();
  if (n >= 2 && terms[n - 1].space.dimension() >= terms[n - 2].space.dimension())
    throw InvariantError("ideal chain is not strictly decreasing");
}

}  // namespace

AlgebraContext::AlgebraContext(std::shared_ptr<const FiniteGroup> group)
    : group_(std::move(group)), field_(group_->p()) {
  FiniteGroup const& g = *group_;
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Element s : g.generators()) {
        Element y = g.mul(g.mul(g.inv(s), cls[i]), s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    if (cls.size() > 1) noncentral_reps_.push_back(x);
  }
}

void AlgebraContext::right_translate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const {
  FiniteGroup const& grp = *group_;
  for (Element h = 0; h < grp.order(); ++h) out[grp.mul(h, g)] = v[h];
}

void AlgebraContext::left_translate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const {
  FiniteGroup const& grp = *group_;
  for (Element h = 0; h < grp.order(); ++h) out[grp.mul(g, h)] = v[h];
}

void AlgebraContext::conjugate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const {
  FiniteGroup const& grp = *group_;
  Element gi = grp.inv(g);
  for (Element h = 0; h < grp.order(); ++h) out[grp.mul(grp.mul(gi, h), g)] = v[h];
}

AlgebraElement AlgebraElement::zero(AlgebraContext const& ctx) { return AlgebraElement(CoeffVector(ctx.dim())); }

AlgebraElement AlgebraElement::one(AlgebraContext const& ctx) { return group_element(ctx, 0); }

AlgebraElement AlgebraElement::group_element(AlgebraContext const& ctx, Element g) {
  CoeffVector v(ctx.dim());
  v[g] = 1;
  return AlgebraElement(std::move(v));
}

AlgebraElement add(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b) {
  CoeffVector v(ctx.dim());
  for (std::size_t i = 0; i < ctx.dim(); ++i) v[i] = ctx.field().add(a.coeffs()[i], b.coeffs()[i]);
  return AlgebraElement(std::move(v));
}

AlgebraElement subtract(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b) {
  CoeffVector v(ctx.dim());
  for (std::size_t i = 0; i < ctx.dim(); ++i) v[i] = ctx.field().sub(a.coeffs()[i], b.coeffs()[i]);
  return AlgebraElement(std::move(v));
}

AlgebraElement multiply(AlgebraContext const& ctx, std::span<const Coeff> a, std::span<const Coeff> b) {
  const std::size_t n = ctx.dim();
  FiniteGroup const& g = ctx.group();
  std::vector<Element> support;
  for (Element h = 0; h < n; ++h)
    if (b[h]) support.push_back(h);
  // Each accumulator sums at most n products below p^2, well inside 32 bits for n <= 2^16.
  std::vector<std::uint32_t> acc(n, 0);
  for (Element x = 0; x < n; ++x) {
    const std::uint32_t ax = a[x];
    if (!ax) continue;
    for (Element h : support) acc[g.mul(x, h)] += ax * b[h];
  }
  CoeffVector out(n);
  const unsigned p = ctx.field().p();
  for (std::size_t i = 0; i < n; ++i) out[i] = Coeff(acc[i] % p);
  return AlgebraElement(std::move(out));
}

AlgebraElement multiply(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b) {
  return multiply(ctx, a.view(), b.view());
}

AlgebraElement power(AlgebraContext const& ctx, AlgebraElement const& a, unsigned k) {
  AlgebraElement r = AlgebraElement::one(ctx);
  for (unsigned i = 0; i < k; ++i) r = multiply(ctx, r, a);
  return r;
}

Coeff augmentation(AlgebraContext const& ctx, AlgebraElement const& a) {
  unsigned long long s = 0;
  for (Coeff c : a.view()) s += c;
  return ctx.field().reduce(static_cast<long long>(s));
}

AlgebraElement lie_bracket(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b) {
  return subtract(ctx, multiply(ctx, a, b), multiply(ctx, b, a));
}

Unit Unit::from(AlgebraContext const& ctx, AlgebraElement a) {
  FieldSpec const& f = ctx.field();
  Coeff c = augmentation(ctx, a);
  if (c == 0) throw DomainError("element with zero augmentation is not a unit");
  // a = c (1 + d) with d in the augmentation ideal, which is nilpotent, so
  // (1 + d)^-1 = sum_k (-d)^k terminates.
  Coeff ci = f.inv(c);
  CoeffVector scaled = a.coeffs();
  f.scale(scaled.view(), ci);
  scaled[0] = f.sub(scaled[0], 1);
  CoeffVector minus_d(ctx.dim());
  for (std::size_t i = 0; i < ctx.dim(); ++i) minus_d[i] = f.neg(scaled[i]);
  AlgebraElement neg_d(std::move(minus_d));
  AlgebraElement sum = AlgebraElement::one(ctx);
  AlgebraElement term = AlgebraElement::one(ctx);
  for (std::size_t k = 1; k <= ctx.dim() + 1; ++k) {
    term = multiply(ctx, term, neg_d);
    if (term.is_zero()) break;
    sum = add(ctx, sum, term);
  }
  CoeffVector inv = sum.coeffs();
  f.scale(inv.view(), ci);
  AlgebraElement inverse(std::move(inv));
  if (!(multiply(ctx, a, inverse) == AlgebraElement::one(ctx)))
    throw InvariantError("unit inverse witness failed: u * u^-1 != 1");
  return Unit(std::move(a), std::move(inverse));
}

Unit Unit::identity(AlgebraContext const& ctx) { return Unit(AlgebraElement::one(ctx), AlgebraElement::one(ctx)); }

Unit unit_commutator(AlgebraContext const& ctx, Unit const& x, Unit const& y) {
  // (x, y)^-1 = (y, x)
  AlgebraElement v = multiply(ctx, multiply(ctx, multiply(ctx, x.inverse(), y.inverse()), x.value()), y.value());
  AlgebraElement w = multiply(ctx, multiply(ctx, multiply(ctx, y.inverse(), x.inverse()), y.value()), x.value());
  return Unit(std::move(v), std::move(w));
}

Unit unit_commutator(AlgebraContext const& ctx, std::span<const Unit> us) {
  if (us.empty()) throw InputError("commutator needs at least one argument");
  Unit c = us[0];
  for (std::size_t i = 1; i < us.size(); ++i) c = unit_commutator(ctx, c, us[i]);
  return c;
}

Unit random_unit(AlgebraContext const& ctx, std::mt19937_64& rng) {
  FieldSpec const& f = ctx.field();
  std::uniform_int_distribution<unsigned> coeff(0, f.p() - 1);
  CoeffVector v(ctx.dim());
  Coeff total = 0;
  for (std::size_t i = 1; i < ctx.dim(); ++i) {
    v[i] = Coeff(coeff(rng));
    total = f.add(total, v[i]);
  }
  // d = sum c_g (g - 1); u = 1 + d
  v[0] = f.add(1, f.neg(total));
  return Unit::from(ctx, AlgebraElement(std::move(v)));
}

AlgebraElement random_element(AlgebraContext const& ctx, Subspace const& s, std::mt19937_64& rng) {
  FieldSpec const& f = ctx.field();
  std::uniform_int_distribution<unsigned> coeff(0, f.p() - 1);
  CoeffVector v(ctx.dim());
  for (std::size_t i = 0; i < s.dimension(); ++i) f.axpy(v.view(), Coeff(coeff(rng)), s.row(i));
  return AlgebraElement(std::move(v));
}

Subspace const& LieChain::space(std::size_t n) const { return term(n).space; }

Ideal const& LieChain::term(std::size_t n) const {
  if (terms.empty() || n == 0) throw InputError("chain terms are indexed from 1");
  return n <= terms.size() ? terms[n - 1] : terms.back();
}

std::vector<std::size_t> LieChain::dimensions() const {
  std::vector<std::size_t> out;
  for (auto const& t : terms) out.push_back(t.space.dimension());
  return out;
}

std::string to_string(LieChain::Kind kind) {
  switch (kind) {
    case LieChain::Kind::lower:
      return "lower";
    case LieChain::Kind::upper:
      return "upper";
    case LieChain::Kind::augmentation:
      return "augmentation";
  }
  return "?";
}

Ideal close_ideal(AlgebraContext const& ctx, std::span<const CoeffVector> seeds) {
  SpanBuilder builder(ctx.field(), ctx.dim());
  Ideal out{Subspace(ctx.field(), ctx.dim()), {}};
  std::vector<Coeff> buf(ctx.dim());
  std::deque<std::vector<Coeff>> queue;
  std::vector<Coeff> residue;
  auto gens = ctx.group().generators();
  for (auto const& seed : seeds) {
    if (!builder.insert(seed, &residue)) continue;
    out.generators.push_back(seed);
    queue.push_back(residue);
    close_span(builder, queue, [&](std::vector<Coeff> const& v, auto&& offer) {
      for (Element s : gens) {
        ctx.right_translate(v, s, buf);
        offer(buf);
        ctx.left_translate(v, s, buf);
        offer(buf);
      }
    });
  }
  out.space = builder.finish();
  return out;
}

Subspace ideal_closure(AlgebraContext const& ctx, Subspace const& s) {
  if (s.ambient_dim() != ctx.dim()) throw InputError("subspace is not in the group algebra");
  return close_ideal(ctx, s.basis()).space;
}

std::vector<Subspace> lie_weight_spaces(AlgebraContext const& ctx, std::size_t cap) {
  if (cap < 2) throw InputError("weight-space cap must be at least 2");
  FiniteGroup const& g = ctx.group();
  const std::size_t n = ctx.dim();
  std::vector<Coeff> buf(n), left(n), right(n);
  std::deque<std::vector<Coeff>> queue;
  std::vector<Coeff> residue;
  auto conj_closure = [&](SpanBuilder& builder) {
    close_span(builder, queue, [&](std::vector<Coeff> const& v, auto&& offer) {
      for (Element s : g.generators()) {
        ctx.conjugate(v, s, buf);
        offer(buf);
      }
    });
  };

  // [x, y] = xy - yx = xy - (xy)^x, so W_2 = span{h - h^s}: s over generators suffices
  // because h - h^(st) = (h - h^s) + (h^s - (h^s)^t).
  SpanBuilder w2(ctx.field(), n);
  for (Element h = 0; h < n; ++h)
    for (Element s : g.generators()) {
      std::fill(buf.begin(), buf.end(), 0);
      Element hs = g.mul(g.mul(g.inv(s), h), s);
      if (hs == h) continue;
      buf[h] = 1;
      buf[hs] = ctx.field().neg(1);
      w2.insert(buf);
    }
  std::vector<Subspace> out{w2.finish()};

  // W_{n+1} is conjugation invariant and [w, c^h] = [w^(h^-1), c]^h, so it is the
  // conjugation closure of the brackets against noncentral class representatives.
  while (!out.back().is_zero() && out.size() + 1 < cap) {
    Subspace const& prev = out.back();
    SpanBuilder next(ctx.field(), n);
    for (std::size_t i = 0; i < prev.dimension(); ++i) {
      auto w = prev.row(i);
      for (Element c : ctx.noncentral_class_reps()) {
        ctx.right_translate(w, c, right);
        ctx.left_translate(w, c, left);
        for (std::size_t k = 0; k < n; ++k) buf[k] = ctx.field().sub(right[k], left[k]);
        if (next.insert(buf, &residue)) queue.push_back(residue);
      }
    }
    conj_closure(next);
    out.push_back(next.finish());
  }
  return out;
}

LowerChain lower_lie_chain(AlgebraContext const& ctx) {
  LowerChain out;
  out.chain.kind = LieChain::Kind::lower;
  out.weights = lie_weight_spaces(ctx, ctx.dim() + 3);
  if (!out.weights.back().is_zero()) throw InvariantError("lower Lie chain did not reach zero within |G| + 2 steps");
  out.chain.terms.push_back(Ideal{Subspace::full(ctx.field(), ctx.dim()), {AlgebraElement::one(ctx).coeffs()}});
  for (auto const& w : out.weights) {
    out.chain.terms.push_back(close_ideal(ctx, w.basis()));
    check_strict(out.chain.terms);
    check_chain_cap(ctx, out.chain.terms.size());
  }
  return out;
}

LieChain upper_lie_chain(AlgebraContext const& ctx) {
  LieChain chain;
  chain.kind = LieChain::Kind::upper;
  chain.terms.push_back(Ideal{Subspace::full(ctx.field(), ctx.dim()), {AlgebraElement::one(ctx).coeffs()}});
  const std::size_t n = ctx.dim();
  std::vector<Coeff> left(n), right(n);
  // The ideal generated by [I, R] equals the one generated by [I, s] for
  // generators s, since [u, gh] = [u, g] h + g [u, h].
  while (!chain.terms.back().space.is_zero()) {
    Subspace const& prev = chain.terms.back().space;
    std::vector<CoeffVector> seeds;
    for (std::size_t i = 0; i < prev.dimension(); ++i)
      for (Element s : ctx.group().generators()) {
        ctx.right_translate(prev.row(i), s, right);
        ctx.left_translate(prev.row(i), s, left);
        CoeffVector b(n);
        for (std::size_t k = 0; k < n; ++k) b[k] = ctx.field().sub(right[k], left[k]);
        if (!b.is_zero()) seeds.push_back(std::move(b));
      }
    chain.terms.push_back(close_ideal(ctx, seeds));
    check_strict(chain.terms);
    check_chain_cap(ctx, chain.terms.size());
  }
  return chain;
}

LieChain augmentation_chain(AlgebraContext const& ctx) {
  LieChain chain;
  chain.kind = LieChain::Kind::augmentation;
  const std::size_t n = ctx.dim();
  std::vector<CoeffVector> seeds;
  for (Element s : ctx.group().generators()) {
    if (s == 0) continue;
    CoeffVector v(n);
    v[s] = 1;
    v[0] = ctx.field().neg(1);
    seeds.push_back(std::move(v));
  }
  chain.terms.push_back(close_ideal(ctx, seeds));
  // Delta^(k+1) = Delta^k (s - 1) KG over generators s; it is already two-sided.
  while (!chain.terms.back().space.is_zero()) {
    std::vector<CoeffVector> next = augmentation_multiples(ctx, chain.terms.back().space);
    Ideal term{close_right_ideal(ctx, next), {}};
    for (auto const& v : right_ideal_generators(ctx, term.space)) term.generators.push_back(v);
    chain.terms.push_back(std::move(term));
    check_strict(chain.terms);
    check_chain_cap(ctx, chain.terms.size());
  }
  return chain;
}

std::vector<CoeffVector> augmentation_multiples(AlgebraContext const& ctx, Subspace const& a) {
  const std::size_t n = ctx.dim();
  std::vector<Coeff> buf(n);
  std::vector<CoeffVector> out;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (Element s : ctx.group().generators()) {
      ctx.right_translate(a.row(i), s, buf);
      CoeffVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = ctx.field().sub(buf[k], a.row(i)[k]);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  return out;
}

Subspace close_right_ideal(AlgebraContext const& ctx, std::span<const CoeffVector> seeds) {
  SpanBuilder builder(ctx.field(), ctx.dim());
  std::vector<Coeff> buf(ctx.dim());
  std::deque<std::vector<Coeff>> queue;
  std::vector<Coeff> residue;
  auto gens = ctx.group().generators();
  for (auto const& seed : seeds) {
    if (!builder.insert(seed, &residue)) continue;
    queue.push_back(residue);
    close_span(builder, queue, [&](std::vector<Coeff> const& v, auto&& offer) {
      for (Element s : gens) {
        ctx.right_translate(v, s, buf);
        offer(buf);
      }
    });
  }
  return builder.finish();
}

std::vector<CoeffVector> right_ideal_generators(AlgebraContext const& ctx, Subspace const& a) {
  // Any lift of a basis of A / A Delta generates A as a right ideal.
  SpanBuilder builder(close_right_ideal(ctx, augmentation_multiples(ctx, a)));
  std::vector<CoeffVector> out;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (builder.insert(a.row(i))) out.emplace_back(std::vector<Coeff>(a.row(i).begin(), a.row(i).end()));
  return out;
}

Subspace product_space(AlgebraContext const& ctx, Subspace const& a, Subspace const& b) {
  if (a.ambient_dim() != ctx.dim() || b.ambient_dim() != ctx.dim())
    throw InputError("subspace is not in the group algebra");
  SpanBuilder builder(ctx.field(), ctx.dim());
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < b.dimension(); ++j) builder.insert(multiply(ctx, a.row(i), b.row(j)).view());
  return builder.finish();
}

Ideal ideal_product(AlgebraContext const& ctx, Ideal const& a, Ideal const& b) {
  // A KG t KG = A t KG for an ideal A, so the products a t span A B as a right ideal.
  std::vector<CoeffVector> seeds;
  for (std::size_t i = 0; i < a.space.dimension(); ++i)
    for (auto const& t : b.generators) {
      AlgebraElement prod = multiply(ctx, a.space.row(i), t.view());
      if (!prod.is_zero()) seeds.push_back(prod.coeffs());
    }
  return close_ideal(ctx, seeds);
}

}  // namespace lienil
