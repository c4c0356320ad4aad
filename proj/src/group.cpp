#include "lienil/group.hpp"

#include <algorithm>
#include <string>

#include "lienil/errors.hpp"
#include "lienil/field.hpp"

namespace lienil {

namespace {

std::string rel_name(unsigned j, unsigned i) {
  return "(x" + std::to_string(j + 1) + ", x" + std::to_string(i + 1) + ")";
}

// Word must be normal and use only generators strictly after `after`.
void check_word(PcWord const& w, unsigned p, unsigned n, unsigned after, std::string const& what) {
  int prev = -1;
  for (auto [k, e] : w.letters) {
    if (k >= n) throw InputError(what + ": generator x" + std::to_string(k + 1) + " out of range");
    if (k <= after)
      throw InputError(what + ": word uses x" + std::to_string(k + 1) + " but only generators after x" +
                       std::to_string(after + 1) + " are allowed");
    if (int(k) <= prev) throw InputError(what + ": generators must be strictly increasing within a word");
    if (e == 0 || e >= p) throw InputError(what + ": exponent " + std::to_string(e) + " not in [1, p)");
    prev = int(k);
  }
}

Subgroup make_subgroup(FiniteGroup const& g, std::vector<std::uint8_t> const& mask, std::vector<Element> gens) {
  std::vector<Element> elems;
  for (Element x = 0; x < g.order(); ++x)
    if (mask[x]) elems.push_back(x);
  return Subgroup(g.order(), std::move(elems), std::move(gens));
}

}  // namespace

PcPresentation::PcPresentation(unsigned p, unsigned n_gens)
    : p_(p), n_(n_gens), powers_(n_gens), comms_(std::size_t(n_gens) * n_gens) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  names_.reserve(n_gens);
  for (unsigned i = 0; i < n_gens; ++i) names_.push_back("x" + std::to_string(i + 1));
}

PcWord const& PcPresentation::commutator(unsigned j, unsigned i) const {
  if (j >= n_ || i >= j) throw InputError("commutator relation needs j > i, got " + rel_name(j, i));
  return comms_[std::size_t(j) * n_ + i];
}

void PcPresentation::set_power(unsigned i, PcWord w) {
  if (i >= n_) throw InputError("power relation for x" + std::to_string(i + 1) + ": generator out of range");
  check_word(w, p_, n_, i, "x" + std::to_string(i + 1) + "^p");
  powers_[i] = std::move(w);
}

void PcPresentation::set_commutator(unsigned j, unsigned i, PcWord w) {
  if (j >= n_ || i >= j) throw InputError("commutator relation needs j > i, got " + rel_name(j, i));
  check_word(w, p_, n_, j, rel_name(j, i));
  comms_[std::size_t(j) * n_ + i] = std::move(w);
}

void PcPresentation::set_names(std::vector<std::string> names) {
  if (names.size() != n_) throw InputError("expected " + std::to_string(n_) + " generator names");
  names_ = std::move(names);
}

void PcPresentation::validate() const {
  for (unsigned i = 0; i < n_; ++i) check_word(powers_[i], p_, n_, i, "x" + std::to_string(i + 1) + "^p");
  for (unsigned j = 0; j < n_; ++j)
    for (unsigned i = 0; i < j; ++i) check_word(comms_[std::size_t(j) * n_ + i], p_, n_, j, rel_name(j, i));
}

FiniteGroup::FiniteGroup(unsigned p, std::size_t order, std::vector<Element> table, std::vector<Element> generators,
                         std::vector<std::vector<unsigned>> element_words)
    : p_(p), order_(order), table_(std::move(table)), gens_(std::move(generators)), words_(std::move(element_words)) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (order_ == 0 || table_.size() != order_ * order_) throw InputError("Cayley table has the wrong size");
  log_p(order_);
  for (std::size_t a = 0; a < order_; ++a)
    if (mul(0, Element(a)) != a || mul(Element(a), 0) != a) throw InputError("element 0 is not an identity");
  std::vector<std::uint8_t> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      Element c = mul(Element(a), Element(b));
      if (c >= order_ || seen[c]) throw InputError("Cayley table row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(Element(a), Element(b)) == 0) {
        inv_[a] = Element(b);
        break;
      }
  if (gens_.empty() && order_ > 1) {
    // Greedy generating set: add anything not yet in the closure.
    std::vector<std::uint8_t> in(order_, 0);
    in[0] = 1;
    std::vector<Element> members{0};
    for (Element x = 1; x < order_; ++x) {
      if (in[x]) continue;
      gens_.push_back(x);
      for (std::size_t idx = 0; idx < members.size(); ++idx)
        for (Element s : gens_) {
          Element y = mul(members[idx], s);
          if (!in[y]) {
            in[y] = 1;
            members.push_back(y);
          }
        }
    }
  }
  for (Element x : gens_)
    if (x >= order_) throw InputError("generator index out of range");
}

unsigned FiniteGroup::log_p(std::size_t n) const {
  unsigned k = 0;
  while (n > 1 && n % p_ == 0) {
    n /= p_;
    ++k;
  }
  if (n != 1) throw InputError("order is not a power of " + std::to_string(p_));
  return k;
}

Element FiniteGroup::power(Element g, std::uint64_t e) const {
  Element r = 0;
  Element b = g;
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Element x = 0; x < order_; ++x) e = std::max(e, element_order(x));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Element a : gens_)
    for (Element b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(std::size_t group_order, std::vector<Element> elements, std::vector<Element> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)), mask_(group_order, 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (Element x : elements_) {
    if (x >= group_order) throw InputError("subgroup element out of range");
    mask_[x] = 1;
  }
}

// Collection from the left. `e` is a normal-form exponent vector; `stack`
// holds generator letters still to be multiplied on the right, next letter
// at the back.
static void collect(PcPresentation const& pres, std::vector<unsigned>& e, std::vector<unsigned>& stack) {
  const unsigned n = pres.n_gens();
  const unsigned p = pres.p();
  auto push_word_reversed = [&](PcWord const& w) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      for (unsigned r = 0; r < it->second; ++r) stack.push_back(it->first);
  };
  while (!stack.empty()) {
    unsigned k = stack.back();
    stack.pop_back();
    // x_j x_k = x_k x_j (x_j, x_k): move x_k left past the tail x_{k+1}^{e_{k+1}} ... x_n^{e_n}.
    for (unsigned j = n; j-- > k + 1;) {
      PcWord const& c = pres.commutator(j, k);
      for (unsigned r = 0; r < e[j]; ++r) {
        push_word_reversed(c);
        stack.push_back(j);
      }
      e[j] = 0;
    }
    if (++e[k] == p) {
      e[k] = 0;
      push_word_reversed(pres.power(k));
    }
  }
}

FiniteGroup build_group(PcPresentation const& pres, BuildOptions const& options) {
  pres.validate();
  const unsigned n = pres.n_gens();
  const unsigned p = pres.p();
  std::size_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > options.max_order)
      throw ResourceError("group order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the order cap " +
                          std::to_string(options.max_order));
  }

  // Element index = sum e_i p^(n-1-i), so x_1 is the most significant digit.
  std::vector<std::size_t> place(n);
  for (unsigned i = 0; i < n; ++i) {
    place[i] = 1;
    for (unsigned k = i + 1; k < n; ++k) place[i] *= p;
  }
  std::vector<std::vector<unsigned>> words(order, std::vector<unsigned>(n, 0));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t r = idx;
    for (unsigned i = 0; i < n; ++i) {
      words[idx][i] = unsigned(r / place[i]);
      r %= place[i];
    }
  }
  auto index_of = [&](std::vector<unsigned> const& e) {
    std::size_t idx = 0;
    for (unsigned i = 0; i < n; ++i) idx += e[i] * place[i];
    return Element(idx);
  };

  // right[g * n + k] = g * x_k
  std::vector<Element> right(order * n);
  std::vector<unsigned> e, stack;
  for (std::size_t g = 0; g < order; ++g)
    for (unsigned k = 0; k < n; ++k) {
      e = words[g];
      stack.assign(1, k);
      collect(pres, e, stack);
      right[g * n + k] = index_of(e);
    }

  // h = parent(h) * x_last, where parent drops one from the last nonzero exponent.
  std::vector<Element> parent(order, 0);
  std::vector<unsigned> last(order, 0);
  for (std::size_t h = 1; h < order; ++h) {
    unsigned m = n;
    while (words[h][m - 1] == 0) --m;
    last[h] = m - 1;
    parent[h] = Element(h - place[m - 1]);
  }
  std::vector<Element> table(order * order);
  for (std::size_t g = 0; g < order; ++g) {
    Element* row = table.data() + g * order;
    row[0] = Element(g);
    for (std::size_t h = 1; h < order; ++h) row[h] = right[std::size_t(row[parent[h]]) * n + last[h]];
  }

  // g (m x) = (g m) x for all g, m and generators x. By induction on the
  // normal word of the right factor this gives full associativity.
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t m = 0; m < order; ++m) {
      Element gm = table[g * order + m];
      for (unsigned k = 0; k < n; ++k) {
        Element mx = right[m * n + k];
        if (table[g * order + mx] != right[std::size_t(gm) * n + k])
          throw PresentationInconsistency("presentation is inconsistent: collection is not associative (order < " +
                                          std::to_string(p) + "^" + std::to_string(n) + ")");
      }
    }

  std::vector<Element> gens(n);
  for (unsigned i = 0; i < n; ++i) gens[i] = Element(place[i]);
  try {
    return FiniteGroup(p, order, std::move(table), std::move(gens), std::move(words));
  } catch (InputError const& err) {
    throw PresentationInconsistency(std::string("presentation is inconsistent: ") + err.what());
  }
}

Element group_commutator(FiniteGroup const& g, Element x, Element y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

Element group_commutator(FiniteGroup const& g, std::span<const Element> xs) {
  if (xs.empty()) throw InputError("commutator needs at least one argument");
  Element c = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) c = group_commutator(g, c, xs[i]);
  return c;
}

Subgroup whole_group(FiniteGroup const& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup(g.order(), std::move(all), {g.generators().begin(), g.generators().end()});
}

Subgroup trivial_subgroup(FiniteGroup const& g) { return Subgroup(g.order(), {0}, {}); }

Subgroup subgroup_closure(FiniteGroup const& g, std::span<const Element> seed) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<Element> gens;
  for (Element s : seed) {
    if (s >= g.order()) throw InputError("seed element out of range");
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t idx = 0; idx < members.size(); ++idx)
    for (Element s : gens) {
      Element y = g.mul(members[idx], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return Subgroup(g.order(), std::move(members), std::vector<Element>(seed.begin(), seed.end()));
}

std::vector<Subgroup> lower_central_series(FiniteGroup const& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (!series.back().is_trivial()) {
    std::vector<std::uint8_t> seen(g.order(), 0);
    std::vector<Element> seed;
    for (Element x : series.back().elements())
      for (Element y : g.generators()) {
        Element c = group_commutator(g, x, y);
        if (c != 0 && !seen[c]) {
          seen[c] = 1;
          seed.push_back(c);
        }
      }
    Subgroup next = subgroup_closure(g, seed);
    if (next.order() >= series.back().order())
      throw InvariantError("lower central series stalled; group is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup power_subgroup(FiniteGroup const& g, Subgroup const& h, std::uint64_t q) {
  std::uint64_t r = q;
  while (r > 1 && r % g.p() == 0) r /= g.p();
  if (q == 0 || r != 1) throw InputError(std::to_string(q) + " is not a power of " + std::to_string(g.p()));
  if (q == 1) return h;
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Element> seed;
  for (Element x : h.elements()) {
    Element y = g.power(x, q);
    if (y != 0 && !seen[y]) {
      seen[y] = 1;
      seed.push_back(y);
    }
  }
  return subgroup_closure(g, seed);
}

Subgroup subgroup_product(FiniteGroup const& g, Subgroup const& h, Subgroup const& k) {
  std::vector<std::uint8_t> mask(g.order(), 0);
  std::size_t count = 0;
  for (Element a : h.elements())
    for (Element b : k.elements()) {
      Element c = g.mul(a, b);
      if (!mask[c]) {
        mask[c] = 1;
        ++count;
      }
    }
  std::vector<Element> seed = h.generators();
  seed.insert(seed.end(), k.generators().begin(), k.generators().end());
  Subgroup closure = subgroup_closure(g, seed);
  if (closure.order() != count) throw InvariantError("product set HK is not a subgroup (neither factor normal)");
  return make_subgroup(g, mask, std::move(seed));
}

Subgroup subgroup_intersection(FiniteGroup const& g, Subgroup const& h, Subgroup const& k) {
  std::vector<Element> common;
  for (Element x : h.elements())
    if (k.contains(x)) common.push_back(x);
  return subgroup_closure(g, common);
}

Subgroup center(FiniteGroup const& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return subgroup_closure(g, z);
}

bool is_normal(FiniteGroup const& g, Subgroup const& h) {
  for (Element x : h.elements())
    for (Element s : g.generators())
      if (!h.contains(g.mul(g.mul(g.inv(s), x), s))) return false;
  return true;
}

bool is_abelian(FiniteGroup const& g, Subgroup const& h) {
  auto const& gens = h.generators().empty() ? h.elements() : h.generators();
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_subset(Subgroup const& h, Subgroup const& k) {
  return std::all_of(h.elements().begin(), h.elements().end(), [&](Element x) { return k.contains(x); });
}

AbelianInvariants abelian_invariants(FiniteGroup const& g, Subgroup const& h) {
  if (!is_abelian(g, h)) throw DomainError("abelian invariants requested for a nonabelian subgroup");
  // |{x : x^(p^k) = 1}| = p^(sum_i min(m_i, k)); successive differences count the m_i >= k.
  std::vector<unsigned> at_least;  // at_least[k-1] = #{i : m_i >= k}
  unsigned prev = 0;
  std::uint64_t q = 1;
  for (unsigned k = 1;; ++k) {
    q *= g.p();
    std::size_t killed = 0;
    for (Element x : h.elements())
      if (g.power(x, q) == 0) ++killed;
    unsigned s = g.log_p(killed);
    if (s == prev) break;
    at_least.push_back(s - prev);
    prev = s;
    if (killed == h.order()) break;
  }
  AbelianInvariants inv;
  for (unsigned k = unsigned(at_least.size()); k >= 1; --k) {
    unsigned exactly = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0u);
    for (unsigned r = 0; r < exactly; ++r) inv.exponents.push_back(k);
  }
  return inv;
}

unsigned section_rank(FiniteGroup const& g, Subgroup const& h, Subgroup const& k) {
  if (!is_subset(k, h)) throw InputError("section H/K needs K inside H");
  for (Element a : h.generators())
    for (Element b : h.generators())
      if (!k.contains(group_commutator(g, a, b))) throw DomainError("section H/K is not abelian");
  Subgroup frattini = subgroup_product(g, k, power_subgroup(g, h, g.p()));
  return g.log_p(h.order() / frattini.order());
}

RankProfile rank_profile(FiniteGroup const& g, std::vector<Subgroup> const& lcs) {
  RankProfile out;
  out.nilpotency_class = lcs.size() >= 2 ? unsigned(lcs.size() - 1) : 0u;
  for (std::size_t i = 1; i + 1 < lcs.size(); ++i) out.ranks.push_back(section_rank(g, lcs[i], lcs[i + 1]));
  return out;
}

}  // namespace lienil
