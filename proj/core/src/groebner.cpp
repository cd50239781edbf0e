#include "nll/groebner.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "nll/binary_form.hpp"
#include "nll/errors.hpp"
#include "nll/matrix.hpp"

namespace nll {
namespace {

// Monomials in up to four variables packed into one word: five 12-bit
// fields, each below 2^11, so that the word order is the monomial order,
// products are sums, and divisibility is a borrow-free subtraction test.
// The fourth variable is the auxiliary one used for elimination.
enum class Order { DegLex, Lex, Elim };
using Exps = std::array<int, 4>;

constexpr int kMaxExp = 2047;
constexpr std::uint64_t kHigh =
    (1ull << 11) | (1ull << 23) | (1ull << 35) | (1ull << 47) | (1ull << 59);

bool key_divides(std::uint64_t a, std::uint64_t b) {
  return (((b | kHigh) - a) & kHigh) == kHigh;
}

std::uint64_t encode(Order o, const Exps& e) {
  const int deg3 = e[0] + e[1] + e[2];
  if (std::max({e[0], e[1], e[2], e[3], deg3 + e[3]}) > kMaxExp)
    throw Error("Groebner engine: exponent above " + std::to_string(kMaxExp));
  const auto u = [&](int i) { return static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]); };
  switch (o) {
    case Order::DegLex:
      return static_cast<std::uint64_t>(deg3 + e[3]) << 48 | u(0) << 36 | u(1) << 24 | u(2) << 12 | u(3);
    case Order::Lex:
      return u(0) << 36 | u(1) << 24 | u(2) << 12 | u(3);
    case Order::Elim:
      return u(3) << 48 | static_cast<std::uint64_t>(deg3) << 36 | u(0) << 24 | u(1) << 12 | u(2);
  }
  return 0;
}

Exps decode(Order o, std::uint64_t k) {
  const auto f = [&](int shift) { return static_cast<int>((k >> shift) & 0xFFF); };
  switch (o) {
    case Order::DegLex: return {f(36), f(24), f(12), f(0)};
    case Order::Lex: return {f(36), f(24), f(12), f(0)};
    case Order::Elim: return {f(24), f(12), f(0), f(48)};
  }
  return {};
}

Order internal(MonomialOrder o) { return o == MonomialOrder::Lex ? Order::Lex : Order::DegLex; }

struct Term {
  std::uint64_t key;
  Fp c;
};
using IPoly = std::vector<Term>;  // descending keys, nonzero coefficients

struct Pair {
  std::size_t i, j;
  std::uint64_t lcm;
  int deg;
};

class Engine {
 public:
  Engine(PrimeField field, Order order) : F_(field), o_(order) {}

  const PrimeField& field() const { return F_; }
  Order order() const { return o_; }

  std::uint64_t lcm(std::uint64_t a, std::uint64_t b) const {
    const Exps x = decode(o_, a), y = decode(o_, b);
    Exps m;
    for (std::size_t v = 0; v < 4; ++v) m[v] = std::max(x[v], y[v]);
    return encode(o_, m);
  }

  int sugar(std::uint64_t k) const {
    const Exps e = decode(o_, k);
    return e[0] + e[1] + e[2] + (o_ == Order::Elim ? 0 : e[3]);
  }

  IPoly from_poly(const Polynomial& f, int aux = 0) const {
    IPoly out;
    for (const auto& t : f.terms())
      out.push_back({encode(o_, {t.mono.exp[0], t.mono.exp[1], t.mono.exp[2], aux}), t.coeff});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    return out;
  }

  Polynomial to_poly(const IPoly& f, Ring ring) const {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : f) {
      const Exps e = decode(o_, t.key);
      Monomial m;
      for (std::size_t v = 0; v < 3; ++v) m.exp[v] = static_cast<std::uint16_t>(e[v]);
      terms.push_back({m, t.c});
    }
    return Polynomial::from_terms(F_, ring, std::move(terms));
  }

  void make_monic(IPoly& f) const {
    if (f.empty() || f[0].c == Fp{1}) return;
    const Fp inv = F_.inv(f[0].c);
    for (auto& t : f) t.c = F_.mul(t.c, inv);
  }

  // f[fi..] - c * x^shift * g[gi..]
  IPoly merge(const IPoly& f, std::size_t fi, Fp c, std::uint64_t shift, const IPoly& g,
              std::size_t gi) const {
    IPoly out;
    out.reserve(f.size() - fi + g.size() - gi);
    while (fi < f.size() || gi < g.size()) {
      const bool has_g = gi < g.size();
      const std::uint64_t gk = has_g ? g[gi].key + shift : 0;
      if (fi < f.size() && (!has_g || f[fi].key > gk)) {
        out.push_back(f[fi++]);
      } else if (fi >= f.size() || gk > f[fi].key) {
        out.push_back({gk, F_.neg(F_.mul(c, g[gi].c))});
        ++gi;
      } else {
        const Fp v = F_.sub(f[fi].c, F_.mul(c, g[gi].c));
        if (!v.is_zero()) out.push_back({gk, v});
        ++fi;
        ++gi;
      }
    }
    return out;
  }

  IPoly shifted(const IPoly& f, std::size_t from, std::uint64_t shift) const {
    IPoly out;
    out.reserve(f.size() - from);
    for (std::size_t i = from; i < f.size(); ++i) out.push_back({f[i].key + shift, f[i].c});
    return out;
  }

  // Full reduction modulo monic polynomials.
  IPoly reduce(IPoly f, const std::vector<const IPoly*>& g) const {
    IPoly r;
    std::size_t i = 0;
    while (i < f.size()) {
      const IPoly* div = nullptr;
      for (const IPoly* h : g)
        if (key_divides((*h)[0].key, f[i].key)) {
          div = h;
          break;
        }
      if (div == nullptr) {
        r.push_back(f[i++]);
        continue;
      }
      f = merge(f, i + 1, f[i].c, f[i].key - (*div)[0].key, *div, 1);
      i = 0;
    }
    return r;
  }

  IPoly spoly(const IPoly& f, const IPoly& g, std::uint64_t l) const {
    return merge(shifted(f, 1, l - f[0].key), 0, Fp{1}, l - g[0].key, g, 1);
  }

  // Reduced monic basis, ascending by leading key.
  std::vector<IPoly> groebner(std::vector<IPoly> input) const {
    for (auto& f : input) make_monic(f);
    std::erase_if(input, [](const IPoly& f) { return f.empty(); });
    std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
      return std::pair(sugar(a[0].key), a[0].key) < std::pair(sugar(b[0].key), b[0].key);
    });

    std::vector<IPoly> polys;
    std::vector<std::size_t> basis;
    std::vector<Pair> pairs;

    const auto reducers = [&] {
      std::vector<const IPoly*> r;
      for (std::size_t k : basis) r.push_back(&polys[k]);
      return r;
    };
    // Returns true when h is a unit.
    const auto insert = [&](IPoly h) {
      make_monic(h);
      if (h[0].key == 0) {
        polys.assign(1, IPoly{{0, Fp{1}}});
        basis.assign(1, 0);
        pairs.clear();
        return true;
      }
      polys.push_back(std::move(h));
      update(polys, basis, pairs, polys.size() - 1);
      return false;
    };

    for (auto& f : input) {
      IPoly h = reduce(std::move(f), reducers());
      if (!h.empty() && insert(std::move(h))) return finish(polys, basis);
    }
    while (!pairs.empty()) {
      auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        return std::pair(a.deg, a.lcm) < std::pair(b.deg, b.lcm);
      });
      const Pair p = *best;
      *best = pairs.back();
      pairs.pop_back();
      IPoly h = reduce(spoly(polys[p.i], polys[p.j], p.lcm), reducers());
      if (!h.empty() && insert(std::move(h))) break;
    }
    return finish(polys, basis);
  }

 private:
  // Gebauer-Moeller pair update.
  void update(const std::vector<IPoly>& polys, std::vector<std::size_t>& basis,
              std::vector<Pair>& pairs, std::size_t h) const {
    const std::uint64_t lh = polys[h][0].key;
    struct Cand {
      std::size_t g;
      std::uint64_t lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g : basis) {
      const std::uint64_t lg = polys[g][0].key;
      const std::uint64_t l = lcm(lh, lg);
      c.push_back({g, l, l == lh + lg});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (key_divides(c[m].lcm, c[k].lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (key_divides(d[m].lcm, c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::erase_if(pairs, [&](const Pair& p) {
      return key_divides(lh, p.lcm) && lcm(polys[p.i][0].key, lh) != p.lcm &&
             lcm(polys[p.j][0].key, lh) != p.lcm;
    });
    for (const Cand& x : d)
      if (!x.coprime) pairs.push_back({x.g, h, x.lcm, sugar(x.lcm)});
    std::erase_if(basis, [&](std::size_t g) { return key_divides(lh, polys[g][0].key); });
    basis.push_back(h);
  }

  std::vector<IPoly> finish(const std::vector<IPoly>& polys,
                            const std::vector<std::size_t>& basis) const {
    std::vector<IPoly> out;
    for (std::size_t k : basis) {
      std::vector<const IPoly*> others;
      for (std::size_t m : basis)
        if (m != k) others.push_back(&polys[m]);
      IPoly tail(polys[k].begin() + 1, polys[k].end());
      IPoly r{polys[k][0]};
      for (const Term& t : reduce(std::move(tail), others)) r.push_back(t);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const IPoly& a, const IPoly& b) { return a[0].key < b[0].key; });
    return out;
  }

  PrimeField F_;
  Order o_;
};

void check_compatible(std::span<const Polynomial> gens, const PrimeField& field, Ring ring) {
  for (const auto& g : gens)
    if (!(g.field() == field) || g.ring() != ring)
      throw InvalidInput("Groebner input mixes fields or rings");
}

GroebnerBasis from_internal(const Engine& eng, std::vector<Polynomial> gens,
                            const std::vector<IPoly>& basis, Ring ring, MonomialOrder order) {
  GroebnerBasis gb{eng.field(), ring, order, std::move(gens), {}};
  for (const auto& b : basis) gb.basis.push_back(eng.to_poly(b, ring));
  return gb;
}

std::vector<const IPoly*> pointers(const std::vector<IPoly>& v) {
  std::vector<const IPoly*> out;
  for (const auto& x : v) out.push_back(&x);
  return out;
}

void require_same_ring(const GroebnerBasis& x, const GroebnerBasis& y) {
  if (!(x.field == y.field) || x.ring != y.ring)
    throw InvalidInput("ideals live in different rings");
}

GroebnerBasis unit_ideal(const GroebnerBasis& like) {
  const Polynomial one = Polynomial::constant(like.field, like.ring, Fp{1});
  return buchberger(std::span(&one, 1), like.order);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  const Engine eng(f.field(), Order::DegLex);
  IPoly r = eng.from_poly(f);
  IPoly d = eng.from_poly(g);
  const Fp inv = f.field().inv(d[0].c);
  IPoly q;
  while (!r.empty()) {
    if (!key_divides(d[0].key, r[0].key)) throw InconsistentData("inexact polynomial division");
    const Term t{r[0].key - d[0].key, f.field().mul(r[0].c, inv)};
    q.push_back(t);
    r = eng.merge(r, 1, t.c, t.key, d, 1);
  }
  return eng.to_poly(q, f.ring());
}

// Generalized binomial C(n, k) for integer n, k >= 0.
std::int64_t binom(std::int64_t n, int k) {
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

Monomial leading_monomial(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw InvalidInput("leading monomial of zero");
  if (order == MonomialOrder::DegLex) return f.leading_monomial();
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (t.mono.exp > best.exp) best = t.mono;
  return best;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order) {
  if (gens.empty()) throw InvalidInput("buchberger needs a field and ring for empty input");
  return buchberger(gens, gens.front().field(), gens.front().ring(), order);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, PrimeField field, Ring ring,
                         MonomialOrder order) {
  check_compatible(gens, field, ring);
  const Engine eng(field, internal(order));
  std::vector<IPoly> input;
  for (const auto& g : gens) input.push_back(eng.from_poly(g));
  return from_internal(eng, {gens.begin(), gens.end()}, eng.groebner(std::move(input)), ring,
                       order);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  const Engine eng(gb.field, internal(gb.order));
  std::vector<IPoly> basis;
  for (const auto& b : gb.basis) basis.push_back(eng.from_poly(b));
  return eng.to_poly(eng.reduce(eng.from_poly(f), pointers(basis)), gb.ring);
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

bool contains(const GroebnerBasis& gb, const GroebnerBasis& sub) {
  return std::all_of(sub.basis.begin(), sub.basis.end(),
                     [&](const Polynomial& f) { return contains(gb, f); });
}

bool same_ideal(const GroebnerBasis& x, const GroebnerBasis& y) {
  if (x.order == y.order) return x.basis == y.basis;
  return contains(x, y) && contains(y, x);
}

bool is_groebner_basis(std::span<const Polynomial> basis, MonomialOrder order) {
  if (basis.empty()) return true;
  const Engine eng(basis.front().field(), internal(order));
  std::vector<IPoly> g;
  for (const auto& f : basis) {
    if (f.is_zero()) continue;
    IPoly x = eng.from_poly(f);
    eng.make_monic(x);
    g.push_back(std::move(x));
  }
  const auto ptrs = pointers(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const std::uint64_t l = eng.lcm(g[i][0].key, g[j][0].key);
      if (!eng.reduce(eng.spoly(g[i], g[j], l), ptrs).empty()) return false;
    }
  return true;
}

int combinatorial_dimension(const GroebnerBasis& gb) {
  // The unit ideal has no independent set; 0 keeps projective dimension at -1.
  if (gb.is_unit()) return 0;
  int best = 0;
  for (unsigned u = 0; u < 8; ++u) {
    const bool independent = std::none_of(gb.basis.begin(), gb.basis.end(), [&](const Polynomial& f) {
      const Monomial m = leading_monomial(f, gb.order);
      for (unsigned v = 0; v < 3; ++v)
        if (m.exp[v] > 0 && !(u & (1u << v))) return false;
      return true;
    });
    if (independent) best = std::max(best, std::popcount(u));
  }
  return best;
}

IdealMeasure measure(const GroebnerBasis& gb) {
  for (const auto& f : gb.basis)
    if (!f.is_homogeneous()) throw InvalidInput("measure needs a homogeneous ideal");
  IdealMeasure out;
  if (gb.is_unit()) return out;

  std::vector<Monomial> lts;
  std::array<int, 3> top{};
  for (const auto& f : gb.basis) {
    lts.push_back(leading_monomial(f, gb.order));
    for (std::size_t v = 0; v < 3; ++v) top[v] = std::max(top[v], static_cast<int>(lts.back().exp[v]));
  }
  // The numerator of the Hilbert series of S/LT(I) has degree at most the
  // degree of the lcm of all leading monomials.
  const int bound = top[0] + top[1] + top[2];
  std::vector<std::int64_t> hf;
  for (int t = 0; t <= bound; ++t) {
    std::int64_t count = 0;
    for (const auto& m : monomial_basis(t).monomials)
      if (std::none_of(lts.begin(), lts.end(), [&](Monomial l) { return l.divides(m); })) ++count;
    hf.push_back(count);
  }
  std::vector<std::int64_t> k(hf.size(), 0);
  const std::array<std::int64_t, 4> cube{1, -3, 3, -1};
  for (std::size_t i = 0; i < hf.size(); ++i)
    for (std::size_t j = 0; j < 4 && i + j < k.size(); ++j) k[i + j] += cube[j] * hf[i];

  int r = 3;
  const auto at_one = [](const std::vector<std::int64_t>& q) {
    std::int64_t s = 0;
    for (auto c : q) s += c;
    return s;
  };
  while (r > 0 && at_one(k) == 0) {
    // divide by (1 - z)
    std::vector<std::int64_t> q(k.size() > 1 ? k.size() - 1 : 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      acc += k[i];
      q[i] = acc;
    }
    k = std::move(q);
    --r;
  }
  out.dimension = r - 1;
  if (r == 0) return out;
  out.degree = at_one(k);
  for (std::size_t i = 0; i < k.size(); ++i)
    out.hilbert_constant += k[i] * binom(r - 1 - static_cast<std::int64_t>(i), r - 1);
  if (out.dimension == 1) {
    const std::int64_t D = out.degree;
    out.residual_points = out.hilbert_constant - 1 + (D - 1) * (D - 2) / 2;
  }
  return out;
}

GroebnerBasis intersect(const GroebnerBasis& x, const GroebnerBasis& y) {
  require_same_ring(x, y);
  if (x.is_unit()) return y;
  if (y.is_unit()) return x;
  if (x.is_zero()) return x;
  if (y.is_zero()) return y;

  // I cap J = (t I + (1 - t) J) cap S, with t weighted 0 so every
  // generator stays homogeneous in S.
  const Engine eng(x.field, Order::Elim);
  const std::uint64_t t = encode(Order::Elim, {0, 0, 0, 1});
  std::vector<IPoly> input;
  for (const auto& f : x.basis) input.push_back(eng.shifted(eng.from_poly(f), 0, t));
  for (const auto& g : y.basis) {
    const IPoly base = eng.from_poly(g);
    input.push_back(eng.merge(base, 0, Fp{1}, t, base, 0));
  }
  std::vector<Polynomial> kept;
  for (const auto& b : eng.groebner(std::move(input)))
    if (decode(Order::Elim, b[0].key)[3] == 0) kept.push_back(eng.to_poly(b, x.ring));
  return buchberger(kept, x.field, x.ring, x.order);
}

GroebnerBasis colon(const GroebnerBasis& gb, const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw InvalidInput("colon needs a nonzero homogeneous form");
  if (gb.is_unit() || contains(gb, f)) return unit_ideal(gb);
  const GroebnerBasis principal = buchberger(std::span(&f, 1), gb.order);
  std::vector<Polynomial> quotients;
  for (const auto& g : intersect(gb, principal).basis) quotients.push_back(exact_divide(g, f));
  return buchberger(quotients, gb.field, gb.ring, gb.order);
}

GroebnerBasis colon_irrelevant(const GroebnerBasis& gb) {
  GroebnerBasis out = colon(gb, Polynomial::variable(gb.field, gb.ring, 0));
  for (int v = 1; v < 3; ++v) out = intersect(out, colon(gb, Polynomial::variable(gb.field, gb.ring, v)));
  return out;
}

GroebnerBasis saturate(const GroebnerBasis& gb) {
  GroebnerBasis cur = gb;
  while (true) {
    GroebnerBasis next = colon_irrelevant(cur);
    if (next.basis == cur.basis) {
      next.generators = gb.generators;
      return next;
    }
    cur = std::move(next);
  }
}

ZeroDimSolutions solve_zero_dimensional(const GroebnerBasis& gb, std::uint64_t seed) {
  ZeroDimSolutions out;
  if (gb.is_unit()) return out;
  const PrimeField& F = gb.field;
  std::mt19937_64 rng(seed);
  Matrix a(F, 3, 3);
  do {
    a = Matrix::random(F, 3, 3, rng);
  } while (rank(a) < 3);

  // f'(y) = f(A y); points of I' map back by alpha = A y.
  std::vector<Polynomial> moved;
  for (const auto& f : gb.basis) moved.push_back(linear_substitution(f, a));
  const GroebnerBasis lex = buchberger(moved, MonomialOrder::Lex);

  std::vector<BinaryForm> eliminants;
  for (const auto& f : lex.basis) {
    if (leading_monomial(f, MonomialOrder::Lex).exp[0] != 0) continue;
    std::vector<Fp> c(static_cast<std::size_t>(f.degree() + 1));
    for (const auto& t : f.terms()) c[t.mono.exp[2]] = t.coeff;
    eliminants.emplace_back(F, std::move(c));
  }
  if (eliminants.empty()) throw InvalidInput("ideal is not zero-dimensional");

  UPoly chart(F);
  bool at_infinity = true;
  for (const auto& e : eliminants) {
    std::vector<Fp> c(e.coeffs().rbegin(), e.coeffs().rend());
    chart = gcd(chart, UPoly(F, std::move(c)));
    if (!e.coeff(0).is_zero()) at_infinity = false;
  }
  out.distinct_points = distinct_root_count(chart) + (at_infinity ? 1 : 0);

  const BinaryRoots projected = common_roots(eliminants);
  if (projected.whole_line) throw InvalidInput("ideal is not zero-dimensional");
  for (const auto& su : projected.points) {
    // line through the center e1 and (0, s, u)
    Matrix param(F, 3, 2);
    param(0, 0) = Fp{1};
    param(1, 1) = su[0];
    param(2, 1) = su[1];
    std::vector<BinaryForm> restricted;
    for (const auto& f : lex.basis) restricted.push_back(substitute_line(f, param));
    const BinaryRoots lifted = common_roots(restricted);
    if (lifted.whole_line) throw InvalidInput("ideal is not zero-dimensional");
    for (const auto& st : lifted.points) {
      const Vector y{st[0], F.mul(st[1], su[0]), F.mul(st[1], su[1])};
      Vector alpha = a.apply(y);
      const auto lead = std::find_if(alpha.begin(), alpha.end(), [](Fp v) { return !v.is_zero(); });
      const Fp inv = F.inv(*lead);
      for (auto& v : alpha) v = F.mul(v, inv);
      const std::array<Fp, 3> p{alpha[0], alpha[1], alpha[2]};
      for (const auto& f : gb.basis)
        if (!f.evaluate(p).is_zero()) throw InconsistentData("lifted point is not a zero of the ideal");
      out.rational_points.push_back(p);
    }
  }
  std::sort(out.rational_points.begin(), out.rational_points.end());
  out.rational_points.erase(std::unique(out.rational_points.begin(), out.rational_points.end()),
                            out.rational_points.end());
  return out;
}

}  // namespace nll
