#include "nll/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "nll/errors.hpp"

namespace nll {

GradedPieceBasis monomial_basis(int t) {
  GradedPieceBasis b;
  b.degree = t;
  if (t < 0) return b;
  b.monomials.reserve(graded_dim(t));
  for (int e1 = t; e1 >= 0; --e1)
    for (int e2 = t - e1; e2 >= 0; --e2) {
      Monomial m;
      m.exp = {static_cast<std::uint16_t>(e1), static_cast<std::uint16_t>(e2),
               static_cast<std::uint16_t>(t - e1 - e2)};
      b.monomials.push_back(m);
    }
  return b;
}

Polynomial Polynomial::constant(PrimeField field, Ring ring, Fp c) {
  return term(field, ring, Monomial{}, c);
}

Polynomial Polynomial::term(PrimeField field, Ring ring, Monomial m, Fp c) {
  Polynomial p(field, ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(PrimeField field, Ring ring, int v) {
  return term(field, ring, Monomial::var(v), Fp{1});
}

Polynomial Polynomial::linear(PrimeField field, Ring ring, const std::array<Fp, 3>& c) {
  std::vector<Term> t;
  for (int v = 0; v < 3; ++v) t.push_back({Monomial::var(v), c[static_cast<std::size_t>(v)]});
  return from_terms(field, ring, std::move(t));
}

Polynomial Polynomial::from_terms(PrimeField field, Ring ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p(field, ring);
  for (const auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    else
      p.terms_.push_back(t);
    if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Fp Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial x) { return t.mono > x; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : Fp{0};
}

Fp Polynomial::evaluate(const std::array<Fp, 3>& point) const {
  Fp acc{0};
  for (const auto& t : terms_) {
    Fp v = t.coeff;
    for (std::size_t i = 0; i < 3; ++i) v = field_.mul(v, field_.pow(point[i], t.mono.exp[i]));
    acc = field_.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::scaled(Fp c) const {
  Polynomial p(field_, ring_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw InvalidInput("polynomials over different fields");
  if (a.ring() != b.ring()) throw InvalidInput("polynomials in different rings");
}

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  check_compatible(a, b);
  const PrimeField& F = a.field();
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const auto ea = a.terms().end(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->mono > ib->mono)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->mono > ia->mono) {
      out.push_back({ib->mono, subtract ? F.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Fp c = subtract ? F.sub(ia->coeff, ib->coeff) : F.add(ia->coeff, ib->coeff);
      if (!c.is_zero()) out.push_back({ia->mono, c});
      ++ia;
      ++ib;
    }
  }
  return Polynomial::from_terms(F, a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  const PrimeField& F = a.field_;
  std::map<Monomial, Fp, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, Fp{0});
      it->second = F.mul_add(it->second, s.coeff, t.coeff);
    }
  Polynomial p(F, a.ring_);
  for (const auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Matrix multiplication_matrix(const Polynomial& f, int t) {
  if (!f.is_homogeneous()) throw InvalidInput("multiplication_matrix needs a homogeneous form");
  if (f.is_zero()) throw InvalidInput("zero form has no degree; pass it explicitly");
  return multiplication_matrix(f, f.degree(), t);
}

Matrix multiplication_matrix(const Polynomial& f, int degree_of_f, int t) {
  if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != degree_of_f))
    throw InvalidInput("multiplication_matrix: form is not homogeneous of the stated degree");
  const auto source = monomial_basis(t);
  Matrix m(f.field(), graded_dim(t + degree_of_f), source.size());
  if (t + degree_of_f < 0) return m;
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& term : f.terms())
      m(deglex_index(term.mono * source.monomials[j]), j) = term.coeff;
  return m;
}

Polynomial linear_substitution(const Polynomial& f, const Matrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw InvalidInput("linear_substitution needs a 3x3 matrix");
  const PrimeField& F = f.field();
  std::array<Polynomial, 3> images{Polynomial(F, f.ring()), Polynomial(F, f.ring()),
                                   Polynomial(F, f.ring())};
  for (int i = 0; i < 3; ++i)
    images[static_cast<std::size_t>(i)] =
        Polynomial::linear(F, f.ring(), {a(i, 0), a(i, 1), a(i, 2)});
  Polynomial result(F, f.ring());
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(F, f.ring(), t.coeff);
    for (std::size_t i = 0; i < 3; ++i)
      for (int e = 0; e < t.mono.exp[i]; ++e) p = p * images[i];
    result = result + p;
  }
  return result;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const char* var = f.ring() == Ring::Primal ? "x" : "l";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = f.field().to_signed(t.coeff);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.degree() == 0) {
      os << c;
      wrote = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << var << (i + 1);
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, PrimeField field, Ring ring)
      : s_(text), field_(field), var_(ring == Ring::Primal ? 'x' : 'l') {}

  std::vector<Polynomial::Term> parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      terms.push_back(parse_term(negative));
      skip_ws();
      if (pos_ == s_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  Polynomial::Term parse_term(bool negative) {
    Fp coeff{1};
    Monomial mono;
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = field_.mul(coeff, field_.from_int(parse_int()));
      } else if (peek() == var_) {
        ++pos_;
        const auto v = parse_int();
        if (v < 1 || v > 3) fail("variable index out of range");
        std::int64_t e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_int();
        }
        mono.exp[static_cast<std::size_t>(v - 1)] += static_cast<std::uint16_t>(e);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {mono, negative ? field_.neg(coeff) : coeff};
  }

  std::int64_t parse_int() {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                       std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  PrimeField field_;
  char var_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, PrimeField field, Ring ring) {
  return Polynomial::from_terms(field, ring, PolyParser(text, field, ring).parse());
}

}  // namespace nll
