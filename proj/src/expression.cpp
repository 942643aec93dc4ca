#include "gldiff/expression.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "gldiff/algebra.hpp"
#include "gldiff/combinatorics.hpp"
#include "gldiff/errors.hpp"

namespace gldiff {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  AlgebraElement element(int rank) {
    AlgebraElement total(rank);
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (!accept('+') && !first) {
        break;
      }
      AlgebraElement t = term(rank);
      total += sign > 0 ? t : -t;
      first = false;
    }
    finish("'+', '-' or end of input");
    return total;
  }

  ModuleVector vector(const ModuleParams& params) {
    ModuleVector total(params);
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (!accept('+') && !first) {
        break;
      }
      Poly coeff(sign);
      if (peek() != 'v') {
        coeff = coeff * coefficient();
        accept('*');
      }
      std::size_t at = skip();
      expect('v', "'v['");
      expect('[', "'['");
      std::int64_t k = integer(true);
      expect(',', "','");
      std::int64_t r = integer(false);
      std::int64_t s = 1;
      if (accept(',')) s = integer(false);
      expect(']', "']'");
      if (r < 1 || r > params.rank || s < 1 || s > params.m)
        throw DimensionError("at position " + std::to_string(at) +
                             ": slot outside rank " +
                             std::to_string(params.rank) + ", m " +
                             std::to_string(params.m));
      total.add({k, static_cast<int>(r), static_cast<int>(s)}, coeff);
      first = false;
    }
    finish("'+', '-' or end of input");
    return total;
  }

  Poly poly_only() {
    Poly p = poly();
    finish("'+', '-' or end of input");
    return p;
  }

 private:
  std::size_t skip() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return pos_;
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip();
    std::string found = pos_ < src_.size()
                            ? "'" + std::string(1, src_[pos_]) + "'"
                            : std::string("end of input");
    throw ParseError(pos_, "expected " + expected + ", found " + found);
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail(what);
  }

  void finish(const std::string& expected) {
    if (peek() != '\0') fail(expected);
  }

  bool at_digit() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  std::string digits() {
    if (!at_digit()) fail("digits");
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::int64_t integer(bool allow_negative) {
    bool neg = allow_negative && accept('-');
    std::size_t at = skip();
    std::string d = digits();
    if (d.size() > 17) throw ParseError(at, "integer out of range");
    std::int64_t v = std::stoll(d);
    return neg ? -v : v;
  }

  Rational rational() {
    std::string num = digits();
    std::string den = "1";
    if (accept('/')) den = digits();
    std::size_t at = pos_;
    try {
      return Rational::parse(num + "/" + den);
    } catch (const DomainError& e) {
      throw ParseError(at, e.what());
    }
  }

  std::int64_t exponent(bool allow_negative) {
    if (!accept('^')) return 1;
    return integer(allow_negative);
  }

  AlgebraElement term(int rank) {
    std::optional<Rational> coeff;
    if (at_digit()) {
      coeff = rational();
      accept('*');
    }
    AlgebraElement value = embed_scalar(0, 0, rank);
    bool any_atom = false;
    bool central = false;
    while (true) {
      std::size_t at = skip();
      char c = peek();
      if (c != 't' && c != 'D' && c != 'F' && c != 'E' && c != 'C') break;
      if (central) throw ParseError(at, "C must stand alone in its term");
      ++pos_;
      AlgebraElement factor(rank);
      switch (c) {
        case 't':
          factor = embed_scalar(exponent(true), 0, rank);
          break;
        case 'D':
          factor = embed_scalar(0, exponent(false), rank);
          break;
        case 'F': {
          if (pos_ >= src_.size() || src_[pos_] != 'D') fail("'FD'");
          ++pos_;
          auto j = static_cast<unsigned>(exponent(false));
          auto coeffs = falling_to_power_coeffs(j);
          for (std::size_t s = 0; s < coeffs.size(); ++s)
            factor += coeffs[s] *
                      embed_scalar(0, static_cast<std::int64_t>(s), rank);
          break;
        }
        case 'E': {
          expect('[', "'['");
          std::int64_t p = integer(false);
          expect(',', "','");
          std::int64_t q = integer(false);
          expect(']', "']'");
          if (p < 1 || p > rank || q < 1 || q > rank)
            throw DimensionError("at position " + std::to_string(at) + ": E[" +
                                 std::to_string(p) + "," + std::to_string(q) +
                                 "] outside gl_" + std::to_string(rank));
          factor = AlgebraElement::monomial(
              rank, {0, 0, static_cast<int>(p), static_cast<int>(q)});
          break;
        }
        case 'C':
          if (any_atom)
            throw ParseError(at, "C must stand alone in its term");
          central = true;
          break;
      }
      if (!central) value = canonical_product(value, factor);
      any_atom = true;
    }
    if (!coeff && !any_atom) fail("a term (rational, t, D, FD, E[p,q] or C)");
    const Rational scale = coeff.value_or(Rational(1));
    if (central) return AlgebraElement::central_unit(rank, scale);
    return scale * value;
  }

  Poly factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(rational());
    if (c == 'a') {
      ++pos_;
      std::size_t at = skip();
      std::int64_t e = exponent(false);
      if (e > 64) throw ParseError(at, "exponent too large");
      return Poly::indeterminate().pow(static_cast<unsigned>(e));
    }
    if (accept('(')) {
      Poly inner = poly();
      expect(')', "')'");
      return inner;
    }
    fail("a rational, 'a' or '('");
  }

  bool at_factor() {
    char c = peek();
    return c == 'a' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  Poly coefficient() {
    Poly value = factor();
    while (true) {
      std::size_t save = pos_;
      bool star = accept('*');
      if (at_factor()) {
        value = value * factor();
      } else {
        pos_ = star ? save : pos_;
        return value;
      }
    }
  }

  Poly poly() {
    Poly total;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (!accept('+') && !first) {
        break;
      }
      Poly t = coefficient();
      total += sign > 0 ? t : -t;
      first = false;
    }
    return total;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string print_word(const Monomial& m, int rank, const char* d_atom) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  if (m.i != 0) {
    out += "t";
    if (m.i != 1) out += "^" + std::to_string(m.i);
  }
  if (m.j != 0) {
    sep();
    out += d_atom;
    if (m.j != 1) out += "^" + std::to_string(m.j);
  }
  if (rank > 1 || out.empty()) {
    sep();
    out += "E[" + std::to_string(m.p) + "," + std::to_string(m.q) + "]";
  }
  return out;
}

void append_signed(std::string& out, const Rational& c,
                   const std::string& body) {
  const bool negative = c.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  Rational mag = negative ? -c : c;
  if (!(mag == Rational(1))) out += mag.str() + " ";
  out += body;
}

template <Basis B>
std::string print_any(const Element<B>& a, const char* d_atom) {
  std::string out;
  for (const auto& [m, c] : a.terms())
    append_signed(out, c, print_word(m, a.rank(), d_atom));
  if (!a.central().is_zero()) append_signed(out, a.central(), "C");
  return out.empty() ? "0" : out;
}

template <Basis B>
nlohmann::json element_json(const Element<B>& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back(
        {{"i", m.i}, {"j", m.j}, {"p", m.p}, {"q", m.q}, {"coeff", c.str()}});
  return {{"n", a.rank()}, {"central", a.central().str()}, {"terms", terms}};
}

}  // namespace

AlgebraElement parse_element(std::string_view text, int rank) {
  return Parser(text).element(rank);
}

ModuleVector parse_vector(std::string_view text, const ModuleParams& params) {
  return Parser(text).vector(params);
}

Poly parse_poly(std::string_view text) { return Parser(text).poly_only(); }

std::string print_element(const AlgebraElement& a) { return print_any(a, "D"); }

std::string print_falling(const FallingElement& f) {
  return print_any(f, "FD");
}

std::string print_vector(const ModuleVector& v) {
  std::string out;
  for (const auto& [slot, c] : v.entries()) {
    std::string body = "v[" + std::to_string(slot.k) + "," +
                       std::to_string(slot.r);
    if (v.params().m > 1) body += "," + std::to_string(slot.s);
    body += "]";
    const auto& cs = c.coefficients();
    std::size_t nonzero = 0;
    std::size_t last = 0;
    for (std::size_t n = 0; n < cs.size(); ++n)
      if (!cs[n].is_zero()) ++nonzero, last = n;
    if (nonzero == 1) {
      // Single monomial c a^n: print the sign outside.
      const Rational& lead = cs[last];
      std::string mono;
      if (last > 0) {
        mono = "a";
        if (last > 1) mono += "^" + std::to_string(last);
      }
      if (mono.empty()) {
        append_signed(out, lead, body);
      } else {
        append_signed(out, lead, mono + " " + body);
      }
    } else {
      append_signed(out, Rational(1), "(" + c.str() + ") " + body);
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const AlgebraElement& a) { return element_json(a); }

nlohmann::json to_json(const FallingElement& f) {
  nlohmann::json j = element_json(f);
  j["basis"] = "falling";
  return j;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

nlohmann::json to_json(const ModuleVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [slot, c] : v.entries())
    entries.push_back(
        {{"k", slot.k}, {"r", slot.r}, {"s", slot.s}, {"coeff", to_json(c)}});
  const ModuleParams& p = v.params();
  return {{"n", p.rank},
          {"family", family_name(p.family)},
          {"m", p.m},
          {"lambda", to_json(p.lambda)},
          {"entries", entries}};
}

}  // namespace gldiff
