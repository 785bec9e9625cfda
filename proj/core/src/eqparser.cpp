#include "fracreduce/eqparser.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "fracreduce/errors.hpp"
#include "fracreduce/numio.hpp"

namespace fracreduce {

namespace {

namespace mp = boost::multiprecision;

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  struct State {
    std::size_t pos;
    int line, col;
  };
  State save() const { return {pos, line, col}; }
  void restore(const State& st) {
    pos = st.pos;
    line = st.line;
    col = st.col;
  }

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  char peek_at(std::size_t off) const { return pos + off < s.size() ? s[pos + off] : '\0'; }
  void advance() {
    if (eof()) return;
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw SyntaxError(msg, line, col, expected);
  }
  std::string got() const {
    return eof() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("unexpected " + got(), what);
    advance();
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// identifier at the cursor without consuming it; empty when there is none
std::string peek_ident(Cursor& c) {
  c.skip_ws();
  if (!ident_start(c.peek())) return {};
  std::string out;
  for (std::size_t off = 0; ident_char(c.peek_at(off)); ++off) out.push_back(c.peek_at(off));
  return out;
}

void consume_ident(Cursor& c, const std::string& name) {
  c.skip_ws();
  for (char ch : name) {
    (void)ch;
    c.advance();
  }
}

bool starts_number(Cursor& c) {
  c.skip_ws();
  return std::isdigit(static_cast<unsigned char>(c.peek())) ||
         (c.peek() == '.' && std::isdigit(static_cast<unsigned char>(c.peek_at(1))));
}

// unsigned decimal literal, kept exact: digits[.digits][e[+-]digits]
BigRat parse_decimal(Cursor& c) {
  c.skip_ws();
  mp::cpp_int mant = 0;
  bool any = false;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    mant = mant * 10 + (c.peek() - '0');
    any = true;
    c.advance();
  }
  long frac_digits = 0;
  if (c.peek() == '.' && std::isdigit(static_cast<unsigned char>(c.peek_at(1)))) {
    c.advance();
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      mant = mant * 10 + (c.peek() - '0');
      ++frac_digits;
      any = true;
      c.advance();
    }
  }
  if (!any) c.fail("unexpected " + c.got(), "a number");
  long expo = 0;
  if (c.peek() == 'e' || c.peek() == 'E') {
    const auto st = c.save();
    c.advance();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') {
      neg = c.peek() == '-';
      c.advance();
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      long e = 0;
      while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        e = e * 10 + (c.peek() - '0');
        if (e > 100000) c.fail("exponent too large", "a smaller exponent");
        c.advance();
      }
      expo = neg ? -e : e;
    } else {
      c.restore(st);  // the 'e' belongs to something else
    }
  }
  BigRat v(mant);
  const long net = expo - frac_digits;
  if (net > 0)
    v *= BigRat(mp::pow(mp::cpp_int(10), static_cast<unsigned>(net)));
  else if (net < 0)
    v /= BigRat(mp::pow(mp::cpp_int(10), static_cast<unsigned>(-net)));
  return v;
}

// unsigned rational: decimal ['/' decimal]
BigRat parse_urational(Cursor& c) {
  BigRat v = parse_decimal(c);
  const auto st = c.save();
  if (c.accept('/')) {
    if (!starts_number(c)) {
      c.restore(st);
      return v;
    }
    const BigRat d = parse_decimal(c);
    if (d == 0) c.fail("denominator is zero", "a nonzero denominator");
    v /= d;
  }
  return v;
}

BigRat parse_srational(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    c.advance();
  } else if (c.peek() == '+') {
    c.advance();
  }
  const BigRat v = parse_urational(c);
  return neg ? BigRat(-v) : v;
}

Rational to_small_rational(Cursor& c, const BigRat& v) {
  const mp::cpp_int num = mp::numerator(v);
  const mp::cpp_int den = mp::denominator(v);
  const auto lo = std::numeric_limits<std::int64_t>::min();
  const auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    c.fail("number out of range for an order", "a smaller rational");
  return Rational(num.convert_to<long long>(), den.convert_to<long long>());
}

// '(re+imi)' with exact parts; nullopt (cursor restored) when the text is not
// a complex literal, e.g. a parenthesized subexpression
std::optional<RatComplex> try_complex_literal(Cursor& c) {
  const auto st = c.save();
  if (!c.accept('(')) return std::nullopt;
  c.skip_ws();
  bool neg_re = false;
  if (c.peek() == '-') {
    neg_re = true;
    c.advance();
  }
  if (!starts_number(c)) {
    c.restore(st);
    return std::nullopt;
  }
  BigRat re = parse_urational(c);
  if (neg_re) re = -re;
  c.skip_ws();
  if (c.peek() != '+' && c.peek() != '-') {
    c.restore(st);
    return std::nullopt;
  }
  const bool neg_im = c.peek() == '-';
  c.advance();
  if (!starts_number(c)) {
    c.restore(st);
    return std::nullopt;
  }
  BigRat im = parse_urational(c);
  if (neg_im) im = -im;
  c.skip_ws();
  if (c.peek() != 'i' || ident_char(c.peek_at(1))) {
    c.restore(st);
    return std::nullopt;
  }
  c.advance();
  if (!c.accept(')')) {
    c.restore(st);
    return std::nullopt;
  }
  return RatComplex(std::move(re), std::move(im));
}

// coefficient in term position: complex literal, parenthesized rational, or a
// bare unsigned rational (signs belong to the additive chain)
std::optional<RatComplex> try_coefficient(Cursor& c) {
  if (auto z = try_complex_literal(c)) return z;
  const auto st = c.save();
  if (c.accept('(')) {
    c.skip_ws();
    if (c.peek() == '-' || starts_number(c)) {
      const BigRat v = parse_srational(c);
      if (c.accept(')')) return RatComplex(v);
    }
    c.restore(st);
    return std::nullopt;
  }
  if (starts_number(c)) return RatComplex(parse_urational(c));
  return std::nullopt;
}

// --- right-hand side expressions ---

ExpPolyX constant_term(RatComplex v) {
  ExpPolyX e;
  if (!v.is_zero()) e.terms.push_back({RatComplex{}, IntPolyX::constant(std::move(v))});
  return e;
}

int parse_power(Cursor& c) {
  const bool braced = c.accept('{');
  c.skip_ws();
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("unexpected " + c.got(), "a nonnegative integer power");
  long k = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    k = k * 10 + (c.peek() - '0');
    if (k > 64) c.fail("power too large", "a power at most 64");
    c.advance();
  }
  if (braced) c.expect('}', "'}'");
  return static_cast<int>(k);
}

// exponent of exp(...): [-] ( t ['/' n] | literal t ['/' n] )
RatComplex parse_exp_arg(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    c.advance();
  }
  RatComplex lam;
  if (peek_ident(c) == "t") {
    consume_ident(c, "t");
    lam = RatComplex(1);
  } else {
    std::optional<RatComplex> co = try_complex_literal(c);
    if (!co) {
      const auto st = c.save();
      if (c.accept('(')) {
        c.skip_ws();
        if (c.peek() == '-' || starts_number(c)) {
          const BigRat v = parse_srational(c);
          if (c.accept(')')) co = RatComplex(v);
        }
        if (!co) c.restore(st);
      }
    }
    if (!co) {
      if (!starts_number(c)) c.fail("unexpected " + c.got(), "'t' or a coefficient");
      co = RatComplex(parse_urational(c));
    }
    if (peek_ident(c) != "t") c.fail("unexpected " + c.got(), "'t'");
    consume_ident(c, "t");
    lam = *co;
  }
  const auto st = c.save();
  if (c.accept('/')) {
    if (!starts_number(c)) {
      c.restore(st);
    } else {
      const BigRat d = parse_decimal(c);
      if (d == 0) c.fail("denominator is zero", "a nonzero denominator");
      lam = lam / RatComplex(d);
    }
  }
  return neg ? -lam : lam;
}

ExpPolyX parse_additive(Cursor& c);

std::optional<ExpPolyX> try_factor(Cursor& c) {
  c.skip_ws();
  const std::string id = peek_ident(c);
  if (id == "exp") {
    consume_ident(c, "exp");
    c.expect('(', "'('");
    const RatComplex lam = parse_exp_arg(c);
    c.expect(')', "')'");
    ExpPolyX e;
    e.terms.push_back({lam, IntPolyX::constant(RatComplex(1))});
    return e;
  }
  if (id == "t") {
    consume_ident(c, "t");
    int k = 1;
    if (c.accept('^')) k = parse_power(c);
    IntPolyX mono;
    mono.c.assign(static_cast<std::size_t>(k) + 1, RatComplex{});
    mono.c.back() = RatComplex(1);
    ExpPolyX e;
    e.terms.push_back({RatComplex{}, std::move(mono)});
    return e;
  }
  if (!id.empty()) return std::nullopt;
  if (auto z = try_complex_literal(c)) return constant_term(std::move(*z));
  if (c.accept('(')) {
    ExpPolyX inner = parse_additive(c);
    c.expect(')', "')'");
    return inner;
  }
  if (starts_number(c)) return constant_term(RatComplex(parse_urational(c)));
  return std::nullopt;
}

ExpPolyX parse_product(Cursor& c) {
  std::optional<ExpPolyX> acc = try_factor(c);
  if (!acc) c.fail("unexpected " + c.got(), "a term");
  while (auto f = try_factor(c)) acc = mul(*acc, *f);
  return *acc;
}

ExpPolyX parse_additive(Cursor& c) {
  ExpPolyX out;
  bool neg = c.accept('-');
  while (true) {
    ExpPolyX piece = parse_product(c);
    if (neg) piece = scale(piece, RatComplex(-1));
    out = add(out, piece);
    if (c.accept('+'))
      neg = false;
    else if (c.accept('-'))
      neg = true;
    else
      break;
  }
  return out;
}

double parse_double(Cursor& c) {
  c.skip_ws();
  if (c.peek() != '-' && !starts_number(c)) c.fail("unexpected " + c.got(), "a number");
  return to_double(parse_srational(c));
}

void parse_directives(Cursor& c, EquationAst& ast) {
  while (c.accept('@')) {
    const std::string name = peek_ident(c);
    if (name == "base") {
      consume_ident(c, "base");
      if (ast.has_base) c.fail("duplicate @base", "a single @base directive");
      ast.base = parse_double(c);
      ast.has_base = true;
    } else if (name == "interval") {
      consume_ident(c, "interval");
      if (ast.has_interval) c.fail("duplicate @interval", "a single @interval directive");
      c.expect('[', "'['");
      ast.interval_a = parse_double(c);
      c.expect(',', "','");
      ast.interval_b = parse_double(c);
      c.expect(']', "']'");
      ast.has_interval = true;
    } else {
      c.fail("unknown directive '@" + name + "'", "@base or @interval");
    }
  }
  c.skip_ws();
  if (!c.eof()) c.fail("unexpected " + c.got(), "end of input");
}

}  // namespace

EquationAst parse_equation(const std::string& text) {
  Cursor c{text};
  EquationAst ast;

  // left-hand side
  std::vector<GenTerm<RatComplex>> raw;
  bool neg = c.accept('-');
  while (true) {
    RatComplex coeff = try_coefficient(c).value_or(RatComplex(1));
    Rational order{0};
    c.skip_ws();
    bool had_op = false;
    {
      // 'I' followed by '^' is the operator, not an identifier
      const std::string id = peek_ident(c);
      std::size_t off = 1;
      while (std::isspace(static_cast<unsigned char>(c.peek_at(off)))) ++off;
      if (id == "I" && c.peek_at(off) == '^') {
        c.advance();  // I
        c.expect('^', "'^'");
        c.expect('{', "'{'");
        c.skip_ws();
        order = to_small_rational(c, parse_srational(c));
        if (order < Rational(0))
          throw NegativeOrderError("integration order " + to_string(order) + " is negative");
        c.expect('}', "'}'");
        had_op = true;
      }
    }
    const std::string id = peek_ident(c);
    if (id.empty() || id == "I")
      c.fail("unexpected " + c.got(), had_op ? "the unknown function" : "a term");
    consume_ident(c, id);
    if (ast.unknown.empty())
      ast.unknown = id;
    else if (ast.unknown != id)
      throw MultipleUnknownsError("unknowns '" + ast.unknown + "' and '" + id +
                                  "' in one equation");
    if (c.accept('(')) {  // optional explicit argument
      c.expect('t', "'t'");
      c.expect(')', "')'");
    }
    raw.push_back({neg ? -coeff : coeff, order});
    if (c.accept('+'))
      neg = false;
    else if (c.accept('-'))
      neg = true;
    else
      break;
  }
  c.expect('=', "'='");

  // canonical order/merge shared with the symbol algebra
  const GenPolyX canon = make_genpoly(std::move(raw));
  for (const auto& t : canon.terms) ast.lhs.push_back({t.coeff, t.exponent});

  // right-hand side: an expression, or a bare symbol to be bound later
  {
    const std::string id = peek_ident(c);
    if (!id.empty() && id != "exp" && id != "t") {
      consume_ident(c, id);
      ast.rhs_symbol = id;
    } else {
      ast.rhs = parse_additive(c);
    }
  }
  parse_directives(c, ast);
  return ast;
}

GenPolyX parse_genpoly(const std::string& text) {
  Cursor c{text};
  std::vector<GenTerm<RatComplex>> raw;
  bool neg = c.accept('-');
  while (true) {
    std::optional<RatComplex> coeff = try_coefficient(c);
    Rational expo{0};
    c.skip_ws();
    if (peek_ident(c) == "X") {
      consume_ident(c, "X");
      expo = Rational(1);
      if (c.accept('^')) {
        if (c.accept('{')) {
          c.skip_ws();
          expo = to_small_rational(c, parse_srational(c));
          c.expect('}', "'}'");
        } else {
          c.skip_ws();
          if (!starts_number(c)) c.fail("unexpected " + c.got(), "an exponent");
          expo = to_small_rational(c, BigRat(parse_decimal(c)));
        }
      }
    } else if (!coeff) {
      c.fail("unexpected " + c.got(), "a term");
    }
    RatComplex v = coeff.value_or(RatComplex(1));
    raw.push_back({neg ? -v : v, expo});
    if (c.accept('+'))
      neg = false;
    else if (c.accept('-'))
      neg = true;
    else
      break;
  }
  c.skip_ws();
  if (!c.eof()) c.fail("unexpected " + c.got(), "end of input");
  return make_genpoly(std::move(raw));
}

// --- printers ---

namespace {

std::string rat_str(const BigRat& r) {
  std::string s = mp::numerator(r).str();
  if (mp::denominator(r) != 1) s += "/" + mp::denominator(r).str();
  return s;
}

bool is_fraction(const BigRat& r) { return mp::denominator(r) != 1; }

struct SignedBody {
  bool neg = false;
  std::string body;
};

// `paren_fraction`: wrap p/q in parens when another factor follows, so that
// "(1/2) t" cannot be misread as 1/(2t)
SignedBody fmt_scalar(const RatComplex& v, bool paren_fraction = true) {
  if (v.is_real()) {
    BigRat a = v.re;
    const bool neg = a < 0;
    if (neg) a = -a;
    std::string s = rat_str(a);
    if (paren_fraction && is_fraction(a)) s = "(" + s + ")";
    return {neg, std::move(s)};
  }
  BigRat im = v.im;
  const bool neg_im = im < 0;
  if (neg_im) im = -im;
  return {false, "(" + rat_str(v.re) + (neg_im ? "-" : "+") + rat_str(im) + "i)"};
}

SignedBody fmt_scalar(const Complex& v, bool = true) {
  if (v.imag() == 0.0) {
    const bool neg = v.real() < 0.0;
    return {neg, format_double(neg ? -v.real() : v.real())};
  }
  const bool neg_im = v.imag() < 0.0;
  return {false, "(" + format_double(v.real()) + (neg_im ? "-" : "+") +
                     format_double(neg_im ? -v.imag() : v.imag()) + "i)"};
}

bool unit(const RatComplex& v) { return v == RatComplex(1); }
bool unit(const Complex& v) { return v == Complex{1.0, 0.0}; }

struct PieceList {
  std::string out;
  void push(bool neg, const std::string& body) {
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  std::string str() const { return out.empty() ? "0" : out; }
};

std::string t_pow(int k) { return k == 1 ? "t" : "t^" + std::to_string(k); }

// one monomial c t^k as an addable piece
template <class S>
SignedBody fmt_monomial(const S& coeff, int k, bool factor_follows = false) {
  SignedBody f = fmt_scalar(coeff, k > 0 || factor_follows);
  if (k == 0) return f;
  if (unit(coeff) || unit(S{} - coeff)) return {f.neg, t_pow(k)};
  return {f.neg, f.body + " " + t_pow(k)};
}

std::string exp_arg_str(const RatComplex& lam) {
  if (lam.is_real()) {
    const BigRat p = mp::numerator(lam.re);
    const BigRat q = mp::denominator(lam.re);
    if (p == 1 && q == 1) return "t";
    if (p == -1 && q == 1) return "-t";
    if (q == 1) return rat_str(lam.re) + "t";
    if (p == 1) return "t/" + rat_str(BigRat(q));
    if (p == -1) return "-t/" + rat_str(BigRat(q));
    return "(" + rat_str(lam.re) + ") t";
  }
  return fmt_scalar(lam).body + " t";
}

std::string exp_arg_str(const Complex& lam) {
  if (lam.imag() == 0.0) {
    if (lam.real() == 1.0) return "t";
    if (lam.real() == -1.0) return "-t";
    return format_double(lam.real()) + "t";
  }
  return fmt_scalar(lam).body + " t";
}

template <class S>
std::string print_exppoly(const ExpPolyT<S>& e) {
  PieceList pieces;
  for (const auto& term : e.terms) {
    if (term.lambda == S{}) {
      for (int k = 0; k <= term.poly.degree(); ++k) {
        const S& cc = term.poly.c[static_cast<std::size_t>(k)];
        if (cc == S{}) continue;
        const SignedBody f = fmt_monomial(cc, k);
        pieces.push(f.neg, f.body);
      }
      continue;
    }
    const std::string arg = "exp(" + exp_arg_str(term.lambda) + ")";
    int nonzero = 0, last_k = 0;
    for (int k = 0; k <= term.poly.degree(); ++k)
      if (!(term.poly.c[static_cast<std::size_t>(k)] == S{})) {
        ++nonzero;
        last_k = k;
      }
    if (nonzero == 1) {
      const S& cc = term.poly.c[static_cast<std::size_t>(last_k)];
      SignedBody f = fmt_monomial(cc, last_k, true);
      const bool coeff_visible = !(unit(cc) || unit(S{} - cc)) || last_k > 0;
      pieces.push(f.neg, coeff_visible ? f.body + " " + arg : arg);
    } else {
      PieceList inner;
      for (int k = 0; k <= term.poly.degree(); ++k) {
        const S& cc = term.poly.c[static_cast<std::size_t>(k)];
        if (cc == S{}) continue;
        const SignedBody f = fmt_monomial(cc, k);
        inner.push(f.neg, f.body);
      }
      pieces.push(false, "(" + inner.str() + ") " + arg);
    }
  }
  return pieces.str();
}

std::string x_pow(const Rational& e) {
  if (e == Rational(1)) return "X";
  if (e.is_integer()) return "X^" + std::to_string(e.num);
  return "X^{" + to_string(e) + "}";
}

template <class S>
std::string print_genpoly(const GenPolyT<S>& p) {
  PieceList pieces;
  for (const auto& t : p.terms) {
    SignedBody f = fmt_scalar(t.coeff, !t.exponent.is_zero());
    if (t.exponent.is_zero()) {
      pieces.push(f.neg, f.body);
    } else if (unit(t.coeff) || unit(S{} - t.coeff)) {
      pieces.push(f.neg, x_pow(t.exponent));
    } else {
      pieces.push(f.neg, f.body + " " + x_pow(t.exponent));
    }
  }
  return pieces.str();
}

}  // namespace

std::string print(const GenPoly& p) { return print_genpoly(p); }
std::string print(const GenPolyX& p) { return print_genpoly(p); }
std::string print(const ExpPoly& e) { return print_exppoly(e); }
std::string print(const ExpPolyX& e) { return print_exppoly(e); }

std::string print(const FracOperator& T) {
  PieceList pieces;
  for (const auto& t : T.terms) {
    SignedBody f = fmt_scalar(t.coeff, !t.order.is_zero());
    if (t.order.is_zero()) {
      pieces.push(f.neg, f.body);
    } else {
      const std::string op = "I^{" + to_string(t.order) + "}";
      if (unit(t.coeff) || unit(Complex{} - t.coeff))
        pieces.push(f.neg, op);
      else
        pieces.push(f.neg, f.body + " " + op);
    }
  }
  return pieces.str();
}

std::string print(const EquationAst& ast) {
  PieceList pieces;
  const std::string x = ast.unknown.empty() ? "x" : ast.unknown;
  for (const auto& t : ast.lhs) {
    SignedBody f = fmt_scalar(t.coeff);
    std::string body;
    const bool hide = unit(t.coeff) || unit(RatComplex{} - t.coeff);
    if (t.order.is_zero()) {
      body = hide ? x : f.body + " " + x;
    } else {
      const std::string op = "I^{" + to_string(t.order) + "} " + x;
      body = hide ? op : f.body + " " + op;
    }
    pieces.push(f.neg, body);
  }
  std::string out = pieces.str() + " = ";
  if (ast.rhs_symbol)
    out += *ast.rhs_symbol;
  else if (ast.rhs)
    out += print(*ast.rhs);
  else
    out += "0";
  if (ast.has_base) out += " @base " + format_double(ast.base);
  if (ast.has_interval)
    out += " @interval [" + format_double(ast.interval_a) + ", " + format_double(ast.interval_b) + "]";
  return out;
}

Equation to_equation(const EquationAst& ast, std::optional<GridFunction> rhs_csv) {
  Equation eq;
  double a = 0.0, b = 1.0;
  if (ast.has_base && ast.has_interval) {
    if (std::abs(ast.base - ast.interval_a) > 1e-12 * std::max(1.0, std::abs(ast.base)))
      throw BaseMismatchError("declared base and interval start disagree");
    a = ast.interval_a;
    b = ast.interval_b;
  } else if (ast.has_base) {
    a = ast.base;
    b = a + 1.0;
  } else if (ast.has_interval) {
    a = ast.interval_a;
    b = ast.interval_b;
  }
  if (!(b > a)) throw DomainError("interval is empty");
  eq.a = a;
  eq.b = b;

  std::vector<GenTerm<RatComplex>> raw;
  for (const auto& t : ast.lhs) raw.push_back({t.coeff, t.order});
  eq.symbol_exact = make_genpoly(std::move(raw));
  std::vector<FracTerm> ft;
  for (const auto& t : eq.symbol_exact->terms) ft.push_back({t.coeff.to_complex(), t.exponent});
  eq.T = make_operator(a, std::move(ft));

  if (ast.rhs) {
    eq.rhs = *ast.rhs;
  } else if (ast.rhs_symbol) {
    if (!rhs_csv)
      throw UnboundSymbolError("right-hand side '" + *ast.rhs_symbol + "' has no data bound");
    validate(*rhs_csv);
    if (std::abs(rhs_csv->a - a) > 1e-12 * std::max(1.0, std::abs(a)) ||
        std::abs(rhs_csv->b - b) > 1e-12 * std::max(1.0, std::abs(b)))
      throw BaseMismatchError("bound grid does not cover the declared interval");
    eq.rhs = std::move(*rhs_csv);
  } else {
    eq.rhs = ExpPolyX{};
  }
  return eq;
}

}  // namespace fracreduce
