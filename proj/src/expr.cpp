#include "thetaq/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "thetaq/error.hpp"

namespace thetaq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same(const ExprPtr& x, const ExprPtr& y) { return x == y || (x && y && *x == *y); }

bool same_list(const std::vector<ExprPtr>& x, const std::vector<ExprPtr>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!same(x[i], y[i])) return false;
  return true;
}

ExprPtr make(Expr::Node n) { return std::make_shared<const Expr>(Expr{std::move(n)}); }

}  // namespace

bool operator==(const Expr& x, const Expr& y) {
  if (x.node.index() != y.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const node::Sum& n) { return same_list(n.terms, std::get<node::Sum>(y.node).terms); },
          [&](const node::Product& n) {
            return same_list(n.factors, std::get<node::Product>(y.node).factors);
          },
          [&](const node::Power& n) {
            const auto& o = std::get<node::Power>(y.node);
            return n.exponent == o.exponent && same(n.base, o.base);
          },
          [&](const node::ThetaCall& n) {
            const auto& o = std::get<node::ThetaCall>(y.node);
            return same(n.first, o.first) && same(n.second, o.second);
          },
          [&](const node::Var& n) { return n.name == std::get<node::Var>(y.node).name; },
          [&](const node::RootOfUnity& n) {
            const auto& o = std::get<node::RootOfUnity>(y.node);
            return n.order == o.order && n.exponent == o.exponent;
          },
          [&](const node::RationalConst& n) { return n.value == std::get<node::RationalConst>(y.node).value; },
          [&](const node::Negate& n) { return same(n.child, std::get<node::Negate>(y.node).child); },
          [&](const node::RealPart& n) { return same(n.child, std::get<node::RealPart>(y.node).child); },
          [&](const node::ImagPart& n) { return same(n.child, std::get<node::ImagPart>(y.node).child); },
          [&](const node::SpecializeQ& n) {
            return same(n.child, std::get<node::SpecializeQ>(y.node).child);
          },
      },
      x.node);
}

namespace build {

ExprPtr sum(std::vector<ExprPtr> terms) { return make(node::Sum{std::move(terms)}); }
ExprPtr product(std::vector<ExprPtr> factors) { return make(node::Product{std::move(factors)}); }
ExprPtr power(ExprPtr base, std::int64_t exponent) { return make(node::Power{std::move(base), exponent}); }
ExprPtr theta(ExprPtr first, ExprPtr second) {
  return make(node::ThetaCall{std::move(first), std::move(second)});
}
ExprPtr var(Variable v) { return make(node::Var{v}); }
ExprPtr root(int order, std::int64_t exponent) { return make(node::RootOfUnity{order, exponent}); }
ExprPtr rational(Rational value) {
  value.canonicalize();
  if (value < 0) return negate(make(node::RationalConst{-value}));
  return make(node::RationalConst{std::move(value)});
}
ExprPtr negate(ExprPtr child) { return make(node::Negate{std::move(child)}); }
ExprPtr real_part(ExprPtr child) { return make(node::RealPart{std::move(child)}); }
ExprPtr imag_part(ExprPtr child) { return make(node::ImagPart{std::move(child)}); }
ExprPtr specialize_q(ExprPtr child) { return make(node::SpecializeQ{std::move(child)}); }

}  // namespace build

// ---------------------------------------------------------------------------
// Tokenizer

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::ident: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::slash: return "/";
    case TokenKind::plus: return "+";
    case TokenKind::minus: return "-";
    case TokenKind::star: return "*";
    case TokenKind::caret: return "^";
    case TokenKind::lparen: return "(";
    case TokenKind::rparen: return ")";
    case TokenKind::comma: return ",";
    case TokenKind::equals: return "=";
    case TokenKind::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::integer, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({TokenKind::ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
      case '/': kind = TokenKind::slash; break;
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case ',': kind = TokenKind::comma; break;
      case '=': kind = TokenKind::equals; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, start, {},
                         "unexpected character '" + std::string(1, static_cast<char>(ch)) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(ch)), start});
    ++i;
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxRootOrder = 4096;

const std::vector<std::string>& atom_starts() {
  static const std::vector<std::string> v{"integer", "a", "b", "q", "i", "omega", "zeta",
                                          "f", "Re", "Im", "specq", "("};
  return v;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const bool minus = advance().kind == TokenKind::minus;
      ExprPtr t = term();
      terms.push_back(minus ? build::negate(std::move(t)) : std::move(t));
    }
    if (terms.size() == 1) return terms.front();
    return build::sum(std::move(terms));
  }

  void expect(TokenKind kind, std::vector<std::string> also = {}) {
    if (peek().kind == kind) {
      advance();
      return;
    }
    also.insert(also.begin(), std::string(to_string(kind)));
    fail(std::move(also), "expected " + std::string(to_string(kind)));
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message,
                         ErrorKind kind = ErrorKind::SyntaxError) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(kind, t.offset, std::move(expected), message + ", found " + found);
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors{factor()};
    while (peek().kind == TokenKind::star) {
      advance();
      factors.push_back(factor());
    }
    if (factors.size() == 1) return factors.front();
    return build::product(std::move(factors));
  }

  ExprPtr factor() {
    bool negative = false;
    if (peek().kind == TokenKind::minus) {
      advance();
      negative = true;
    }
    ExprPtr base = atom();
    if (peek().kind == TokenKind::caret) {
      advance();
      base = build::power(std::move(base), exponent());
      if (peek().kind == TokenKind::caret) fail({"*", "+", "-"}, "'^' is not associative; parenthesize");
    }
    return negative ? build::negate(std::move(base)) : base;
  }

  std::int64_t exponent() {
    bool negative = false;
    if (peek().kind == TokenKind::minus) {
      advance();
      negative = true;
    }
    if (peek().kind != TokenKind::integer)
      fail({"integer", "-"}, "exponent must be an integer", ErrorKind::ExponentNotInteger);
    const Token& t = peek();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail({"integer"}, "exponent out of range");
    advance();
    if (peek().kind == TokenKind::slash)
      fail({"*", "+", "-"}, "exponent must be an integer", ErrorKind::ExponentNotInteger);
    return negative ? -value : value;
  }

  std::int64_t small_integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && peek().kind == TokenKind::minus) {
      advance();
      negative = true;
    }
    if (peek().kind != TokenKind::integer) fail({"integer"}, "expected integer");
    const Token& t = peek();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail({"integer"}, "integer out of range");
    advance();
    return negative ? -value : value;
  }

  ExprPtr unary_call(ExprPtr (*wrap)(ExprPtr)) {
    expect(TokenKind::lparen);
    ExprPtr inner = expr();
    expect(TokenKind::rparen, {"+", "-", "*"});
    return wrap(std::move(inner));
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer: {
        advance();
        Integer num(t.text);
        if (peek().kind != TokenKind::slash) return build::rational(Rational(num));
        advance();
        if (peek().kind != TokenKind::integer) fail({"integer"}, "expected denominator");
        Integer den(peek().text);
        if (den == 0) fail({"integer"}, "zero denominator");
        advance();
        return build::rational(Rational(num, den));
      }
      case TokenKind::lparen: {
        advance();
        ExprPtr inner = expr();
        expect(TokenKind::rparen, {"+", "-", "*"});
        return inner;
      }
      case TokenKind::ident: break;
      default: fail(atom_starts(), "expected an operand");
    }
    const std::string name = t.text;
    if (name == "a" || name == "b" || name == "q") {
      advance();
      return build::var(name == "a" ? Variable::a : name == "b" ? Variable::b : Variable::q);
    }
    if (name == "i") {
      advance();
      return build::root(4, 1);
    }
    if (name == "omega") {
      advance();
      return build::root(3, 1);
    }
    if (name == "zeta") {
      advance();
      expect(TokenKind::lparen);
      const std::size_t order_offset = peek().offset;
      const std::int64_t order = small_integer(false);
      if (order < 1 || order > kMaxRootOrder)
        throw ParseError(ErrorKind::SyntaxError, order_offset, {"integer"},
                         "root order must be in [1, " + std::to_string(kMaxRootOrder) + "]");
      expect(TokenKind::comma);
      const std::int64_t e = small_integer(true);
      expect(TokenKind::rparen);
      return build::root(static_cast<int>(order), e);
    }
    if (name == "f") {
      advance();
      expect(TokenKind::lparen);
      ExprPtr first = expr();
      expect(TokenKind::comma, {"+", "-", "*"});
      ExprPtr second = expr();
      expect(TokenKind::rparen, {"+", "-", "*"});
      return build::theta(std::move(first), std::move(second));
    }
    if (name == "Re") {
      advance();
      return unary_call(&build::real_part);
    }
    if (name == "Im") {
      advance();
      return unary_call(&build::imag_part);
    }
    if (name == "specq") {
      advance();
      return unary_call(&build::specialize_q);
    }
    fail(atom_starts(), "unknown identifier '" + name + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p(tokenize(text));
  ExprPtr e = p.expr();
  p.expect(TokenKind::end, {"+", "-", "*"});
  return e;
}

std::pair<ExprPtr, ExprPtr> parse_identity(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  std::size_t equals = 0;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::equals) continue;
    if (++equals == 2) throw ParseError(ErrorKind::MultipleEquals, t.offset, {}, "more than one '='");
  }
  if (equals == 0) throw ParseError(ErrorKind::MissingEquals, text.size(), {"="}, "identity needs '='");
  Parser p(std::move(tokens));
  ExprPtr lhs = p.expr();
  p.expect(TokenKind::equals, {"+", "-", "*"});
  ExprPtr rhs = p.expr();
  p.expect(TokenKind::end, {"+", "-", "*"});
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string p_expr(const Expr& e);
std::string p_term(const Expr& e);
std::string p_factor(const Expr& e);
std::string p_powered(const Expr& e);
std::string p_atom(const Expr& e);

std::string p_expr(const Expr& e) {
  const auto* s = std::get_if<node::Sum>(&e.node);
  if (!s) return p_term(e);
  std::string out;
  for (std::size_t i = 0; i < s->terms.size(); ++i) {
    const Expr& t = *s->terms[i];
    if (i == 0) {
      out += p_term(t);
    } else if (const auto* n = std::get_if<node::Negate>(&t.node)) {
      out += " - " + p_term(*n->child);
    } else {
      out += " + " + p_term(t);
    }
  }
  return out;
}

std::string p_term(const Expr& e) {
  if (std::holds_alternative<node::Sum>(e.node)) return "(" + p_expr(e) + ")";
  const auto* p = std::get_if<node::Product>(&e.node);
  if (!p) return p_factor(e);
  std::string out;
  for (std::size_t i = 0; i < p->factors.size(); ++i) {
    if (i) out += "*";
    out += p_factor(*p->factors[i]);
  }
  return out;
}

std::string p_factor(const Expr& e) {
  if (const auto* n = std::get_if<node::Negate>(&e.node)) return "-" + p_powered(*n->child);
  return p_powered(e);
}

std::string p_powered(const Expr& e) {
  const auto* p = std::get_if<node::Power>(&e.node);
  if (!p) return p_atom(e);
  std::string base = p_atom(*p->base);
  if (const auto* r = std::get_if<node::RationalConst>(&p->base->node); r && r->value.get_den() != 1)
    base = "(" + base + ")";
  return base + "^" + std::to_string(p->exponent);
}

std::string p_atom(const Expr& e) {
  return std::visit(
      overloaded{
          [&](const node::Sum&) { return "(" + p_expr(e) + ")"; },
          [&](const node::Product&) { return "(" + p_expr(e) + ")"; },
          [&](const node::Power&) { return "(" + p_expr(e) + ")"; },
          [&](const node::Negate&) { return "(" + p_expr(e) + ")"; },
          [&](const node::ThetaCall& n) {
            return "f(" + p_expr(*n.first) + ", " + p_expr(*n.second) + ")";
          },
          [&](const node::Var& n) {
            return std::string(n.name == Variable::a ? "a" : n.name == Variable::b ? "b" : "q");
          },
          [&](const node::RootOfUnity& n) {
            if (n.order == 4 && n.exponent == 1) return std::string("i");
            if (n.order == 3 && n.exponent == 1) return std::string("omega");
            return "zeta(" + std::to_string(n.order) + "," + std::to_string(n.exponent) + ")";
          },
          [&](const node::RationalConst& n) {
            // negative constants only arise from hand-built trees
            if (n.value < 0) return "(" + n.value.get_str() + ")";
            return n.value.get_str();
          },
          [&](const node::RealPart& n) { return "Re(" + p_expr(*n.child) + ")"; },
          [&](const node::ImagPart& n) { return "Im(" + p_expr(*n.child) + ")"; },
          [&](const node::SpecializeQ& n) { return "specq(" + p_expr(*n.child) + ")"; },
      },
      e.node);
}

}  // namespace

std::string print_expr(const Expr& e) { return p_expr(e); }

}  // namespace thetaq
