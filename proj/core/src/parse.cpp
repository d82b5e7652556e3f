#include "crlc/parse.hpp"

#include <cctype>
#include <sstream>

namespace crlc {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::string number;

  explicit Lexer(std::string_view t) : text(t) { next(); }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      number = std::string(text.substr(start, pos - start));
      tok = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      ident = std::string(text.substr(start, pos - start));
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '/': tok = Tok::Slash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case ',': tok = Tok::Comma; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", pos - 1);
    }
  }
};

// AST
struct Node;
using NodePtr = std::shared_ptr<Node>;
struct Node {
  enum class Kind { Number, Imag, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt } kind;
  mpz_class value;  // Number
  std::string var;  // Var
  NodePtr a, b;
  long exponent = 0;  // Pow
};

NodePtr make(Node::Kind k) { return std::make_shared<Node>(Node{k, 0, {}, nullptr, nullptr, 0}); }

// Pratt parser with standard precedence; '^' binds tightest, right assoc.
class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
      auto kind = lex_.tok == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub;
      lex_.next();
      NodePtr rhs = parse_term();
      NodePtr n = make(kind);
      n->a = lhs;
      n->b = rhs;
      lhs = n;
    }
    return lhs;
  }

  void expect_end() {
    if (lex_.tok != Tok::End) throw ParseError("trailing input", lex_.pos);
  }
  bool at_comma() const { return lex_.tok == Tok::Comma; }
  void eat_comma() { lex_.next(); }
  bool at_end() const { return lex_.tok == Tok::End; }
  bool at_rparen() const { return lex_.tok == Tok::RParen; }
  void eat_lparen() {
    if (lex_.tok != Tok::LParen) throw ParseError("expected '('", lex_.pos);
    lex_.next();
  }
  void eat_rparen() {
    if (lex_.tok != Tok::RParen) throw ParseError("expected ')'", lex_.pos);
    lex_.next();
  }

 private:
  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (lex_.tok == Tok::Star || lex_.tok == Tok::Slash) {
      auto kind = lex_.tok == Tok::Star ? Node::Kind::Mul : Node::Kind::Div;
      lex_.next();
      NodePtr rhs = parse_factor();
      NodePtr n = make(kind);
      n->a = lhs;
      n->b = rhs;
      lhs = n;
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (lex_.tok == Tok::Minus) {
      lex_.next();
      NodePtr n = make(Node::Kind::Neg);
      n->a = parse_factor();
      return n;
    }
    if (lex_.tok == Tok::Plus) {
      lex_.next();
      return parse_factor();
    }
    NodePtr base = parse_primary();
    if (lex_.tok == Tok::Caret) {
      lex_.next();
      bool neg = false;
      if (lex_.tok == Tok::Minus) {
        neg = true;
        lex_.next();
      }
      if (lex_.tok != Tok::Number) throw ParseError("expected integer exponent", lex_.pos);
      long e = std::stol(lex_.number);
      lex_.next();
      NodePtr n = make(Node::Kind::Pow);
      n->a = base;
      n->exponent = neg ? -e : e;
      return n;
    }
    return base;
  }

  NodePtr parse_primary() {
    switch (lex_.tok) {
      case Tok::Number: {
        NodePtr n = make(Node::Kind::Number);
        n->value = mpz_class(lex_.number);
        lex_.next();
        return n;
      }
      case Tok::Ident: {
        std::string id = lex_.ident;
        lex_.next();
        if (id == "i") return make(Node::Kind::Imag);
        if (id == "sqrt") {
          eat_lparen();
          NodePtr n = make(Node::Kind::Sqrt);
          n->a = parse_expr();
          eat_rparen();
          return n;
        }
        NodePtr n = make(Node::Kind::Var);
        n->var = id;
        return n;
      }
      case Tok::LParen: {
        lex_.next();
        NodePtr inner = parse_expr();
        eat_rparen();
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '('", lex_.pos);
    }
  }

  Lexer lex_;
};

bool contains_sqrt(const NodePtr& n) {
  if (!n) return false;
  if (n->kind == Node::Kind::Sqrt) return true;
  return contains_sqrt(n->a) || contains_sqrt(n->b);
}

RatExpr eval_exact(const NodePtr& n, const AlphabetPtr& alpha, const Hypersurface& src) {
  Poly one(alpha, Scalar(1));
  switch (n->kind) {
    case Node::Kind::Number: {
      mpq_class q(n->value);
      return {Poly(alpha, Scalar(q)), one};
    }
    case Node::Kind::Imag:
      return {Poly(alpha, Scalar::i()), one};
    case Node::Kind::Var: {
      if (!alpha->has(n->var) ||
          std::find(src.holo_vars().begin(), src.holo_vars().end(), n->var) ==
              src.holo_vars().end())
        throw ParseError("unknown variable '" + n->var + "' for source " + surface_name(src.tag),
                         0);
      return {Poly::var(alpha, n->var, Scalar(1)), one};
    }
    case Node::Kind::Add: {
      auto a = eval_exact(n->a, alpha, src), b = eval_exact(n->b, alpha, src);
      return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    case Node::Kind::Sub: {
      auto a = eval_exact(n->a, alpha, src), b = eval_exact(n->b, alpha, src);
      return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    case Node::Kind::Mul: {
      auto a = eval_exact(n->a, alpha, src), b = eval_exact(n->b, alpha, src);
      return {a.num * b.num, a.den * b.den};
    }
    case Node::Kind::Div: {
      auto a = eval_exact(n->a, alpha, src), b = eval_exact(n->b, alpha, src);
      if (b.num.is_zero()) throw ParseError("division by zero", 0);
      return {a.num * b.den, a.den * b.num};
    }
    case Node::Kind::Neg: {
      auto a = eval_exact(n->a, alpha, src);
      return {-a.num, a.den};
    }
    case Node::Kind::Pow: {
      auto a = eval_exact(n->a, alpha, src);
      long e = n->exponent;
      if (e >= 0) return {a.num.pow(static_cast<int>(e)), a.den.pow(static_cast<int>(e))};
      if (a.num.is_zero()) throw ParseError("division by zero in negative power", 0);
      return {a.den.pow(static_cast<int>(-e)), a.num.pow(static_cast<int>(-e))};
    }
    case Node::Kind::Sqrt:
      throw ParseError("sqrt is only available in series (germ) mode", 0);
  }
  throw ParseError("bad expression node", 0);
}

Series eval_series(const NodePtr& n, const AlphabetPtr& alpha, const Hypersurface& src,
                   int order) {
  switch (n->kind) {
    case Node::Kind::Number:
      return Series(Poly(alpha, Scalar(mpq_class(n->value))), order);
    case Node::Kind::Imag:
      return Series(Poly(alpha, Scalar::i()), order);
    case Node::Kind::Var: {
      if (!alpha->has(n->var) ||
          std::find(src.holo_vars().begin(), src.holo_vars().end(), n->var) ==
              src.holo_vars().end())
        throw ParseError("unknown variable '" + n->var + "'", 0);
      return Series(Poly::var(alpha, n->var, Scalar(1)), order);
    }
    case Node::Kind::Add:
      return eval_series(n->a, alpha, src, order) + eval_series(n->b, alpha, src, order);
    case Node::Kind::Sub:
      return eval_series(n->a, alpha, src, order) - eval_series(n->b, alpha, src, order);
    case Node::Kind::Mul:
      return eval_series(n->a, alpha, src, order) * eval_series(n->b, alpha, src, order);
    case Node::Kind::Div: {
      Series b = eval_series(n->b, alpha, src, order);
      return eval_series(n->a, alpha, src, order) * series_inverse(b);
    }
    case Node::Kind::Neg:
      return -eval_series(n->a, alpha, src, order);
    case Node::Kind::Pow: {
      Series a = eval_series(n->a, alpha, src, order);
      long e = n->exponent;
      if (e < 0) {
        a = series_inverse(a);
        e = -e;
      }
      Series acc(Poly(alpha, Scalar(1)), order);
      for (long k = 0; k < e; ++k) acc = acc * a;
      return acc;
    }
    case Node::Kind::Sqrt: {
      Series a = eval_series(n->a, alpha, src, order);
      Scalar c = a.body().constant_term(Scalar(0));
      if (c.is_one() && a.body().sqrt2_term(Scalar(0)).is_zero()) return series_sqrt(a);
      // factor out an exact square constant
      if (!c.is_real() || c.re() <= 0 || !a.body().sqrt2_term(Scalar(0)).is_zero())
        throw ParseError("sqrt needs constant term 1 or a positive rational square", 0);
      auto root = sqrt_exact(c.re());
      if (!root) throw ParseError("sqrt constant term is not an exact square", 0);
      Series normalized = a.scaled(Scalar(c.re()).inverse());
      return series_sqrt(normalized).scaled(Scalar(*root));
    }
  }
  throw ParseError("bad expression node", 0);
}

std::vector<NodePtr> parse_tuple(const std::string& text) {
  std::vector<NodePtr> parts;
  // allow both "(a, b, c)" and "a, b, c"
  bool wrapped = false;
  std::string t = text;
  size_t first = t.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && t[first] == '(') {
    // check the matching paren is the last non-space character and encloses
    // a comma at depth 1 (otherwise it is just a parenthesized expression)
    int depth = 0;
    bool comma_at_depth1 = false;
    size_t last = t.find_last_not_of(" \t\r\n");
    for (size_t k = first; k <= last; ++k) {
      if (t[k] == '(') ++depth;
      else if (t[k] == ')') {
        --depth;
        if (depth == 0 && k != last) break;
      } else if (t[k] == ',' && depth == 1) {
        comma_at_depth1 = true;
      }
      if (k == last && depth == 0 && comma_at_depth1) wrapped = true;
    }
  }
  std::string inner = wrapped ? t.substr(first + 1, t.find_last_not_of(" \t\r\n") - first - 1) : t;
  Parser q(inner);
  parts.push_back(q.parse_expr());
  while (q.at_comma()) {
    q.eat_comma();
    parts.push_back(q.parse_expr());
  }
  q.expect_end();
  return parts;
}

}  // namespace

RatExpr parse_component(const std::string& text, Surface source) {
  const auto& src = surface(source);
  Parser p(text);
  NodePtr n = p.parse_expr();
  p.expect_end();
  return eval_exact(n, src.alpha, src);
}

Series parse_component_series(const std::string& text, Surface source, int order) {
  const auto& src = surface(source);
  Parser p(text);
  NodePtr n = p.parse_expr();
  p.expect_end();
  return eval_series(n, src.alpha, src, order);
}

std::variant<RationalMap, MapGerm> parse_map(const std::string& text, Surface source,
                                             Surface target, int order,
                                             std::vector<Scalar> center) {
  auto parts = parse_tuple(text);
  const auto& src = surface(source);
  const auto& tgt = surface(target);
  if (static_cast<int>(parts.size()) != tgt.ambient_dim)
    throw ParseError("component count " + std::to_string(parts.size()) +
                         " does not match target dimension " + std::to_string(tgt.ambient_dim),
                     0);
  bool germ_mode = false;
  for (const auto& n : parts) germ_mode = germ_mode || contains_sqrt(n);
  if (!germ_mode) {
    std::vector<MapComponent> comps;
    for (const auto& n : parts) {
      auto e = eval_exact(n, src.alpha, src);
      comps.push_back({e.num, e.den});
    }
    return RationalMap(source, target, std::move(comps), std::move(center));
  }
  if (source != Surface::H3 || target != Surface::X)
    throw ParseError("germ (sqrt) input is only supported for H3 -> X maps", 0);
  std::array<Series, 3> s = {eval_series(parts[0], src.alpha, src, order),
                             eval_series(parts[1], src.alpha, src, order),
                             eval_series(parts[2], src.alpha, src, order)};
  MapGerm g{s[0], s[1], s[2]};
  check_germ_shape(g);
  return g;
}

std::variant<RationalMap, MapGerm> parse_map_file(const std::string& content, int order) {
  std::istringstream in(content);
  std::string line, name;
  Surface source = Surface::H3, target = Surface::X;
  std::vector<Scalar> center;
  std::vector<std::string> exprs;
  bool in_components = false;
  size_t lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return std::string();
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (in_components) {
      exprs.push_back(t);
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key:' header line", lineno);
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    if (key == "name") {
      name = val;
    } else if (key == "source" || key == "target") {
      auto s = surface_from_name(val);
      if (!s) throw ParseError("unknown surface tag '" + val + "'", lineno);
      (key == "source" ? source : target) = *s;
    } else if (key == "center") {
      center.clear();
      std::istringstream cs(val);
      std::string part;
      while (std::getline(cs, part, ',')) {
        auto v = Scalar::parse(trim(part));
        if (!v) throw ParseError("bad center coordinate '" + part + "'", lineno);
        center.push_back(*v);
      }
    } else if (key == "components") {
      in_components = true;
      if (!val.empty()) exprs.push_back(val);
    } else {
      throw ParseError("unknown header key '" + key + "'", lineno);
    }
  }
  std::string joined;
  for (size_t k = 0; k < exprs.size(); ++k) joined += (k ? "," : "") + exprs[k];
  auto result = parse_map(joined, source, target, order, center);
  if (std::holds_alternative<RationalMap>(result) && !name.empty())
    std::get<RationalMap>(result).set_name(name);
  return result;
}

std::string print_map(const RationalMap& map) {
  std::string out = "(";
  for (size_t k = 0; k < map.comps().size(); ++k) {
    if (k) out += ", ";
    const auto& c = map.comps()[k];
    bool trivial_den = c.den == Poly(c.den.alphabet(), Scalar(1));
    if (trivial_den) {
      out += c.num.str();
    } else {
      out += "(" + c.num.str() + ")/(" + c.den.str() + ")";
    }
  }
  return out + ")";
}

}  // namespace crlc
