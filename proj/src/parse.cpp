#include "uea/parse.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

#include "uea/blocks.hpp"
#include "uea/ito.hpp"

namespace uea {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool eat_word(const char* w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (text.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    return std::stol(text.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& t) : lex(t) {}

  ExprPtr make(ExprNode::Kind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
  }

  ExprPtr expr() {
    bool neg = false;
    if (lex.peek() == '-') {
      lex.eat('-');
      neg = true;
    }
    ExprPtr left = term();
    if (neg) {
      auto m = make(ExprNode::Kind::RationalLit);
      m->value = Rational(-1);
      auto mul = make(ExprNode::Kind::Mul);
      mul->kids.push_back(std::move(m));
      mul->kids.push_back(std::move(left));
      left = std::move(mul);
    }
    while (true) {
      char c = lex.peek();
      if (c == '+' || c == '-') {
        lex.eat(c);
        auto node = make(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub);
        node->kids.push_back(std::move(left));
        node->kids.push_back(term());
        left = std::move(node);
      } else {
        return left;
      }
    }
  }

  bool at_atom_start() {
    char c = lex.peek();
    return c == 'e' || c == 'h' || c == 'c' || c == 'i' || c == 'b' ||
           c == 'T' || c == 'W' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      if (lex.eat('*')) {
        auto node = make(ExprNode::Kind::Mul);
        node->kids.push_back(std::move(left));
        node->kids.push_back(factor());
        left = std::move(node);
      } else if (at_atom_start()) {  // juxtaposition
        auto node = make(ExprNode::Kind::Mul);
        node->kids.push_back(std::move(left));
        node->kids.push_back(factor());
        left = std::move(node);
      } else {
        return left;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (lex.eat('^')) {
      long e = lex.integer();
      if (e < 0) throw ParseError("exponent must be a nonnegative integer",
                                  lex.pos);
      auto node = make(ExprNode::Kind::Pow);
      node->power = static_cast<unsigned>(e);
      node->kids.push_back(std::move(base));
      return node;
    }
    return base;
  }

  ExprPtr atom() {
    lex.skip_ws();
    const size_t at = lex.pos;
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = lex.integer();
      auto node = make(ExprNode::Kind::RationalLit);
      if (lex.eat('/')) {
        long den = lex.integer();
        if (den == 0) throw ParseError("zero denominator", at);
        node->value = Rational(num, den);
        node->value.canonicalize();
      } else {
        node->value = Rational(num);
      }
      return node;
    }
    if (lex.eat_word("Tr")) {
      lex.expect('(');
      auto node = make(ExprNode::Kind::Trace);
      if (lex.eat('E'))
        node->trace_base = 'E';
      else if (lex.eat('B'))
        node->trace_base = 'B';
      else
        throw ParseError("Tr expects E or B", lex.pos);
      if (lex.eat('[')) {
        node->trace_corner = static_cast<int>(lex.integer());
        lex.expect(']');
      }
      if (lex.eat('^')) {
        long e = lex.integer();
        if (e < 0) throw ParseError("exponent must be nonnegative", lex.pos);
        node->trace_pow = static_cast<unsigned>(e);
      }
      lex.expect(')');
      return node;
    }
    if (lex.eat_word("W")) {
      lex.expect('(');
      auto node = make(ExprNode::Kind::Word);
      node->word.push_back(static_cast<int>(lex.integer()));
      while (lex.eat(',')) node->word.push_back(static_cast<int>(lex.integer()));
      lex.expect(')');
      return node;
    }
    if (lex.eat('e')) {
      lex.expect('[');
      auto node = make(ExprNode::Kind::GenE);
      node->i = static_cast<int>(lex.integer());
      lex.expect(',');
      node->j = static_cast<int>(lex.integer());
      lex.expect(']');
      return node;
    }
    if (lex.eat('h')) {
      lex.expect('[');
      auto node = make(ExprNode::Kind::GenH);
      node->i = static_cast<int>(lex.integer());
      lex.expect(']');
      return node;
    }
    if (lex.eat('b')) {
      lex.expect('[');
      auto node = make(ExprNode::Kind::VarB);
      node->i = static_cast<int>(lex.integer());
      lex.expect(',');
      node->j = static_cast<int>(lex.integer());
      lex.expect(']');
      return node;
    }
    if (lex.eat('c')) return make(ExprNode::Kind::GenC);
    if (lex.eat('i')) return make(ExprNode::Kind::ImaginaryUnit);
    if (lex.eat('(')) {
      ExprPtr inner = expr();
      lex.expect(')');
      return inner;
    }
    throw ParseError("expected atom", at);
  }
};

}  // namespace

ExprPtr parse_expr_tree(const std::string& text) {
  Parser p(text);
  ExprPtr root = p.expr();
  p.lex.skip_ws();
  if (p.lex.pos != text.size())
    throw ParseError("unexpected trailing input", p.lex.pos);
  return root;
}

Element eval_uea(const ExprNode& node, const ParseContext& ctx) {
  const int d = ctx.d;
  switch (node.kind) {
    case ExprNode::Kind::Add:
      return eval_uea(*node.kids[0], ctx) + eval_uea(*node.kids[1], ctx);
    case ExprNode::Kind::Sub:
      return eval_uea(*node.kids[0], ctx) - eval_uea(*node.kids[1], ctx);
    case ExprNode::Kind::Mul:
      return multiply(eval_uea(*node.kids[0], ctx),
                      eval_uea(*node.kids[1], ctx));
    case ExprNode::Kind::Pow: {
      Element acc = Element::unit(d);
      Element base = eval_uea(*node.kids[0], ctx);
      for (unsigned k = 0; k < node.power; ++k) acc = multiply(acc, base);
      return acc;
    }
    case ExprNode::Kind::RationalLit:
      return Element::constant(Scalar(node.value), d);
    case ExprNode::Kind::ImaginaryUnit:
      return Element::constant(Scalar::imaginary(), d);
    case ExprNode::Kind::GenE:
      if (node.i < 1 || node.i > d || node.j < 1 || node.j > d)
        throw std::invalid_argument("e index out of range for rank");
      return Element::e(node.i, node.j, d);
    case ExprNode::Kind::GenH:
      if (node.i < 1 || node.i > d - 1)
        throw std::invalid_argument("h index out of range for rank");
      return Element::h(node.i, d);
    case ExprNode::Kind::GenC:
      return Element::central(d);
    case ExprNode::Kind::VarB:
      throw std::invalid_argument("b variables are not available in uea mode");
    case ExprNode::Kind::Trace: {
      if (node.trace_base != 'E')
        throw std::invalid_argument("Tr(B...) is not available in uea mode");
      const int r = node.trace_corner == 0 ? d : node.trace_corner;
      return trace_power(r, static_cast<int>(node.trace_pow), d);
    }
    case ExprNode::Kind::Word:
      return trace_word(BlockPartition(d, ctx.p), node.word);
  }
  throw std::logic_error("bad node kind");
}

CommPoly eval_comm(const ExprNode& node, const ParseContext& ctx) {
  const int d = ctx.d;
  switch (node.kind) {
    case ExprNode::Kind::Add:
      return eval_comm(*node.kids[0], ctx) + eval_comm(*node.kids[1], ctx);
    case ExprNode::Kind::Sub:
      return eval_comm(*node.kids[0], ctx) - eval_comm(*node.kids[1], ctx);
    case ExprNode::Kind::Mul:
      return eval_comm(*node.kids[0], ctx) * eval_comm(*node.kids[1], ctx);
    case ExprNode::Kind::Pow:
      return eval_comm(*node.kids[0], ctx).pow(node.power);
    case ExprNode::Kind::RationalLit:
      return CommPoly::constant(Scalar(node.value), d);
    case ExprNode::Kind::ImaginaryUnit:
      return CommPoly::constant(Scalar::imaginary(), d);
    case ExprNode::Kind::VarB:
      return CommPoly::variable(node.i, node.j, d);
    case ExprNode::Kind::Trace: {
      if (node.trace_base != 'B')
        throw std::invalid_argument("Tr(E...) is not available in comm mode");
      const int r = node.trace_corner == 0 ? d : node.trace_corner;
      return comm_trace_power(r, static_cast<int>(node.trace_pow), d);
    }
    case ExprNode::Kind::Word:
      return comm_trace_word(d, ctx.p, node.word);
    case ExprNode::Kind::GenE:
    case ExprNode::Kind::GenH:
    case ExprNode::Kind::GenC:
      throw std::invalid_argument("e/h/c atoms are not available in comm mode");
  }
  throw std::logic_error("bad node kind");
}

Element parse_element(const std::string& text, const ParseContext& ctx) {
  return eval_uea(*parse_expr_tree(text), ctx);
}

CommPoly parse_comm(const std::string& text, const ParseContext& ctx) {
  return eval_comm(*parse_expr_tree(text), ctx);
}

namespace {

std::string scalar_expr(const Scalar& s) {
  std::ostringstream os;
  os << "(";
  if (sgn(s.im) == 0) {
    os << s.re.get_str();
  } else if (sgn(s.re) == 0) {
    os << s.im.get_str() << "*i";
  } else {
    os << s.re.get_str();
    if (sgn(s.im) >= 0) os << "+";
    os << s.im.get_str() << "*i";
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string print_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, s] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << scalar_expr(s);
    for (size_t slot = 0; slot < m.exp.size(); ++slot) {
      if (m.exp[slot] == 0) continue;
      Generator g = slot_generator(static_cast<int>(slot), e.rank());
      os << "*";
      switch (g.kind) {
        case Generator::Kind::OffDiag:
          os << "e[" << g.i << "," << g.j << "]";
          break;
        case Generator::Kind::Cartan:
          os << "h[" << g.i << "]";
          break;
        case Generator::Kind::Central:
          os << "c";
          break;
      }
      if (m.exp[slot] > 1) os << "^" << m.exp[slot];
    }
  }
  return os.str();
}

std::string print_comm(const CommPoly& p) {
  if (p.is_zero()) return "0";
  const int d = p.rank();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, s] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << scalar_expr(s);
    for (size_t slot = 0; slot < m.exp.size(); ++slot) {
      if (m.exp[slot] == 0) continue;
      os << "*b[" << static_cast<int>(slot) / d + 1 << ","
         << static_cast<int>(slot) % d + 1 << "]";
      if (m.exp[slot] > 1) os << "^" << m.exp[slot];
    }
  }
  return os.str();
}

}  // namespace uea
