#pragma once

#include <memory>
#include <string>
#include <vector>

#include "uea/comm_poly.hpp"
#include "uea/element.hpp"

namespace uea {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// expr   := ('-')? term (('+'|'-') term)*
// term   := factor ('*'? factor)*          juxtaposition multiplies
// factor := atom ('^' nat)?
// atom   := 'e[' int ',' int ']' | 'h[' int ']' | 'c' | 'i' | rational
//         | 'Tr(' ('E'|'B') ('[' int ']')? ('^' nat)? ')'
//         | 'W(' int (',' int)* ')' | 'b[' int ',' int ']' | '(' expr ')'
struct ExprNode {
  enum class Kind {
    Add,
    Sub,
    Mul,
    Pow,
    RationalLit,
    ImaginaryUnit,
    GenE,
    GenH,
    GenC,
    VarB,
    Trace,
    Word,
  };
  Kind kind;
  std::vector<std::unique_ptr<ExprNode>> kids;
  Rational value{0};
  unsigned power = 0;
  int i = 0, j = 0;
  char trace_base = 'E';
  int trace_corner = 0;  // 0 = full matrix
  unsigned trace_pow = 1;
  std::vector<int> word;
};

using ExprPtr = std::unique_ptr<ExprNode>;

enum class ParseMode { Uea, Comm };

struct ParseContext {
  int d = 2;
  int p = 0;  // session partition for W(...)
  ParseMode mode = ParseMode::Uea;
};

ExprPtr parse_expr_tree(const std::string& text);

Element eval_uea(const ExprNode& node, const ParseContext& ctx);
CommPoly eval_comm(const ExprNode& node, const ParseContext& ctx);

// parse + evaluate in one step
Element parse_element(const std::string& text, const ParseContext& ctx);
CommPoly parse_comm(const std::string& text, const ParseContext& ctx);

// grammar-syntax printers; parsing the output reproduces the value
std::string print_element(const Element& e);
std::string print_comm(const CommPoly& p);

}  // namespace uea
