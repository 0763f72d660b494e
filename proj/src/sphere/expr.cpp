#include "bulab/sphere/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bulab/errors.hpp"

namespace bulab::sphere {

enum class NodeKind { Number, Variable, Binary, Function, Power };
enum class BinOp { Add, Sub, Mul, Div };
enum class FuncKind { Exp, Sin, Cos };

struct FunctionExpr::Node {
  NodeKind kind;
  Complex value{};                      // Number
  int var = 0;                          // Variable: 0=x 1=y 2=z
  BinOp op = BinOp::Add;                // Binary
  FuncKind func = FuncKind::Exp;        // Function
  int exponent = 0;                     // Power
  std::shared_ptr<const Node> lhs, rhs; // Binary: both; Function/Power: lhs
};

namespace {

using Node = FunctionExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(Complex v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Number;
  n->value = v;
  return n;
}

NodePtr make_variable(int var) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->var = var;
  return n;
}

NodePtr make_binary(BinOp op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Binary;
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_function(FuncKind f, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Function;
  n->func = f;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_power(NodePtr base, int k) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Power;
  n->exponent = k;
  n->lhs = std::move(base);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", 0);
    NodePtr e = expr();
    skip_space();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  bool consume(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip_space();
      if (consume('+'))
        lhs = make_binary(BinOp::Add, lhs, term());
      else if (consume('-'))
        lhs = make_binary(BinOp::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      skip_space();
      if (consume('*')) {
        lhs = make_binary(BinOp::Mul, lhs, factor());
      } else if (consume('/')) {
        const std::size_t at = pos_;
        NodePtr rhs = factor();
        if (rhs->kind == NodeKind::Number && rhs->value == Complex(0.0))
          throw ParseError("division by syntactic zero", at);
        lhs = make_binary(BinOp::Div, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    NodePtr b = base();
    skip_space();
    if (consume('^')) return make_power(b, integer());
    return b;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer exponent", pos_);
    int value = 0;
    const auto res =
        std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc() || value > 1000)
      throw ParseError("exponent out of range", start);
    return value;
  }

  NodePtr base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')', "to close the group");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected digits after decimal point", pos_);
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }
    // Exponent suffix only if it really is one: 'e' could otherwise begin
    // an identifier in malformed input.
    if (peek() == 'e' || peek() == 'E') {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
      }
    }
    double value = 0.0;
    const auto res =
        std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc())
      throw ParseError("malformed number", start);
    return make_number(Complex(value, 0.0));
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make_variable(0);
    if (name == "y") return make_variable(1);
    if (name == "z") return make_variable(2);
    if (name == "i") return make_number(Complex(0.0, 1.0));
    FuncKind f;
    if (name == "exp")
      f = FuncKind::Exp;
    else if (name == "sin")
      f = FuncKind::Sin;
    else if (name == "cos")
      f = FuncKind::Cos;
    else
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    expect('(', "after function name");
    NodePtr arg = expr();
    expect(')', "to close the argument");
    return make_function(f, arg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

Complex eval_node(const Node& n, double x, double y, double z) {
  switch (n.kind) {
    case NodeKind::Number:
      return n.value;
    case NodeKind::Variable:
      return Complex(n.var == 0 ? x : (n.var == 1 ? y : z), 0.0);
    case NodeKind::Binary: {
      const Complex a = eval_node(*n.lhs, x, y, z);
      const Complex b = eval_node(*n.rhs, x, y, z);
      switch (n.op) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div: return a / b;
      }
      return {};
    }
    case NodeKind::Function: {
      const Complex a = eval_node(*n.lhs, x, y, z);
      switch (n.func) {
        case FuncKind::Exp: return std::exp(a);
        case FuncKind::Sin: return std::sin(a);
        case FuncKind::Cos: return std::cos(a);
      }
      return {};
    }
    case NodeKind::Power: {
      const Complex b = eval_node(*n.lhs, x, y, z);
      Complex r(1.0);
      for (int k = 0; k < n.exponent; ++k) r *= b;
      return r;
    }
  }
  return {};
}

std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// Renders a complex constant inside the grammar, which has no unary minus:
// negative parts are written as explicit subtractions.
std::string format_complex(Complex c) {
  if (c == Complex(0.0, 1.0)) return "i";
  if (c.imag() == 0.0) {
    if (c.real() >= 0.0) return format_double(c.real());
    return "(0 - " + format_double(-c.real()) + ")";
  }
  std::string s = "(";
  if (c.real() != 0.0)
    s += c.real() >= 0.0 ? format_double(c.real())
                         : "0 - " + format_double(-c.real());
  else if (c.imag() < 0.0)
    s += "0";
  if (c.imag() >= 0.0) {
    if (s.size() > 1) s += " + ";
    s += format_double(c.imag()) + "*i";
  } else {
    s += " - " + format_double(-c.imag()) + "*i";
  }
  return s + ")";
}

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Binary:
      return (n.op == BinOp::Add || n.op == BinOp::Sub) ? 1 : 2;
    case NodeKind::Power:
      return 3;
    default:
      return 4;
  }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    print_node(child, out);
    out += ')';
  } else {
    print_node(child, out);
  }
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Number:
      out += format_complex(n.value);
      return;
    case NodeKind::Variable:
      out += (n.var == 0 ? 'x' : (n.var == 1 ? 'y' : 'z'));
      return;
    case NodeKind::Binary: {
      const int prec = precedence(n);
      print_child(*n.lhs, prec, out);
      switch (n.op) {
        case BinOp::Add: out += " + "; break;
        case BinOp::Sub: out += " - "; break;
        case BinOp::Mul: out += "*"; break;
        case BinOp::Div: out += "/"; break;
      }
      // Same-precedence right operands need parens to survive left
      // association.
      print_child(*n.rhs, prec + 1, out);
      return;
    }
    case NodeKind::Function:
      out += (n.func == FuncKind::Exp ? "exp(" :
              n.func == FuncKind::Sin ? "sin(" : "cos(");
      print_node(*n.lhs, out);
      out += ')';
      return;
    case NodeKind::Power:
      print_child(*n.lhs, 4, out);
      out += '^';
      out += std::to_string(n.exponent);
      return;
  }
}

bool same_node(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Number:
      return a.value == b.value;
    case NodeKind::Variable:
      return a.var == b.var;
    case NodeKind::Binary:
      return a.op == b.op && same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
    case NodeKind::Function:
      return a.func == b.func && same_node(*a.lhs, *b.lhs);
    case NodeKind::Power:
      return a.exponent == b.exponent && same_node(*a.lhs, *b.lhs);
  }
  return false;
}

}  // namespace

FunctionExpr FunctionExpr::parse(std::string_view src) {
  return FunctionExpr(Parser(src).run());
}

Complex FunctionExpr::eval(const Eigen::Vector3d& p) const {
  return eval_node(*root_, p.x(), p.y(), p.z());
}

Complex FunctionExpr::eval(double x, double y, double z) const {
  return eval_node(*root_, x, y, z);
}

std::string FunctionExpr::str() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool FunctionExpr::same_tree(const FunctionExpr& other) const {
  return same_node(*root_, *other.root_);
}

std::string random_trig_polynomial(std::uint64_t seed, int max_degree,
                                   double scale) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    // 53-bit mantissa draw; identical on every platform, unlike
    // std::uniform_real_distribution.
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };

  std::string out;
  const auto append_term = [&out](double magnitude, bool negative,
                                  const std::string& tail) {
    std::string term = format_double(magnitude) + tail;
    if (out.empty())
      out = negative ? "0 - " + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  };

  for (int total = 0; total <= max_degree; ++total) {
    for (int a = total; a >= 0; --a) {
      for (int b = total - a; b >= 0; --b) {
        const int c = total - a - b;
        std::string mono;
        const auto push = [&mono](char v, int e) {
          if (e == 0) return;
          if (!mono.empty()) mono += '*';
          mono += v;
          if (e > 1) mono += '^' + std::to_string(e);
        };
        push('x', a);
        push('y', b);
        push('z', c);

        const double re = scale * uniform();
        const double im = scale * uniform();
        const std::string tail = mono.empty() ? "" : "*" + mono;
        append_term(std::abs(re), re < 0.0, tail);
        append_term(std::abs(im), im < 0.0, "*i" + tail);
      }
    }
  }
  return out;
}

}  // namespace bulab::sphere
