#include "sepweb/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sepweb/elliptic.hpp"
#include "sepweb/errors.hpp"

namespace sepweb {

namespace {

enum Fn : int {
  kSin, kCos, kTan, kSec, kExp, kLog, kSinh, kCosh, kTanh, kSech, kCsch, kCoth, kSqrt, kAbs, kSgn,
  kEllipK, kJacobiBase
};

constexpr std::array<const char*, kEllipK + 1> kFnNames{
    "sin", "cos", "tan", "sec", "exp", "log", "sinh", "cosh", "tanh", "sech", "csch", "coth",
    "sqrt", "abs", "sgn", "K"};

int lookup_fn(std::string_view name, int& arity) {
  for (int i = 0; i <= kEllipK; ++i) {
    if (name == kFnNames[static_cast<std::size_t>(i)]) {
      arity = 1;
      return i;
    }
  }
  JacobiFn j{};
  if (parse_jacobi_name(name, j)) {
    arity = 2;
    return kJacobiBase + static_cast<int>(j);
  }
  return -1;
}

}  // namespace

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::map<std::string, int>& slots, Expr& out)
      : text_(text), slots_(slots), out_(out) {}

  void run() {
    out_.root_ = parse_sum();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  int push(Expr::Node n) {
    out_.nodes_.push_back(std::move(n));
    return static_cast<int>(out_.nodes_.size()) - 1;
  }

  int binary(Expr::Op op, int l, int r) {
    Expr::Node n;
    n.op = op;
    n.kids = {l, r};
    return push(std::move(n));
  }

  int parse_sum() {
    int l = parse_product();
    for (;;) {
      if (accept('+')) {
        l = binary(Expr::Op::Add, l, parse_product());
      } else if (accept('-')) {
        l = binary(Expr::Op::Sub, l, parse_product());
      } else {
        return l;
      }
    }
  }

  int parse_product() {
    int l = parse_unary();
    for (;;) {
      if (accept('*')) {
        l = binary(Expr::Op::Mul, l, parse_unary());
      } else if (accept('/')) {
        l = binary(Expr::Op::Div, l, parse_unary());
      } else {
        return l;
      }
    }
  }

  int parse_unary() {
    if (accept('-')) {
      Expr::Node n;
      n.op = Expr::Op::Neg;
      n.kids = {parse_unary()};
      return push(std::move(n));
    }
    if (accept('+')) return parse_unary();
    const int base = parse_primary();
    if (accept('^')) return binary(Expr::Op::Pow, base, parse_unary());
    return base;
  }

  int parse_primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      const int e = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return parse_name();
    fail(std::string("unexpected '") + ch + "'");
  }

  int parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        pos_ = q;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string tok(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail("bad number '" + tok + "'");
    Expr::Node n;
    n.op = Expr::Op::Num;
    n.num = v;
    return push(std::move(n));
  }

  int parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      int arity = 0;
      const int fn = lookup_fn(name, arity);
      if (fn < 0) fail("unknown function '" + name + "'");
      Expr::Node n;
      n.op = Expr::Op::Call;
      n.index = fn;
      n.name = name;
      n.kids.push_back(parse_sum());
      while (accept(',')) n.kids.push_back(parse_sum());
      if (!accept(')')) fail("expected ')'");
      if (static_cast<int>(n.kids.size()) != arity) fail("wrong arity for '" + name + "'");
      return push(std::move(n));
    }
    Expr::Node n;
    n.name = name;
    if (auto it = slots_.find(name); it != slots_.end()) {
      n.op = Expr::Op::Slot;
      n.index = it->second;
    } else if (name == "a" || name == "b" || name == "c") {
      n.op = Expr::Op::Param;
      n.index = name[0] - 'a';
    } else if (name == "pi") {
      n.op = Expr::Op::Num;
      n.num = std::numbers::pi;
    } else {
      fail("unknown name '" + name + "'");
    }
    return push(std::move(n));
  }

  std::string_view text_;
  const std::map<std::string, int>& slots_;
  Expr& out_;
  std::size_t pos_ = 0;
};

Expr Expr::parse(std::string_view text, const std::map<std::string, int>& slots) {
  Expr e;
  e.source_ = std::string(text);
  ExprParser(text, slots, e).run();
  return e;
}

namespace {

template <class T>
T integer_power(T base, int n) {
  if (n < 0) return T(1.0) / integer_power(base, -n);
  T r(1.0);
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

template <class T>
T apply_fn(int fn, const T& x) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::fabs;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  using std::tan;
  using std::tanh;
  switch (fn) {
    case kSin: return sin(x);
    case kCos: return cos(x);
    case kTan: return tan(x);
    case kSec: return T(1.0) / cos(x);
    case kExp: return exp(x);
    case kLog: return log(x);
    case kSinh: return sinh(x);
    case kCosh: return cosh(x);
    case kTanh: return tanh(x);
    case kSech: return T(1.0) / cosh(x);
    case kCsch: return T(1.0) / sinh(x);
    case kCoth: return cosh(x) / sinh(x);
    case kSqrt: return sqrt(x);
    case kAbs: return fabs(x);
    case kSgn: {
      const double v = value_of(x);
      return T(v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0));
    }
    default: return T(elliptic_K(value_of(x)));
  }
}

}  // namespace

template <class T>
T Expr::eval_node(int id, const std::vector<T>& slots, const Params& params) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  switch (n.op) {
    case Op::Num: return T(n.num);
    case Op::Slot: return slots[static_cast<std::size_t>(n.index)];
    case Op::Param: return T(n.index == 0 ? params.a : (n.index == 1 ? params.b : params.c));
    case Op::Neg: return -eval_node(n.kids[0], slots, params);
    case Op::Add: return eval_node(n.kids[0], slots, params) + eval_node(n.kids[1], slots, params);
    case Op::Sub: return eval_node(n.kids[0], slots, params) - eval_node(n.kids[1], slots, params);
    case Op::Mul: return eval_node(n.kids[0], slots, params) * eval_node(n.kids[1], slots, params);
    case Op::Div: return eval_node(n.kids[0], slots, params) / eval_node(n.kids[1], slots, params);
    case Op::Pow: {
      const T base = eval_node(n.kids[0], slots, params);
      const double p = value_of(eval_node(n.kids[1], slots, params));
      if (p == std::round(p) && std::fabs(p) <= 16) return integer_power(base, static_cast<int>(p));
      using std::pow;
      return pow(base, p);
    }
    case Op::Call: {
      const T arg = eval_node(n.kids[0], slots, params);
      if (n.index >= kJacobiBase) {
        const double k = value_of(eval_node(n.kids[1], slots, params));
        return jacobi(static_cast<JacobiFn>(n.index - kJacobiBase), arg, k);
      }
      return apply_fn(n.index, arg);
    }
  }
  return T(0.0);
}

template <class T>
T Expr::eval(const std::vector<T>& slots, const Params& params) const {
  return eval_node(root_, slots, params);
}

template double Expr::eval<double>(const std::vector<double>&, const Params&) const;
template DualScalar Expr::eval<DualScalar>(const std::vector<DualScalar>&, const Params&) const;

void Expr::prefix_node(int id, std::string& out) const {
  const Node& n = nodes_[static_cast<std::size_t>(id)];
  auto with_kids = [&](const char* head) {
    out += '(';
    out += head;
    for (int k : n.kids) {
      out += ' ';
      prefix_node(k, out);
    }
    out += ')';
  };
  switch (n.op) {
    case Op::Num:
      if (n.name == "pi") {
        out += "pi";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.num);
        out += buf;
      }
      return;
    case Op::Slot:
    case Op::Param: out += n.name; return;
    case Op::Neg: with_kids("-"); return;
    case Op::Add: with_kids("+"); return;
    case Op::Sub: with_kids("-"); return;
    case Op::Mul: with_kids("*"); return;
    case Op::Div: with_kids("/"); return;
    case Op::Pow: with_kids("^"); return;
    case Op::Call: with_kids(n.name.c_str()); return;
  }
}

std::string Expr::prefix() const {
  std::string out;
  prefix_node(root_, out);
  return out;
}

Program::Program(const std::array<std::string, 3>& inputs,
                 const std::vector<std::pair<std::string, std::string>>& lets) {
  for (int i = 0; i < 3; ++i) scope_[inputs[static_cast<std::size_t>(i)]] = i;
  for (const auto& [name, text] : lets) {
    lets_.emplace_back(name, Expr::parse(text, scope_));
    scope_[name] = 2 + static_cast<int>(lets_.size());
  }
}

int Program::add_output(std::string_view text) {
  outputs_.push_back(Expr::parse(text, scope_));
  return static_cast<int>(outputs_.size()) - 1;
}

template <class T>
std::vector<T> Program::run(const std::array<T, 3>& in, const Params& params) const {
  std::vector<T> slots(in.begin(), in.end());
  slots.reserve(3 + lets_.size());
  for (const auto& [name, e] : lets_) slots.push_back(e.eval(slots, params));
  std::vector<T> out;
  out.reserve(outputs_.size());
  for (const auto& e : outputs_) out.push_back(e.eval(slots, params));
  return out;
}

template std::vector<double> Program::run<double>(const std::array<double, 3>&,
                                                  const Params&) const;
template std::vector<DualScalar> Program::run<DualScalar>(const std::array<DualScalar, 3>&,
                                                          const Params&) const;

}  // namespace sepweb
