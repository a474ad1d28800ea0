#pragma once

// Small formula language for the chart tables.
//
// Grammar: sums, products, unary minus, right-associative '^', numbers, names and
// calls. Names resolve to variable slots (chosen by the caller) or to the constants
// a, b, c and pi. Calls: sin cos tan sec exp log sinh cosh tanh sech csch coth sqrt
// abs sgn, the Jacobi family pq(arg, modulus) and K(modulus).

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sepweb/dual.hpp"

namespace sepweb {

struct Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

class Expr {
 public:
  // Throws ParseError. `slots` maps variable names to slot indices.
  static Expr parse(std::string_view text, const std::map<std::string, int>& slots);

  template <class T>
  T eval(const std::vector<T>& slots, const Params& params) const;

  // Prefix S-expression with numbers at 17 significant digits.
  std::string prefix() const;

  const std::string& source() const { return source_; }

 private:
  enum class Op { Num, Slot, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

  struct Node {
    Op op = Op::Num;
    double num = 0.0;
    int index = 0;  // slot, param (0=a,1=b,2=c) or function id
    std::string name;
    std::vector<int> kids;
  };

  template <class T>
  T eval_node(int id, const std::vector<T>& slots, const Params& params) const;
  void prefix_node(int id, std::string& out) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::string source_;

  friend class ExprParser;
};

extern template double Expr::eval<double>(const std::vector<double>&, const Params&) const;
extern template DualScalar Expr::eval<DualScalar>(const std::vector<DualScalar>&,
                                                  const Params&) const;

// Ordered let bindings over the inputs u, v, w (or t, x, y). Later bindings may use
// earlier ones.
class Program {
 public:
  Program() = default;
  Program(const std::array<std::string, 3>& inputs,
          const std::vector<std::pair<std::string, std::string>>& lets);

  // Adds an expression evaluated in the scope after all lets.
  int add_output(std::string_view text);

  // Returns the values of all outputs added with add_output, in order.
  template <class T>
  std::vector<T> run(const std::array<T, 3>& in, const Params& params) const;

  const std::vector<std::pair<std::string, Expr>>& lets() const { return lets_; }
  const std::vector<Expr>& outputs() const { return outputs_; }

 private:
  std::map<std::string, int> scope_;
  std::vector<std::pair<std::string, Expr>> lets_;
  std::vector<Expr> outputs_;
};

extern template std::vector<double> Program::run<double>(const std::array<double, 3>&,
                                                         const Params&) const;
extern template std::vector<DualScalar> Program::run<DualScalar>(
    const std::array<DualScalar, 3>&, const Params&) const;

}  // namespace sepweb
