#pragma once

#include <memory>

#include "residua/qsring.hpp"

namespace residua {

// Abstract syntax over model element literals. Literals are typed against
// the session model at parse time.
struct Expr {
  enum class Op {
    Lit,     // QsElem literal (residue / pair / LFl / lattice point / eps)
    Add, Sub, Mul, Neg,
    Inv,     // quasi-inverse
    Meet, Join, Median,
    Dist,    // -> Lambda
    EPlus, V,  // -> Lambda
    One,     // 1_alpha
  };
  Op op = Op::Lit;
  std::vector<std::shared_ptr<Expr>> args;
  std::optional<QsElem> lit;
};
using ExprPtr = std::shared_ptr<Expr>;

ExtDesc parse_ext(const std::string& src);
ModelDesc parse_model(const std::string& src);

// Grammar: expr := sum; sum := prod (("+"|"-") prod)*;
// prod := unary ("*" unary)*; unary := "-" unary | primary;
// primary := atom | func "(" args ")" | "(" expr ")";
// "mod" binds tighter than the operators. Errors carry the byte offset.
ExprPtr parse_expr(const std::string& src, const ModelDesc& model);

// Either a model element or a Lambda value (from d / eplus / v).
struct Value {
  std::variant<QsElem, LElem> v;
  bool is_elem() const { return std::holds_alternative<QsElem>(v); }
  const QsElem& elem() const { return std::get<QsElem>(v); }
  const LElem& lam() const { return std::get<LElem>(v); }
};

Value eval_expr(const ExprPtr& e, const ModelDesc& model);
std::string value_str(const Value& v);

// Level of an integer n inside the extension's value group (per-block
// S-valuations; full factorization for ZinQ).
LElem level_of_int(const ExtDesc& ext, long long n);

// Idempotent literal: "omega", "eps", or factors like "2^inf*3^inf";
// "default=inf" prefixed forms for complemented idempotents.
LMonElem parse_idempotent(const LGroupDesc& group, const std::string& src);

// Raw B-element: rational "n/d", rational function "(num)/(den)", or a
// tuple "(a | b)". No reduction into any window.
FieldElem parse_field_elem(const ExtDesc& ext, const std::string& src);

}  // namespace residua
