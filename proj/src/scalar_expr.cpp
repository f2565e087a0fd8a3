/*
 * Copyright 2026 The RMA Engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rma/scalar_expr.hpp"

#include <variant>

#include "rma/value_format.hpp"

namespace rma {

const char* binop_symbol(BinOp op) {
  switch (op) {
    case BinOp::add: return "+";
    case BinOp::sub: return "-";
    case BinOp::mul: return "*";
    case BinOp::div: return "/";
    case BinOp::eq: return "=";
    case BinOp::ne: return "<>";
    case BinOp::lt: return "<";
    case BinOp::le: return "<=";
    case BinOp::gt: return ">";
    case BinOp::ge: return ">=";
    case BinOp::logic_and: return "AND";
    case BinOp::logic_or: return "OR";
  }
  return "?";
}

const char* agg_fn_name(AggFn fn) {
  switch (fn) {
    case AggFn::count_star:
    case AggFn::count: return "COUNT";
    case AggFn::sum: return "SUM";
    case AggFn::avg: return "AVG";
    case AggFn::min: return "MIN";
    case AggFn::max: return "MAX";
  }
  return "?";
}

const char* value_type_name(ValueType t) {
  switch (t) {
    case ValueType::float64: return "float64";
    case ValueType::int64: return "int64";
    case ValueType::text: return "text";
    case ValueType::boolean: return "boolean";
  }
  return "?";
}

ValueType value_type_of(Kind kind) {
  switch (kind) {
    case Kind::float64: return ValueType::float64;
    case Kind::int64: return ValueType::int64;
    case Kind::text: return ValueType::text;
  }
  return ValueType::text;
}

ExprPtr ScalarExpr::column(std::string name, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::column_ref;
  e->name = std::move(name);
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::literal(double v, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::float_literal;
  e->float_value = v;
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::literal(int64_t v, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::int_literal;
  e->int_value = v;
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::literal(std::string v, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::text_literal;
  e->text_value = std::move(v);
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::binary(BinOp op, ExprPtr l, ExprPtr r, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::binary;
  e->bin_op = op;
  e->left = std::move(l);
  e->right = std::move(r);
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::unary(UnOp op, ExprPtr operand, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::unary;
  e->un_op = op;
  e->left = std::move(operand);
  e->pos = pos;
  return e;
}

ExprPtr ScalarExpr::aggregate(AggFn fn, ExprPtr arg, SourcePos pos) {
  auto e = std::make_shared<ScalarExpr>();
  e->node = Node::aggregate;
  e->agg_fn = fn;
  e->left = std::move(arg);
  e->pos = pos;
  return e;
}

bool ScalarExpr::equals(const ScalarExpr& o) const {
  if (node != o.node) return false;
  switch (node) {
    case Node::column_ref: return name == o.name;
    case Node::float_literal: return float_value == o.float_value;
    case Node::int_literal: return int_value == o.int_value;
    case Node::text_literal: return text_value == o.text_value;
    case Node::binary:
      return bin_op == o.bin_op && left->equals(*o.left) &&
             right->equals(*o.right);
    case Node::unary: return un_op == o.un_op && left->equals(*o.left);
    case Node::aggregate:
      if (agg_fn != o.agg_fn) return false;
      if (!left != !o.left) return false;
      return !left || left->equals(*o.left);
  }
  return false;
}

bool ScalarExpr::contains_aggregate() const {
  if (node == Node::aggregate) return true;
  if (left && left->contains_aggregate()) return true;
  if (right && right->contains_aggregate()) return true;
  return false;
}

std::string ScalarExpr::to_string() const {
  switch (node) {
    case Node::column_ref: return quote_identifier(name);
    case Node::float_literal: return format_double_roundtrip(float_value);
    case Node::int_literal: return std::to_string(int_value);
    case Node::text_literal: {
      std::string out = "'";
      for (char c : text_value) {
        if (c == '\'') out += '\'';
        out += c;
      }
      out += '\'';
      return out;
    }
    case Node::binary:
      return "(" + left->to_string() + " " + binop_symbol(bin_op) + " " +
             right->to_string() + ")";
    case Node::unary:
      return un_op == UnOp::negate ? "(-" + left->to_string() + ")"
                                   : "(NOT " + left->to_string() + ")";
    case Node::aggregate:
      return std::string(agg_fn_name(agg_fn)) + "(" +
             (agg_fn == AggFn::count_star ? "*" : left->to_string()) + ")";
  }
  return {};
}

ValueType infer_type(const ScalarExpr& expr, const Schema& schema) {
  switch (expr.node) {
    case ScalarExpr::Node::column_ref:
      return value_type_of(schema.at(schema.require(expr.name)).kind);
    case ScalarExpr::Node::float_literal: return ValueType::float64;
    case ScalarExpr::Node::int_literal: return ValueType::int64;
    case ScalarExpr::Node::text_literal: return ValueType::text;
    case ScalarExpr::Node::aggregate:
      throw RmaError(errc::type_error,
                     "aggregate function outside of a SELECT list", expr.pos);
    case ScalarExpr::Node::unary: {
      ValueType t = infer_type(*expr.left, schema);
      if (expr.un_op == UnOp::negate) {
        if (t != ValueType::float64 && t != ValueType::int64) {
          throw RmaError(errc::type_error, "unary minus needs a numeric operand",
                         expr.pos);
        }
        return t;
      }
      if (t != ValueType::boolean) {
        throw RmaError(errc::type_error, "NOT needs a boolean operand",
                       expr.pos);
      }
      return ValueType::boolean;
    }
    case ScalarExpr::Node::binary: break;
  }

  ValueType lt = infer_type(*expr.left, schema);
  ValueType rt = infer_type(*expr.right, schema);
  auto numeric = [](ValueType t) {
    return t == ValueType::float64 || t == ValueType::int64;
  };
  switch (expr.bin_op) {
    case BinOp::add:
    case BinOp::sub:
    case BinOp::mul:
      if (!numeric(lt) || !numeric(rt)) {
        throw RmaError(errc::type_error,
                       std::string("arithmetic needs numeric operands, got ") +
                           value_type_name(lt) + " and " + value_type_name(rt),
                       expr.pos);
      }
      return (lt == ValueType::float64 || rt == ValueType::float64)
                 ? ValueType::float64
                 : ValueType::int64;
    case BinOp::div:
      if (!numeric(lt) || !numeric(rt)) {
        throw RmaError(errc::type_error, "division needs numeric operands",
                       expr.pos);
      }
      return ValueType::float64;  // division is always float division
    case BinOp::eq:
    case BinOp::ne:
    case BinOp::lt:
    case BinOp::le:
    case BinOp::gt:
    case BinOp::ge:
      if (numeric(lt) && numeric(rt)) return ValueType::boolean;
      if (lt == ValueType::text && rt == ValueType::text) {
        return ValueType::boolean;
      }
      throw RmaError(errc::type_error,
                     std::string("cannot compare ") + value_type_name(lt) +
                         " with " + value_type_name(rt),
                     expr.pos);
    case BinOp::logic_and:
    case BinOp::logic_or:
      if (lt != ValueType::boolean || rt != ValueType::boolean) {
        throw RmaError(errc::type_error, "AND/OR need boolean operands",
                       expr.pos);
      }
      return ValueType::boolean;
  }
  return ValueType::boolean;
}

namespace {

// Intermediate vectorized value: one entry per row.
struct Vec {
  ValueType type;
  std::vector<double> f;
  std::vector<int64_t> i;
  std::vector<std::string> t;
  std::vector<char> b;

  size_t size() const {
    switch (type) {
      case ValueType::float64: return f.size();
      case ValueType::int64: return i.size();
      case ValueType::text: return t.size();
      case ValueType::boolean: return b.size();
    }
    return 0;
  }
};

std::vector<double> widened(const Vec& v) {
  if (v.type == ValueType::float64) return v.f;
  std::vector<double> out(v.i.size());
  for (size_t k = 0; k < v.i.size(); ++k) out[k] = static_cast<double>(v.i[k]);
  return out;
}

Vec eval(const ScalarExpr& expr, const Relation& r) {
  const size_t n = r.row_count();
  switch (expr.node) {
    case ScalarExpr::Node::column_ref: {
      const Column& c = r.column(expr.name);
      Vec v;
      v.type = value_type_of(c.kind());
      switch (c.kind()) {
        case Kind::float64: v.f = c.floats(); break;
        case Kind::int64: v.i = c.ints(); break;
        case Kind::text: v.t = c.texts(); break;
      }
      return v;
    }
    case ScalarExpr::Node::float_literal: {
      Vec v;
      v.type = ValueType::float64;
      v.f.assign(n, expr.float_value);
      return v;
    }
    case ScalarExpr::Node::int_literal: {
      Vec v;
      v.type = ValueType::int64;
      v.i.assign(n, expr.int_value);
      return v;
    }
    case ScalarExpr::Node::text_literal: {
      Vec v;
      v.type = ValueType::text;
      v.t.assign(n, expr.text_value);
      return v;
    }
    case ScalarExpr::Node::aggregate:
      throw RmaError(errc::type_error,
                     "aggregate function outside of a SELECT list", expr.pos);
    case ScalarExpr::Node::unary: {
      Vec a = eval(*expr.left, r);
      if (expr.un_op == UnOp::logic_not) {
        for (char& x : a.b) x = !x;
        return a;
      }
      if (a.type == ValueType::int64) {
        for (int64_t& x : a.i) x = -x;
      } else {
        for (double& x : a.f) x = -x;
      }
      return a;
    }
    case ScalarExpr::Node::binary: break;
  }

  Vec a = eval(*expr.left, r);
  Vec b = eval(*expr.right, r);
  Vec out;
  switch (expr.bin_op) {
    case BinOp::add:
    case BinOp::sub:
    case BinOp::mul: {
      if (a.type == ValueType::int64 && b.type == ValueType::int64) {
        out.type = ValueType::int64;
        out.i.resize(n);
        for (size_t k = 0; k < n; ++k) {
          switch (expr.bin_op) {
            case BinOp::add: out.i[k] = a.i[k] + b.i[k]; break;
            case BinOp::sub: out.i[k] = a.i[k] - b.i[k]; break;
            default: out.i[k] = a.i[k] * b.i[k]; break;
          }
        }
        return out;
      }
      std::vector<double> x = widened(a), y = widened(b);
      out.type = ValueType::float64;
      out.f.resize(n);
      for (size_t k = 0; k < n; ++k) {
        switch (expr.bin_op) {
          case BinOp::add: out.f[k] = x[k] + y[k]; break;
          case BinOp::sub: out.f[k] = x[k] - y[k]; break;
          default: out.f[k] = x[k] * y[k]; break;
        }
      }
      return out;
    }
    case BinOp::div: {
      std::vector<double> x = widened(a), y = widened(b);
      out.type = ValueType::float64;
      out.f.resize(n);
      for (size_t k = 0; k < n; ++k) {
        if (y[k] == 0.0) {
          throw RmaError(errc::division_by_zero, "division by zero", expr.pos);
        }
        out.f[k] = x[k] / y[k];
      }
      return out;
    }
    case BinOp::eq:
    case BinOp::ne:
    case BinOp::lt:
    case BinOp::le:
    case BinOp::gt:
    case BinOp::ge: {
      out.type = ValueType::boolean;
      out.b.resize(n);
      auto emit = [&](auto cmp) {
        for (size_t k = 0; k < n; ++k) {
          int c = cmp(k);
          switch (expr.bin_op) {
            case BinOp::eq: out.b[k] = c == 0; break;
            case BinOp::ne: out.b[k] = c != 0; break;
            case BinOp::lt: out.b[k] = c < 0; break;
            case BinOp::le: out.b[k] = c <= 0; break;
            case BinOp::gt: out.b[k] = c > 0; break;
            default: out.b[k] = c >= 0; break;
          }
        }
      };
      if (a.type == ValueType::text) {
        emit([&](size_t k) { return a.t[k].compare(b.t[k]); });
      } else if (a.type == ValueType::int64 && b.type == ValueType::int64) {
        emit([&](size_t k) {
          return a.i[k] < b.i[k] ? -1 : (a.i[k] > b.i[k] ? 1 : 0);
        });
      } else {
        std::vector<double> x = widened(a), y = widened(b);
        emit([&](size_t k) { return x[k] < y[k] ? -1 : (x[k] > y[k] ? 1 : 0); });
      }
      return out;
    }
    case BinOp::logic_and:
    case BinOp::logic_or: {
      out.type = ValueType::boolean;
      out.b.resize(n);
      for (size_t k = 0; k < n; ++k) {
        out.b[k] = expr.bin_op == BinOp::logic_and ? (a.b[k] && b.b[k])
                                                   : (a.b[k] || b.b[k]);
      }
      return out;
    }
  }
  return out;
}

}  // namespace

Column eval_to_column(const ScalarExpr& expr, const Relation& r) {
  ValueType t = infer_type(expr, r.schema());
  if (t == ValueType::boolean) {
    throw RmaError(errc::type_error,
                   "boolean expression cannot form a column", expr.pos);
  }
  Vec v = eval(expr, r);
  switch (v.type) {
    case ValueType::float64: return Column::of_floats(std::move(v.f));
    case ValueType::int64: return Column::of_ints(std::move(v.i));
    case ValueType::text: return Column::of_texts(std::move(v.t));
    case ValueType::boolean: break;
  }
  throw RmaError(errc::type_error, "unexpected boolean value", expr.pos);
}

std::vector<char> eval_predicate(const ScalarExpr& expr, const Relation& r) {
  if (infer_type(expr, r.schema()) != ValueType::boolean) {
    throw RmaError(errc::type_error, "predicate must be boolean", expr.pos);
  }
  return eval(expr, r).b;
}

}  // namespace rma
