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

#include "rma/bridge.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace rma {

namespace {

constexpr std::array<std::string_view, kOpCodeCount> kOpNames = {
    "emu", "mmu", "opd", "cpd", "add", "sub", "tra", "sol", "inv", "evc",
    "evl", "qqr", "rqr", "dsv", "usv", "vsv", "det", "rnk", "chf",
};

}  // namespace

std::string_view opcode_name(OpCode op) {
  return kOpNames[static_cast<size_t>(op)];
}

std::optional<OpCode> opcode_from_name(std::string_view name) {
  if (name.size() != 3) return std::nullopt;
  std::array<char, 3> lower;
  for (size_t i = 0; i < 3; ++i) {
    lower[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[i])));
  }
  std::string_view needle(lower.data(), 3);
  for (size_t i = 0; i < kOpNames.size(); ++i) {
    if (kOpNames[i] == needle) return static_cast<OpCode>(i);
  }
  return std::nullopt;
}

bool opcode_is_binary(OpCode op) {
  switch (op) {
    case OpCode::emu:
    case OpCode::mmu:
    case OpCode::opd:
    case OpCode::cpd:
    case OpCode::add:
    case OpCode::sub:
    case OpCode::sol:
      return true;
    default:
      return false;
  }
}

ShapeType shape_type_of(OpCode op) {
  switch (op) {
    case OpCode::usv: return {Extent::first_rows, Extent::first_rows};
    case OpCode::opd: return {Extent::first_rows, Extent::second_rows};
    case OpCode::inv:
    case OpCode::evc:
    case OpCode::chf:
    case OpCode::qqr: return {Extent::first_rows, Extent::first_cols};
    case OpCode::mmu: return {Extent::first_rows, Extent::second_cols};
    case OpCode::evl: return {Extent::first_rows, Extent::one};
    case OpCode::tra: return {Extent::first_cols, Extent::first_rows};
    case OpCode::rqr:
    case OpCode::dsv:
    case OpCode::vsv: return {Extent::first_cols, Extent::first_cols};
    case OpCode::cpd:
    case OpCode::sol: return {Extent::first_cols, Extent::second_cols};
    case OpCode::emu:
    case OpCode::add:
    case OpCode::sub: return {Extent::both_rows, Extent::both_cols};
    case OpCode::det:
    case OpCode::rnk: return {Extent::one, Extent::one};
  }
  throw RmaError(errc::bad_argument, "unknown operation code");
}

std::vector<std::string> application_schema(
    const Schema& schema, std::span<const std::string> order_schema) {
  std::unordered_set<std::string_view> in_order;
  for (const std::string& name : order_schema) {
    schema.require(name);
    if (!in_order.insert(name).second) {
      throw RmaError(errc::duplicate_attribute,
                     "attribute '" + name + "' listed twice in order schema");
    }
  }
  std::vector<std::string> app;
  for (const Attribute& a : schema.attrs()) {
    if (!in_order.count(a.name)) app.push_back(a.name);
  }
  return app;
}

namespace {

// One argument relation split into order and application parts, rows aligned
// between order_cols and the application matrix.
struct PreparedInput {
  const Relation* rel = nullptr;
  std::vector<size_t> order_idx;
  std::vector<std::string> app_names;
  std::vector<size_t> app_idx;
  std::vector<Column> order_cols;
  Matrix app;
};

void check_split(const Relation& r, std::span<const std::string> order,
                 PreparedInput& out) {
  if (order.empty()) {
    throw RmaError(errc::empty_order_schema, "order schema must not be empty");
  }
  out.app_names = application_schema(r.schema(), order);
  for (const std::string& name : order) {
    out.order_idx.push_back(r.schema().require(name));
  }
  if (out.app_names.empty()) {
    throw RmaError(errc::empty_application_schema,
                   "application schema must not be empty");
  }
  for (const std::string& name : out.app_names) {
    size_t i = r.schema().require(name);
    if (!is_numeric(r.schema().at(i).kind)) {
      throw RmaError(errc::non_numeric_application,
                     "application attribute '" + name + "' is not numeric");
    }
    out.app_idx.push_back(i);
  }
  if (r.row_count() == 0) {
    throw RmaError(errc::empty_input,
                   "matrix operations need at least one row");
  }
}

void key_violation(std::span<const std::string> order) {
  std::string names;
  for (const std::string& n : order) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  throw RmaError(errc::key_violation,
                 "order schema (" + names + ") is not a key: duplicate order tuple");
}

int compare_order_tuple(const Relation& r, const std::vector<size_t>& order_idx,
                        size_t i, size_t j) {
  for (size_t c : order_idx) {
    int cmp = Column::compare(r.column(c), i, r.column(c), j);
    if (cmp != 0) return cmp;
  }
  return 0;
}

void check_key_sorted(const Relation& r, const PreparedInput& in,
                      const SortPermutation& perm,
                      std::span<const std::string> order) {
  for (size_t k = 1; k < perm.size(); ++k) {
    if (compare_order_tuple(r, in.order_idx, perm[k - 1], perm[k]) == 0) {
      key_violation(order);
    }
  }
}

void check_key_hashed(const Relation& r, const PreparedInput& in,
                      std::span<const std::string> order) {
  const size_t n = r.row_count();
  std::vector<size_t> row_hash(n, 1469598103934665603ULL);
  for (size_t c : in.order_idx) {
    const Column& col = r.column(c);
    switch (col.kind()) {
      case Kind::float64: {
        const auto& v = col.floats();
        std::hash<double> h;
        for (size_t i = 0; i < n; ++i) {
          row_hash[i] = row_hash[i] * 1099511628211ULL +
                        h(v[i] == 0.0 ? 0.0 : v[i]);
        }
        break;
      }
      case Kind::int64: {
        const auto& v = col.ints();
        std::hash<int64_t> h;
        for (size_t i = 0; i < n; ++i) {
          row_hash[i] = row_hash[i] * 1099511628211ULL + h(v[i]);
        }
        break;
      }
      case Kind::text: {
        const auto& v = col.texts();
        std::hash<std::string> h;
        for (size_t i = 0; i < n; ++i) {
          row_hash[i] = row_hash[i] * 1099511628211ULL + h(v[i]);
        }
        break;
      }
    }
  }
  struct Hash {
    const std::vector<size_t>* hashes;
    size_t operator()(size_t row) const { return (*hashes)[row]; }
  };
  struct Eq {
    const Relation* rel;
    const std::vector<size_t>* cols;
    bool operator()(size_t a, size_t b) const {
      for (size_t c : *cols) {
        if (!Column::values_equal(rel->column(c), a, rel->column(c), b)) {
          return false;
        }
      }
      return true;
    }
  };
  std::unordered_set<size_t, Hash, Eq> seen(16, Hash{&row_hash},
                                            Eq{&r, &in.order_idx});
  seen.reserve(n);
  for (size_t row = 0; row < n; ++row) {
    if (!seen.insert(row).second) key_violation(order);
  }
}

Matrix gather_application(const Relation& r, const std::vector<size_t>& app_idx,
                          const std::vector<size_t>* row_map) {
  const size_t rows = r.row_count();
  Matrix m(rows, app_idx.size());
  for (size_t c = 0; c < app_idx.size(); ++c) {
    const Column& col = r.column(app_idx[c]);
    if (col.kind() == Kind::float64) {
      const auto& v = col.floats();
      for (size_t k = 0; k < rows; ++k) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) =
            v[row_map ? (*row_map)[k] : k];
      }
    } else {
      const auto& v = col.ints();
      for (size_t k = 0; k < rows; ++k) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) =
            static_cast<double>(v[row_map ? (*row_map)[k] : k]);
      }
    }
  }
  return m;
}

PreparedInput prepare_sorted(const RmaInput& input) {
  PreparedInput out;
  out.rel = &input.relation;
  check_split(input.relation, input.order_schema, out);
  SortPermutation perm = sort_permutation(input.relation, input.order_schema);
  check_key_sorted(input.relation, out, perm, input.order_schema);
  for (size_t c : out.order_idx) {
    out.order_cols.push_back(apply_permutation(input.relation.column(c), perm));
  }
  out.app = gather_application(input.relation, out.app_idx, &perm.indices());
  return out;
}

PreparedInput prepare_unsorted(const RmaInput& input) {
  PreparedInput out;
  out.rel = &input.relation;
  check_split(input.relation, input.order_schema, out);
  check_key_hashed(input.relation, out, input.order_schema);
  for (size_t c : out.order_idx) {
    out.order_cols.push_back(input.relation.column(c));
  }
  out.app = gather_application(input.relation, out.app_idx, nullptr);
  return out;
}

std::string render_order_value(const Column& sorted_col, size_t k) {
  std::string name = sorted_col.render(k);
  if (name.empty()) {
    throw RmaError(errc::empty_cast,
                   "order value renders to an empty attribute name");
  }
  return name;
}

// Attribute names from the single sorted order column (the column cast).
std::vector<std::string> cast_names(const PreparedInput& in) {
  const Column& col = in.order_cols[0];
  std::vector<std::string> names;
  names.reserve(col.size());
  for (size_t k = 0; k < col.size(); ++k) {
    names.push_back(render_order_value(col, k));
  }
  return names;
}

}  // namespace

Matrix reduce(const Relation& r, std::span<const std::string> order_schema) {
  RmaInput input{r, {order_schema.begin(), order_schema.end()}};
  return prepare_sorted(input).app;
}

std::vector<Column> sorted_order_part(const Relation& r,
                                      std::span<const std::string> order_schema) {
  RmaInput input{r, {order_schema.begin(), order_schema.end()}};
  return prepare_sorted(input).order_cols;
}

Relation relation_constructor(Schema schema, std::vector<Column> columns,
                              std::optional<std::string> name) {
  Relation rel(std::move(schema), std::move(columns), std::move(name));
  std::vector<size_t> idx(rel.row_count());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    return compare_rows(rel, i, rel, j) < 0;
  });
  for (size_t k = 1; k < idx.size(); ++k) {
    if (compare_rows(rel, idx[k - 1], rel, idx[k]) == 0) {
      throw RmaError(errc::duplicate_rows,
                     "result rows are not unique");
    }
  }
  return rel;
}

std::vector<std::string> column_cast(const Relation& r, const std::string& attr) {
  size_t idx = r.schema().require(attr);
  const Column& col = r.column(idx);
  std::vector<size_t> rows(r.row_count());
  std::iota(rows.begin(), rows.end(), size_t{0});
  std::stable_sort(rows.begin(), rows.end(), [&](size_t i, size_t j) {
    return Column::compare(col, i, col, j) < 0;
  });
  for (size_t k = 1; k < rows.size(); ++k) {
    if (Column::compare(col, rows[k - 1], col, rows[k]) == 0) {
      throw RmaError(errc::key_violation,
                     "attribute '" + attr + "' is not a key: duplicate value");
    }
  }
  std::vector<std::string> names;
  names.reserve(rows.size());
  std::unordered_set<std::string_view> seen;
  for (size_t row : rows) {
    std::string name = col.render(row);
    if (name.empty()) {
      throw RmaError(errc::empty_cast,
                     "order value renders to an empty attribute name");
    }
    names.push_back(std::move(name));
  }
  for (const std::string& n : names) {
    if (!seen.insert(n).second) {
      throw RmaError(errc::duplicate_attribute,
                     "column cast produced duplicate name '" + n + "'");
    }
  }
  return names;
}

Column schema_cast(std::span<const std::string> attrs) {
  if (attrs.empty()) {
    throw RmaError(errc::empty_cast, "schema cast of an empty attribute list");
  }
  return Column::of_texts({attrs.begin(), attrs.end()});
}

namespace {

void check_arity(const RmaCall& call) {
  const bool binary = opcode_is_binary(call.op);
  if (binary && !call.second) {
    throw RmaError(errc::bad_argument,
                   std::string(opcode_name(call.op)) +
                       " takes two argument relations");
  }
  if (!binary && call.second) {
    throw RmaError(errc::bad_argument,
                   std::string(opcode_name(call.op)) +
                       " takes one argument relation");
  }
}

void check_cardinalities(const RmaCall& call) {
  if ((call.op == OpCode::tra || call.op == OpCode::usv) &&
      call.first.order_schema.size() != 1) {
    throw RmaError(errc::order_schema_cardinality,
                   std::string("the cardinality of the order schema of ") +
                       std::string(opcode_name(call.op)) + " must be one");
  }
  if (call.op == OpCode::opd && call.second &&
      call.second->order_schema.size() != 1) {
    throw RmaError(errc::order_schema_cardinality,
                   "the cardinality of the order schema of the second "
                   "argument of opd must be one");
  }
}

bool is_pointwise(OpCode op) {
  return op == OpCode::add || op == OpCode::sub || op == OpCode::emu;
}

void check_pointwise_compat(const RmaCall& call) {
  if (!is_pointwise(call.op)) return;
  const auto& u = call.first.order_schema;
  const auto& v = call.second->order_schema;
  for (const std::string& name : u) {
    if (std::find(v.begin(), v.end(), name) != v.end()) {
      throw RmaError(errc::order_schemas_overlap,
                     "order schemas of element-wise operations must be "
                     "name-disjoint; '" + name + "' appears in both");
    }
  }
  const auto app_u = application_schema(call.first.relation.schema(), u);
  const auto app_v = application_schema(call.second->relation.schema(), v);
  if (app_u.size() != app_v.size()) {
    throw RmaError(errc::union_incompatible,
                   "application schemas are not union compatible: " +
                       std::to_string(app_u.size()) + " vs " +
                       std::to_string(app_v.size()) + " attributes");
  }
}

Matrix run_kernel(const RmaCall& call, const PreparedInput& a,
                  const PreparedInput* b) {
  using namespace kernels;
  switch (call.op) {
    case OpCode::add: return elementwise(ElementwiseOp::add, a.app, b->app);
    case OpCode::sub: return elementwise(ElementwiseOp::sub, a.app, b->app);
    case OpCode::emu: return elementwise(ElementwiseOp::mul, a.app, b->app);
    case OpCode::mmu: return product(ProductOp::matrix, a.app, b->app);
    case OpCode::cpd: return product(ProductOp::cross, a.app, b->app);
    case OpCode::opd: return product(ProductOp::outer, a.app, b->app);
    case OpCode::tra: return kernels::transpose(a.app);
    case OpCode::sol:
      if (b->app.cols() != 1) {
        throw RmaError(errc::dimension_mismatch,
                       "sol needs a single application attribute on the "
                       "second argument, got " +
                           std::to_string(b->app.cols()));
      }
      return solve(a.app, b->app);
    case OpCode::inv: return gauss_jordan_inverse(a.app);
    case OpCode::evc: return eigen_sym(a.app).vectors;
    case OpCode::evl: return eigen_sym(a.app).values;
    case OpCode::qqr: return qr(a.app).q;
    case OpCode::rqr: return qr(a.app).r;
    case OpCode::dsv: return svd(a.app).d;
    case OpCode::usv: return svd(a.app).u;
    case OpCode::vsv: return svd(a.app).v;
    case OpCode::chf: return cholesky(a.app);
    case OpCode::det: {
      Matrix f(1, 1);
      f(0, 0) = determinant(a.app);
      return f;
    }
    case OpCode::rnk: {
      Matrix f(1, 1);
      f(0, 0) = static_cast<double>(rank(a.app));
      return f;
    }
  }
  throw RmaError(errc::bad_argument, "unknown operation code");
}

}  // namespace

std::vector<std::string> result_context_attrs(const RmaCall& call) {
  switch (shape_type_of(call.op).rows) {
    case Extent::first_rows:
      return call.first.order_schema;
    case Extent::both_rows: {
      std::vector<std::string> names = call.first.order_schema;
      names.insert(names.end(), call.second->order_schema.begin(),
                   call.second->order_schema.end());
      return names;
    }
    default:
      return {call.context_name};
  }
}

Relation apply_rma(const RmaCall& call, SortPolicy policy) {
  check_arity(call);
  check_cardinalities(call);
  check_pointwise_compat(call);

  const ShapeType shape = shape_type_of(call.op);
  if (shape.rows == Extent::one && !call.first.relation.name()) {
    throw RmaError(errc::unnamed_relation,
                   std::string(opcode_name(call.op)) +
                       " needs a named argument relation (add an alias)");
  }

  PreparedInput a;
  PreparedInput b;
  const bool binary = opcode_is_binary(call.op);

  if (policy == SortPolicy::avoiding && call.op == OpCode::qqr) {
    // Q rows pair positionally with the stored order-part rows; no sort.
    a = prepare_unsorted(call.first);
  } else if (policy == SortPolicy::avoiding && is_pointwise(call.op)) {
    // Relative sorting: the first argument keeps its stored order and only
    // the second argument's rows are aligned to it.
    a.rel = &call.first.relation;
    check_split(call.first.relation, call.first.order_schema, a);
    SortPermutation perm_a =
        sort_permutation(call.first.relation, call.first.order_schema);
    check_key_sorted(call.first.relation, a, perm_a, call.first.order_schema);

    b.rel = &call.second->relation;
    check_split(call.second->relation, call.second->order_schema, b);
    SortPermutation perm_b =
        sort_permutation(call.second->relation, call.second->order_schema);
    check_key_sorted(call.second->relation, b, perm_b,
                     call.second->order_schema);

    if (call.first.relation.row_count() != call.second->relation.row_count()) {
      throw RmaError(errc::dimension_mismatch,
                     "element-wise operations need equal row counts, got " +
                         std::to_string(call.first.relation.row_count()) +
                         " and " +
                         std::to_string(call.second->relation.row_count()));
    }
    std::vector<size_t> rank_a = perm_a.inverse();
    std::vector<size_t> align(rank_a.size());
    for (size_t i = 0; i < align.size(); ++i) align[i] = perm_b[rank_a[i]];
    SortPermutation align_perm(std::move(align));

    for (size_t c : a.order_idx) {
      a.order_cols.push_back(call.first.relation.column(c));
    }
    a.app = gather_application(call.first.relation, a.app_idx, nullptr);
    for (size_t c : b.order_idx) {
      b.order_cols.push_back(
          apply_permutation(call.second->relation.column(c), align_perm));
    }
    b.app = gather_application(call.second->relation, b.app_idx,
                               &align_perm.indices());
  } else {
    a = prepare_sorted(call.first);
    if (binary) b = prepare_sorted(*call.second);
  }

  Matrix base = run_kernel(call, a, binary ? &b : nullptr);
  if (!base.allFinite()) {
    throw RmaError(errc::non_finite_value,
                   std::string(opcode_name(call.op)) +
                       " produced non-finite values");
  }

  // Morph the row context and assemble the result schema per shape type.
  std::vector<Attribute> attrs;
  std::vector<Column> cols;

  switch (shape.rows) {
    case Extent::first_rows:
      for (size_t k = 0; k < a.order_idx.size(); ++k) {
        attrs.push_back(a.rel->schema().at(a.order_idx[k]));
        cols.push_back(a.order_cols[k]);
      }
      break;
    case Extent::both_rows:
      for (size_t k = 0; k < a.order_idx.size(); ++k) {
        attrs.push_back(a.rel->schema().at(a.order_idx[k]));
        cols.push_back(a.order_cols[k]);
      }
      for (size_t k = 0; k < b.order_idx.size(); ++k) {
        attrs.push_back(b.rel->schema().at(b.order_idx[k]));
        cols.push_back(b.order_cols[k]);
      }
      break;
    case Extent::first_cols:
      attrs.push_back({call.context_name, Kind::text});
      cols.push_back(schema_cast(a.app_names));
      break;
    case Extent::one: {
      if (!a.rel->name()) {
        throw RmaError(errc::unnamed_relation,
                       std::string(opcode_name(call.op)) +
                           " needs a named argument relation (add an alias)");
      }
      attrs.push_back({call.context_name, Kind::text});
      cols.push_back(Column::of_texts({*a.rel->name()}));
      break;
    }
    default:
      throw RmaError(errc::bad_argument, "unexpected row extent");
  }

  std::vector<std::string> app_attr_names;
  switch (shape.cols) {
    case Extent::first_rows: app_attr_names = cast_names(a); break;
    case Extent::second_rows: app_attr_names = cast_names(b); break;
    case Extent::first_cols:
    case Extent::both_cols: app_attr_names = a.app_names; break;
    case Extent::second_cols: app_attr_names = b.app_names; break;
    case Extent::one:
      app_attr_names = {std::string(opcode_name(call.op))};
      break;
    default:
      throw RmaError(errc::bad_argument, "unexpected column extent");
  }

  if (static_cast<Eigen::Index>(app_attr_names.size()) != base.cols()) {
    throw RmaError(errc::dimension_mismatch,
                   "base result width does not match the result schema");
  }
  const size_t context_rows = cols.empty() ? size_t{0} : cols[0].size();
  if (static_cast<Eigen::Index>(context_rows) != base.rows()) {
    throw RmaError(errc::dimension_mismatch,
                   "base result height does not match the row context");
  }

  std::unordered_set<std::string_view> seen;
  for (const Attribute& at : attrs) seen.insert(at.name);
  for (const std::string& name : app_attr_names) {
    if (!seen.insert(name).second) {
      throw RmaError(errc::name_collision,
                     "result schema name collision on '" + name + "'");
    }
  }

  for (size_t c = 0; c < app_attr_names.size(); ++c) {
    std::vector<double> values(base.rows());
    for (Eigen::Index i = 0; i < base.rows(); ++i) {
      values[static_cast<size_t>(i)] = base(i, static_cast<Eigen::Index>(c));
    }
    attrs.push_back({app_attr_names[c], Kind::float64});
    cols.push_back(Column::of_floats(std::move(values)));
  }

  // Rows are unique by construction: the row context is a verified key
  // (r-kinds), distinct attribute names (c-kinds), or a single row, so the
  // constructor's duplicate scan is not repeated here.
  return Relation(Schema(std::move(attrs)), std::move(cols));
}

Origins origins_of(const RmaCall& call) {
  check_arity(call);
  check_cardinalities(call);
  const ShapeType shape = shape_type_of(call.op);

  Origins out;

  switch (shape.rows) {
    case Extent::first_rows: {
      out.row_origin =
          project_columns(call.first.relation, call.first.order_schema);
      break;
    }
    case Extent::both_rows: {
      // Both order parts, rank-paired the way the merged result pairs them.
      std::vector<Attribute> attrs;
      std::vector<Column> cols;
      auto add_part = [&](const RmaInput& input) {
        std::vector<Column> part =
            sorted_order_part(input.relation, input.order_schema);
        for (size_t k = 0; k < input.order_schema.size(); ++k) {
          size_t idx = input.relation.schema().require(input.order_schema[k]);
          attrs.push_back(input.relation.schema().at(idx));
          cols.push_back(part[k]);
        }
      };
      add_part(call.first);
      add_part(*call.second);
      out.row_origin = Relation(Schema(std::move(attrs)), std::move(cols));
      break;
    }
    case Extent::first_cols: {
      auto app = application_schema(call.first.relation.schema(),
                                    call.first.order_schema);
      out.row_origin = Relation(Schema({{call.context_name, Kind::text}}),
                                {schema_cast(app)});
      break;
    }
    case Extent::one: {
      if (!call.first.relation.name()) {
        throw RmaError(errc::unnamed_relation,
                       std::string(opcode_name(call.op)) +
                           " needs a named argument relation (add an alias)");
      }
      out.row_origin =
          Relation(Schema({{call.context_name, Kind::text}}),
                   {Column::of_texts({*call.first.relation.name()})});
      break;
    }
    default:
      throw RmaError(errc::bad_argument, "unexpected row extent");
  }

  switch (shape.cols) {
    case Extent::first_rows:
      out.column_origin =
          column_cast(call.first.relation, call.first.order_schema[0]);
      break;
    case Extent::second_rows:
      out.column_origin =
          column_cast(call.second->relation, call.second->order_schema[0]);
      break;
    case Extent::first_cols:
    case Extent::both_cols:
      out.column_origin = application_schema(call.first.relation.schema(),
                                             call.first.order_schema);
      break;
    case Extent::second_cols:
      out.column_origin = application_schema(call.second->relation.schema(),
                                             call.second->order_schema);
      break;
    case Extent::one:
      out.column_origin = {std::string(opcode_name(call.op))};
      break;
    default:
      throw RmaError(errc::bad_argument, "unexpected column extent");
  }

  return out;
}

}  // namespace rma
