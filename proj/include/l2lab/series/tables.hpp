#pragma once

#include <string>
#include <vector>

#include "l2lab/modular/cm_point.hpp"
#include "l2lab/series/sigma_gr.hpp"

namespace l2lab {

// exact table cell: value * sqrt(radicand)
struct TableCell {
  QuadraticPower value;
  Rational radicand{1};
};

// One CM point with the exact (1 - 2 alpha)/Im z, R/Im z and m.
struct TableRow {
  std::string point_text;
  CMPoint point{1, 0, 1};
  TableCell c1, c2, m;
};

struct Table {
  int number = 0;
  int level = 0;
  std::vector<TableRow> rows;
};

struct CellCheck {
  Real exact;
  Complex computed;
  Real residual;  // |computed - exact| / max(1, |exact|)
  bool pass = false;
};

struct RowCheck {
  std::string point;
  CellCheck c1, c2, m;
  bool pass = false;
};

struct TableCheck {
  int number = 0;
  int level = 0;
  std::vector<RowCheck> rows;
  bool pass = false;
};

inline Real table_tolerance(int digits) { return pow10(-(digits - 10)); }

inline Real embed_cell(const TableCell& c, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real v = embed_quadratic(c.value, ctx);
  if (c.radicand != 1) v *= sqrt(Real(c.radicand));
  return v;
}

inline RowCheck reconstruct_row(const TableRow& row, int level, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  HalfPlanePoint z = row.point.point(ctx);
  SeriesConstants k = series_constants_from_cm(z, level, ctx);
  const Real& y = z.im();
  const Real tol = table_tolerance(ctx.digits);
  auto check = [&](const TableCell& cell, const Complex& value) {
    CellCheck c;
    c.exact = embed_cell(cell, ctx);
    c.computed = value;
    c.residual = abs(value - Complex(c.exact)) / max(Real(1), abs(c.exact));
    c.pass = c.residual < tol;
    return c;
  };
  RowCheck r;
  r.point = row.point_text;
  r.c1 = check(row.c1, k.c1 / (y * 2));
  r.c2 = check(row.c2, k.c2 / y);
  r.m = check(row.m, k.m);
  r.pass = r.c1.pass && r.c2.pass && r.m.pass;
  return r;
}

inline TableCheck reconstruct_table(const Table& t, const PrecisionContext& ctx) {
  TableCheck out;
  out.number = t.number;
  out.level = t.level;
  out.pass = true;
  for (const auto& row : t.rows) {
    out.rows.push_back(reconstruct_row(row, t.level, ctx));
    out.pass = out.pass && out.rows.back().pass;
  }
  return out;
}

}  // namespace l2lab
