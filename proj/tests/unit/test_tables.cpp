#include "test_util.hpp"

using namespace l2lab;

TEST(Tables, CellEmbedding) {
  auto ctx = PrecisionContext::with_digits(30);
  PrecisionScope s(ctx);
  TableCell c{QuadraticPower(QuadraticNumber(Rational(105, 8), Rational(51, 8), 7)), Rational(1, 2)};
  Real want = (Real(105) + sqrt(Real(7)) * 51) / (sqrt(Real(2)) * 8);
  EXPECT_LT(abs(embed_cell(c, ctx) - want), pow10(-30));
}

TEST(Tables, AllCellsMatchAtTwentyDigits) {
  Corpus c = default_corpus();
  auto ctx = PrecisionContext::with_digits(20);
  PrecisionScope s(ctx);
  for (const auto& t : c.tables) {
    TableCheck chk = reconstruct_table(t, ctx);
    EXPECT_TRUE(chk.pass) << "table " << t.number;
    for (const auto& r : chk.rows) {
      for (const CellCheck* cell : {&r.c1, &r.c2, &r.m}) {
        EXPECT_TRUE(cell->pass) << "table " << t.number << " " << r.point << " residual " << to_sci(cell->residual);
        EXPECT_LT(cell->residual, table_tolerance(20));
      }
    }
  }
}

TEST(Tables, AlteredCellIsCaught) {
  Corpus c = default_corpus();
  Table t = *c.find_table(2);
  TableRow& row = t.rows.at(0);
  row.m.value.factor = row.m.value.factor * QuadraticNumber(Rational(1001, 1000));
  auto ctx = PrecisionContext::with_digits(20);
  TableCheck chk = reconstruct_table(t, ctx);
  EXPECT_FALSE(chk.pass);
  EXPECT_FALSE(chk.rows.at(0).m.pass);
  EXPECT_TRUE(chk.rows.at(0).c1.pass);
}
