#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "l2lab/identities/constants.hpp"
#include "l2lab/lfunctions.hpp"
#include "l2lab/modular/cm_point.hpp"
#include "l2lab/series/fibonacci.hpp"
#include "l2lab/series/tables.hpp"
#include "l2lab/series/updown.hpp"

#if __has_include("l2lab/default_corpus_data.hpp")
#include "l2lab/default_corpus_data.hpp"
#define L2LAB_HAS_EMBEDDED_CORPUS 1
#endif

namespace l2lab {

using Json = nlohmann::json;

// coeff times a product of named constants, e.g. "PI2*L(-7)"
struct ConstantTerm {
  QuadraticNumber coeff{1};
  std::string constant;
};

struct LhsTerm {
  std::variant<UpsideDownSeries, FibLucasSeries, ConstantTerm> body;
  std::optional<QuadraticNumber> scale;
};

struct RhsTerm {
  QuadraticNumber coeff{1};
  std::string constant;
};

struct IdentityRecord {
  std::string id;
  std::string source;
  std::vector<LhsTerm> lhs;
  std::vector<RhsTerm> rhs;
};

enum class KroneckerKind { KRONECKER, DIRICHLET };

// KRONECKER: -twist d1 d2 L_{d1}(2) L_{d2}(2) / (4 zeta(4))
// DIRICHLET: -twist D zeta(2) L_{D0}(2) / (4 zeta(4)), D = d1 d2, D0 its fundamental part
struct KroneckerTerm {
  KroneckerKind kind = KroneckerKind::KRONECKER;
  Rational twist{1};
  std::int64_t d1 = 1, d2 = 1;
};

struct KroneckerInstance {
  std::string id;
  std::string source;
  std::vector<std::string> point_text;
  std::vector<CMPoint> points;
  std::vector<int> signs;
  std::vector<KroneckerTerm> rhs;
};

struct Corpus {
  std::vector<IdentityRecord> identities;
  std::vector<KroneckerInstance> kronecker;
  std::vector<Table> tables;

  const IdentityRecord* find_identity(std::string_view id) const {
    for (const auto& r : identities)
      if (r.id == id) return &r;
    return nullptr;
  }
  const KroneckerInstance* find_kronecker(std::string_view id) const {
    for (const auto& r : kronecker)
      if (r.id == id) return &r;
    return nullptr;
  }
  const Table* find_table(int n) const {
    for (const auto& t : tables)
      if (t.number == n) return &t;
    return nullptr;
  }
};

namespace detail {

// Walks a JSON document keeping the field path for diagnostics.
class CorpusReader {
 public:
  [[noreturn]] static void fail(const std::string& path, const std::string& msg) {
    throw CorpusError("corpus: " + path + ": " + msg);
  }

  static const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  static std::string string_at(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  static std::int64_t int_at(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
  }

  static BigInt bigint_at(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
      std::string s = j.get<std::string>();
      BigInt v;
      if (s.empty() || v.set_str(s, 10) != 0) fail(path, "'" + s + "' is not an integer");
      return v;
    }
    fail(path, "expected an integer or a decimal string");
  }

  static Rational rational_at(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [numerator, denominator]");
    BigInt n = bigint_at(j[0], path + "[0]");
    BigInt d = bigint_at(j[1], path + "[1]");
    if (d == 0) fail(path, "zero denominator");
    return make_rational(n, d);
  }

  static QuadraticNumber quadratic_at(const Json& j, const std::string& path) {
    Rational a = rational_at(field(j, path, "a"), path + ".a");
    Rational b = rational_at(field(j, path, "b"), path + ".b");
    std::int64_t D = int_at(field(j, path, "D"), path + ".D");
    if (D < 1 || !is_squarefree(static_cast<long>(D))) fail(path + ".D", "must be a squarefree positive integer");
    return QuadraticNumber(a, b, static_cast<long>(D));
  }

  static QuadraticPower power_at(const Json& j, const std::string& path) {
    if (j.is_object() && j.contains("base")) {
      QuadraticNumber f = quadratic_at(field(j, path, "factor"), path + ".factor");
      QuadraticNumber b = quadratic_at(field(j, path, "base"), path + ".base");
      std::int64_t e = int_at(field(j, path, "exp"), path + ".exp");
      if (e < 1 || e > 64) fail(path + ".exp", "must be in 1..64");
      return QuadraticPower(f, b, static_cast<long>(e));
    }
    return QuadraticPower(quadratic_at(j, path));
  }

  static std::optional<QuadraticNumber> scale_at(const Json& j, const std::string& path) {
    auto it = j.find("scale");
    if (it == j.end()) return std::nullopt;
    return quadratic_at(*it, path + ".scale");
  }

  static LhsTerm lhs_at(const Json& j, const std::string& path) {
    std::string kind = string_at(field(j, path, "kind"), path + ".kind");
    LhsTerm t;
    t.scale = scale_at(j, path);
    if (kind == "updown") {
      UpsideDownSeries s;
      try {
        s.family = parse_family(string_at(field(j, path, "family"), path + ".family"));
      } catch (const ParseError& e) {
        fail(path + ".family", e.what());
      }
      s.a = quadratic_at(field(j, path, "a"), path + ".a");
      s.b = quadratic_at(field(j, path, "b"), path + ".b");
      s.m = power_at(field(j, path, "m"), path + ".m");
      t.body = s;
    } else if (kind == "fiblucas") {
      FibLucasSeries s;
      s.p = rational_at(field(j, path, "p"), path + ".p");
      s.q = rational_at(field(j, path, "q"), path + ".q");
      s.r = rational_at(field(j, path, "r"), path + ".r");
      s.s = rational_at(field(j, path, "s"), path + ".s");
      s.u = rational_at(field(j, path, "u"), path + ".u");
      s.v = rational_at(field(j, path, "v"), path + ".v");
      t.body = s;
    } else if (kind == "constant") {
      ConstantTerm c;
      c.coeff = quadratic_at(field(j, path, "coeff"), path + ".coeff");
      c.constant = constant_at(field(j, path, "constant"), path + ".constant");
      t.body = c;
    } else {
      fail(path + ".kind", "unknown term kind '" + kind + "'");
    }
    return t;
  }

  static std::string constant_at(const Json& j, const std::string& path) {
    std::string s = string_at(j, path);
    try {
      parse_constant_expression(s);
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
    return s;
  }

  static IdentityRecord identity_at(const Json& j, const std::string& path) {
    IdentityRecord r;
    r.id = string_at(field(j, path, "id"), path + ".id");
    r.source = string_at(field(j, path, "source"), path + ".source");
    const Json& lhs = field(j, path, "lhs");
    if (!lhs.is_array()) fail(path + ".lhs", "expected an array");
    for (size_t i = 0; i < lhs.size(); ++i) r.lhs.push_back(lhs_at(lhs[i], path + ".lhs[" + std::to_string(i) + "]"));
    const Json& rhs = field(j, path, "rhs");
    if (!rhs.is_array() || rhs.empty()) fail(path + ".rhs", "expected a nonempty array");
    for (size_t i = 0; i < rhs.size(); ++i) {
      std::string p = path + ".rhs[" + std::to_string(i) + "]";
      r.rhs.push_back({quadratic_at(field(rhs[i], p, "coeff"), p + ".coeff"),
                       constant_at(field(rhs[i], p, "constant"), p + ".constant")});
    }
    return r;
  }

  static std::int64_t discriminant_at(const Json& j, const std::string& path) {
    std::int64_t d = int_at(j, path);
    if (!is_valid_discriminant(d)) fail(path, std::to_string(d) + " is not a discriminant");
    return d;
  }

  static KroneckerInstance kronecker_at(const Json& j, const std::string& path) {
    KroneckerInstance k;
    k.id = string_at(field(j, path, "id"), path + ".id");
    k.source = string_at(field(j, path, "source"), path + ".source");
    const Json& pts = field(j, path, "points");
    const Json& sg = field(j, path, "signs");
    if (!pts.is_array()) fail(path + ".points", "expected an array");
    if (!sg.is_array()) fail(path + ".signs", "expected an array");
    if (pts.size() != sg.size()) fail(path, "points and signs differ in length");
    for (size_t i = 0; i < pts.size(); ++i) {
      std::string p = path + ".points[" + std::to_string(i) + "]";
      std::string text = string_at(pts[i], p);
      try {
        k.points.push_back(CMPoint::parse(text));
      } catch (const Error& e) {
        fail(p, e.what());
      }
      k.point_text.push_back(text);
      std::int64_t s = int_at(sg[i], path + ".signs[" + std::to_string(i) + "]");
      if (s != 1 && s != -1) fail(path + ".signs[" + std::to_string(i) + "]", "sign must be +1 or -1");
      k.signs.push_back(static_cast<int>(s));
    }
    const Json& rhs = field(j, path, "rhs");
    if (!rhs.is_array()) fail(path + ".rhs", "expected an array");
    for (size_t i = 0; i < rhs.size(); ++i) {
      std::string p = path + ".rhs[" + std::to_string(i) + "]";
      KroneckerTerm t;
      std::string kind = string_at(field(rhs[i], p, "kind"), p + ".kind");
      if (kind == "KRONECKER") t.kind = KroneckerKind::KRONECKER;
      else if (kind == "DIRICHLET") t.kind = KroneckerKind::DIRICHLET;
      else fail(p + ".kind", "unknown kind '" + kind + "'");
      t.twist = rational_at(field(rhs[i], p, "twist"), p + ".twist");
      t.d1 = discriminant_at(field(rhs[i], p, "d1"), p + ".d1");
      t.d2 = discriminant_at(field(rhs[i], p, "d2"), p + ".d2");
      if (t.kind == KroneckerKind::DIRICHLET) {
        std::int64_t D = t.d1 * t.d2;
        if (D == 1) fail(p, "DIRICHLET needs d1 d2 != 1");
      }
      k.rhs.push_back(t);
    }
    return k;
  }

  static TableCell cell_at(const Json& j, const std::string& path) {
    TableCell c;
    c.value = power_at(field(j, path, "value"), path + ".value");
    auto it = j.find("sqrt");
    if (it != j.end()) {
      c.radicand = rational_at(*it, path + ".sqrt");
      if (c.radicand <= 0) fail(path + ".sqrt", "radicand must be positive");
    }
    return c;
  }

  static Table table_at(const Json& j, const std::string& path) {
    Table t;
    t.number = static_cast<int>(int_at(field(j, path, "table"), path + ".table"));
    t.level = static_cast<int>(int_at(field(j, path, "level"), path + ".level"));
    if (t.level < 2 || t.level > 4) fail(path + ".level", "level must be 2, 3 or 4");
    const Json& rows = field(j, path, "rows");
    if (!rows.is_array()) fail(path + ".rows", "expected an array");
    for (size_t i = 0; i < rows.size(); ++i) {
      std::string p = path + ".rows[" + std::to_string(i) + "]";
      TableRow r;
      r.point_text = string_at(field(rows[i], p, "point"), p + ".point");
      try {
        r.point = CMPoint::parse(r.point_text);
      } catch (const Error& e) {
        fail(p + ".point", e.what());
      }
      r.c1 = cell_at(field(rows[i], p, "c1"), p + ".c1");
      r.c2 = cell_at(field(rows[i], p, "c2"), p + ".c2");
      r.m = cell_at(field(rows[i], p, "m"), p + ".m");
      t.rows.push_back(std::move(r));
    }
    return t;
  }
};

// integers that fit a double exactly stay numbers, larger ones become strings
inline Json bigint_json(const BigInt& n) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(n) < limit) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

inline Json rational_json(const Rational& q) {
  return Json::array({bigint_json(q.get_num()), bigint_json(q.get_den())});
}

inline Json quadratic_json(const QuadraticNumber& q) {
  return Json{{"a", rational_json(q.a())}, {"b", rational_json(q.b())}, {"D", q.D()}};
}

inline Json power_json(const QuadraticPower& p) {
  if (p.is_plain()) return quadratic_json(p.base);
  return Json{{"factor", quadratic_json(p.factor)}, {"base", quadratic_json(p.base)}, {"exp", p.exponent}};
}

inline std::string with_line_info(const std::string& text, const Json::parse_error& e) {
  size_t pos = std::min(e.byte, text.size());
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "corpus: line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON";
}

}  // namespace detail

inline Corpus parse_corpus(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CorpusError(detail::with_line_info(text, e));
  }
  using R = detail::CorpusReader;
  Corpus c;
  const Json& ids = R::field(doc, "$", "identities");
  if (!ids.is_array()) R::fail("$.identities", "expected an array");
  std::set<std::string> seen;
  for (size_t i = 0; i < ids.size(); ++i) {
    std::string path = "$.identities[" + std::to_string(i) + "]";
    c.identities.push_back(R::identity_at(ids[i], path));
    if (!seen.insert(c.identities.back().id).second) R::fail(path + ".id", "duplicate id '" + c.identities.back().id + "'");
  }
  if (doc.contains("kronecker")) {
    const Json& kr = doc["kronecker"];
    if (!kr.is_array()) R::fail("$.kronecker", "expected an array");
    for (size_t i = 0; i < kr.size(); ++i) {
      std::string path = "$.kronecker[" + std::to_string(i) + "]";
      c.kronecker.push_back(R::kronecker_at(kr[i], path));
      if (!seen.insert(c.kronecker.back().id).second) R::fail(path + ".id", "duplicate id '" + c.kronecker.back().id + "'");
    }
  }
  if (doc.contains("tables")) {
    const Json& tb = doc["tables"];
    if (!tb.is_array()) R::fail("$.tables", "expected an array");
    for (size_t i = 0; i < tb.size(); ++i) c.tables.push_back(R::table_at(tb[i], "$.tables[" + std::to_string(i) + "]"));
  }
  return c;
}

inline Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("corpus: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

inline bool has_embedded_corpus() {
#ifdef L2LAB_HAS_EMBEDDED_CORPUS
  return true;
#else
  return false;
#endif
}

inline Corpus default_corpus() {
#ifdef L2LAB_HAS_EMBEDDED_CORPUS
  return parse_corpus(std::string(detail::embedded_corpus_json));
#else
  throw CorpusError("corpus: no embedded corpus in this build; pass a corpus file");
#endif
}

inline Json corpus_to_json(const Corpus& c) {
  using namespace detail;
  Json ids = Json::array();
  for (const auto& r : c.identities) {
    Json lhs = Json::array();
    for (const auto& t : r.lhs) {
      Json j;
      if (const auto* s = std::get_if<UpsideDownSeries>(&t.body)) {
        j = Json{{"kind", "updown"}, {"family", std::string(family_name(s->family))}, {"a", quadratic_json(s->a)},
                 {"b", quadratic_json(s->b)}, {"m", power_json(s->m)}};
      } else if (const auto* f = std::get_if<FibLucasSeries>(&t.body)) {
        j = Json{{"kind", "fiblucas"}, {"p", rational_json(f->p)}, {"q", rational_json(f->q)},
                 {"r", rational_json(f->r)}, {"s", rational_json(f->s)}, {"u", rational_json(f->u)},
                 {"v", rational_json(f->v)}};
      } else {
        const auto& k = std::get<ConstantTerm>(t.body);
        j = Json{{"kind", "constant"}, {"coeff", quadratic_json(k.coeff)}, {"constant", k.constant}};
      }
      if (t.scale) j["scale"] = quadratic_json(*t.scale);
      lhs.push_back(std::move(j));
    }
    Json rhs = Json::array();
    for (const auto& t : r.rhs) rhs.push_back(Json{{"coeff", quadratic_json(t.coeff)}, {"constant", t.constant}});
    ids.push_back(Json{{"id", r.id}, {"source", r.source}, {"lhs", lhs}, {"rhs", rhs}});
  }
  Json kr = Json::array();
  for (const auto& k : c.kronecker) {
    Json rhs = Json::array();
    for (const auto& t : k.rhs)
      rhs.push_back(Json{{"kind", t.kind == KroneckerKind::KRONECKER ? "KRONECKER" : "DIRICHLET"},
                         {"twist", rational_json(t.twist)},
                         {"d1", t.d1},
                         {"d2", t.d2}});
    kr.push_back(Json{{"id", k.id}, {"source", k.source}, {"points", k.point_text}, {"signs", k.signs}, {"rhs", rhs}});
  }
  Json tb = Json::array();
  for (const auto& t : c.tables) {
    Json rows = Json::array();
    auto cell = [](const TableCell& c) {
      Json j{{"value", power_json(c.value)}};
      if (c.radicand != 1) j["sqrt"] = rational_json(c.radicand);
      return j;
    };
    for (const auto& r : t.rows)
      rows.push_back(Json{{"point", r.point_text}, {"c1", cell(r.c1)}, {"c2", cell(r.c2)}, {"m", cell(r.m)}});
    tb.push_back(Json{{"table", t.number}, {"level", t.level}, {"rows", rows}});
  }
  return Json{{"identities", ids}, {"kronecker", kr}, {"tables", tb}};
}

// canonical text: sorted keys, two-space indent, trailing newline
inline std::string serialize_corpus(const Corpus& c) { return corpus_to_json(c).dump(2) + "\n"; }

}  // namespace l2lab
