#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibstab/canonical.hpp"
#include "fibstab/chow.hpp"
#include "fibstab/error.hpp"
#include "fibstab/geom.hpp"
#include "fibstab/monad.hpp"
#include "fibstab/rational.hpp"

namespace fibstab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational &q) { return to_string(q); }

inline Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw ParseError("expected a rational as \"p/q\" string, got " + j.dump());
}

inline Json to_json(const ChowClass &c) {
  Json j = Json::object();
  const auto names = chow_basis_names(c.variety());
  for (std::size_t i = 0; i < names.size(); ++i)
    j[names[i]] = to_string(c[i]);
  return j;
}

inline Json to_json(const ChernData &d) {
  Json j;
  j["rank"] = to_string(d.rank());
  j["c1"] = to_json(d.c1());
  j["c2"] = to_json(d.c2());
  if (d.variety().dim() >= 3)
    j["c3"] = to_json(d.c3());
  j["ch"] = to_json(d.ch());
  return j;
}

inline Json to_json(const RationalMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const Json &j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

inline Json to_json(const CoxPolynomial &p) {
  Json terms = Json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back(Json{{"coeff", to_string(c)}, {"exps", e}});
  return terms;
}

inline Json to_json(const PolyMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline PolyMatrix poly_matrix_from_json(const Json &j, const VarietyTag &v, Degree d,
                                        std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("expected a polynomial matrix with " + std::to_string(rows) + " rows");
  const std::size_t nv = cox_variable_degrees(v).size();
  PolyMatrix m(v, d, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_array())
        throw ParseError("entry must be a list of terms");
      for (const auto &t : j[i][k]) {
        if (!t.contains("coeff") || !t.contains("exps") || !t["exps"].is_array() ||
            t["exps"].size() != nv)
          throw ParseError("term needs coeff and " + std::to_string(nv) + " exps");
        Exponents e;
        for (const auto &x : t["exps"]) {
          if (!x.is_number_integer() || x.get<int>() < 0)
            throw ParseError("exponents must be non-negative integers");
          e.push_back(x.get<int>());
        }
        m(i, k).add_term(e, rational_from_json(t["coeff"]));
      }
    }
  }
  return m;
}

inline Json to_json(const MonadData &m) {
  Json j;
  j["variety"] = Json{{"a", m.variety.a()}, {"b", m.variety.b()}};
  j["r"] = m.r;
  j["n"] = m.n;
  j["A"] = to_json(m.A);
  j["B"] = to_json(m.B);
  return j;
}

inline long int_field(const Json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field '") + key + "'");
  return j[key].get<long>();
}

/// B may be omitted, in which case it is zero.
inline MonadData monad_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("variety"))
    throw ParseError("monad document needs a 'variety' object");
  const auto v = VarietyTag::p2_bundle(int_field(j["variety"], "a"), int_field(j["variety"], "b"));
  const long r = int_field(j, "r"), n = int_field(j, "n");
  if (r < 1 || n < 0)
    throw ParseError("need r >= 1 and n >= 0");
  if (!j.contains("A"))
    throw ParseError("monad document needs 'A'");
  auto A = poly_matrix_from_json(j["A"], v, kDegreeU, r + 2 * n, n);
  auto B = j.contains("B") ? poly_matrix_from_json(j["B"], v, kDegreeU, n, r + 2 * n)
                           : PolyMatrix(v, kDegreeU, n, r + 2 * n);
  return MonadData(v, r, n, std::move(A), std::move(B));
}

inline Json to_json(const MatrixPairE &e) {
  Json j;
  j["r"] = e.r();
  Json pts = Json::array();
  for (const auto &x : e.config.points())
    pts.push_back(to_string(x));
  j["points"] = pts;
  j["left"] = to_json(e.left);
  j["right"] = to_json(e.right);
  return j;
}

inline MatrixPairE pair_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("matrix pair document must be an object");
  const long r = int_field(j, "r");
  if (!j.contains("points") || !j["points"].is_array())
    throw ParseError("matrix pair document needs 'points'");
  std::vector<Rational> xs;
  for (const auto &x : j["points"])
    xs.push_back(rational_from_json(x));
  const std::size_t n = xs.size();
  if (r < 1 || n < 1)
    throw ParseError("need r >= 1 and at least one point");
  if (!j.contains("left") || !j.contains("right"))
    throw ParseError("matrix pair document needs 'left' and 'right'");
  return MatrixPairE(r, PointConfig(std::move(xs)), matrix_from_json(j["left"], r, n),
                     matrix_from_json(j["right"], r, n));
}

inline Json to_json(const AutLElement &g) {
  return Json{{"A", to_json(g.A)}, {"B", to_json(g.B)}, {"H0", to_json(g.H0)},
              {"H1", to_json(g.H1)}};
}

inline Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

} // namespace fibstab
