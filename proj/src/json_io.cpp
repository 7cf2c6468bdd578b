#include "toeplitz/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace toeplitz {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("schema: " + what);
}

int int_field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key) && j.at(key).is_number_integer(), std::string("missing integer \"") + key + "\"");
  return j.at(key).get<int>();
}

const json& array_field(const json& j, const char* key, std::size_t size) {
  require(j.contains(key) && j.at(key).is_array(), std::string("missing array \"") + key + "\"");
  require(j.at(key).size() == size, std::string("\"") + key + "\" has " + std::to_string(j.at(key).size()) +
                                        " entries, expected " + std::to_string(size));
  return j.at(key);
}

std::string number17(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void write(const json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // numeric leaves stay on one line
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += number17(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const TrigPoly& f) {
  json c = json::array();
  for (cplx v : f.coeffs()) c.push_back(to_json(v));
  return {{"d", f.degree_bound()}, {"coeffs", std::move(c)}};
}

json to_json(const BlockTrigPoly& f) {
  json c = json::array();
  for (const Mat& v : f.coeffs()) c.push_back(to_json(v));
  return {{"d", f.degree_bound()}, {"m", f.block_size()}, {"coeffs", std::move(c)}};
}

json to_json(const ToeplitzMat& t) {
  json s = json::array();
  for (cplx v : t.symbols()) s.push_back(to_json(v));
  return {{"n", t.order()}, {"symbols", std::move(s)}};
}

json to_json(const BlockToeplitz& t) {
  json s = json::array();
  for (const Mat& v : t.symbols()) s.push_back(to_json(v));
  return {{"n", t.order()}, {"m", t.block_size()}, {"symbols", std::move(s)}};
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms) {
    json w = mu.block_size == 1 ? json(a.weight(0, 0).real()) : to_json(a.weight);
    atoms.push_back({{"lambda", to_json(a.lambda)}, {"w", std::move(w)}});
  }
  return {{"m", mu.block_size}, {"atoms", std::move(atoms)}};
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), "complex must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat matrix_from_json(const json& j, int rows, int cols) {
  require(j.is_array() && j.size() == static_cast<std::size_t>(rows), "matrix has the wrong number of rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    require(row.is_array() && row.size() == static_cast<std::size_t>(cols), "matrix row has the wrong length");
    for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

TrigPoly trig_poly_from_json(const json& j) {
  const int d = int_field(j, "d");
  require(d >= 0, "\"d\" must be nonnegative");
  const json& c = array_field(j, "coeffs", 2 * static_cast<std::size_t>(d) + 1);
  std::vector<cplx> coeffs;
  for (const auto& v : c) coeffs.push_back(complex_from_json(v));
  return TrigPoly(d, std::move(coeffs));
}

BlockTrigPoly block_trig_poly_from_json(const json& j) {
  const int d = int_field(j, "d");
  const int m = int_field(j, "m");
  require(d >= 0 && m >= 1, "\"d\" must be nonnegative and \"m\" positive");
  const json& c = array_field(j, "coeffs", 2 * static_cast<std::size_t>(d) + 1);
  std::vector<Mat> coeffs;
  for (const auto& v : c) coeffs.push_back(matrix_from_json(v, m, m));
  return BlockTrigPoly(d, m, std::move(coeffs));
}

ToeplitzMat toeplitz_from_json(const json& j) {
  const int n = int_field(j, "n");
  require(n >= 1, "\"n\" must be positive");
  require(!j.contains("m") || j.at("m") == 1, "scalar Toeplitz matrix expected (\"m\" must be absent or 1)");
  const json& s = array_field(j, "symbols", 2 * static_cast<std::size_t>(n) - 1);
  std::vector<cplx> symbols;
  for (const auto& v : s) symbols.push_back(v.is_array() && v.size() == 1 ? complex_from_json(v[0][0]) : complex_from_json(v));
  return ToeplitzMat(n, std::move(symbols));
}

BlockToeplitz block_toeplitz_from_json(const json& j) {
  const int n = int_field(j, "n");
  require(n >= 1, "\"n\" must be positive");
  if (!j.contains("m")) return BlockToeplitz::from_scalar(toeplitz_from_json(j));
  const int m = int_field(j, "m");
  require(m >= 1, "\"m\" must be positive");
  const json& s = array_field(j, "symbols", 2 * static_cast<std::size_t>(n) - 1);
  std::vector<Mat> symbols;
  for (const auto& v : s) symbols.push_back(matrix_from_json(v, m, m));
  return BlockToeplitz(n, m, std::move(symbols));
}

AtomicMeasure measure_from_json(const json& j) {
  AtomicMeasure mu;
  mu.block_size = int_field(j, "m");
  require(mu.block_size >= 1, "\"m\" must be positive");
  require(j.contains("atoms") && j.at("atoms").is_array(), "missing array \"atoms\"");
  for (const auto& a : j.at("atoms")) {
    require(a.is_object() && a.contains("lambda") && a.contains("w"), "atom needs \"lambda\" and \"w\"");
    Mat w = a.at("w").is_number() ? Mat::Constant(1, 1, a.at("w").get<double>())
                                  : matrix_from_json(a.at("w"), mu.block_size, mu.block_size);
    require(w.rows() == mu.block_size, "atom weight has the wrong size");
    mu.atoms.push_back({complex_from_json(a.at("lambda")), std::move(w)});
  }
  return mu;
}

std::string dump17(const json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace toeplitz
