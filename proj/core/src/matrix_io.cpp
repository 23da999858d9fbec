#include "opineq/matrix_io.hpp"

#include "opineq/error.hpp"

namespace opineq {

namespace {

Json rows_of(const CMatrix& a, bool imaginary) {
  Json rows = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(imaginary ? a(i, j).imag() : a(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool has_imaginary(const CMatrix& a) { return a.imag().cwiseAbs().maxCoeff() != 0.0; }

CMatrix read_rows(const Json& doc, Index rows, Index cols) {
  const auto read = [&](const Json& arr, CMatrix& out, bool imaginary) {
    if (!arr.is_array() || static_cast<Index>(arr.size()) != rows)
      throw Error(Errc::ParseError, "row count does not match dimension");
    for (Index i = 0; i < rows; ++i) {
      const Json& row = arr[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols)
        throw Error(Errc::ParseError, "column count does not match dimension");
      for (Index j = 0; j < cols; ++j) {
        const Json& x = row[static_cast<std::size_t>(j)];
        if (!x.is_number()) throw Error(Errc::ParseError, "non-numeric entry");
        if (imaginary)
          out(i, j).imag(x.get<double>());
        else
          out(i, j).real(x.get<double>());
      }
    }
  };
  CMatrix out = CMatrix::Zero(rows, cols);
  if (!doc.contains("re")) throw Error(Errc::ParseError, "missing field 're'");
  read(doc.at("re"), out, false);
  if (doc.contains("im")) read(doc.at("im"), out, true);
  return out;
}

Index read_dim(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer())
    throw Error(Errc::ParseError, std::string("missing integer field '") + key + "'");
  const auto v = doc.at(key).get<long long>();
  if (v < 1) throw Error(Errc::ParseError, std::string("field '") + key + "' must be >= 1");
  return static_cast<Index>(v);
}

}  // namespace

Json to_json(const HermitianMatrix& a) {
  Json doc;
  doc["n"] = a.dim();
  doc["re"] = rows_of(a.matrix(), false);
  if (has_imaginary(a.matrix())) doc["im"] = rows_of(a.matrix(), true);
  return doc;
}

HermitianMatrix hermitian_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "matrix document must be an object");
  const Index n = read_dim(doc, "n");
  return HermitianMatrix(read_rows(doc, n, n));
}

Json to_json(const CMatrix& a) {
  Json doc;
  doc["rows"] = a.rows();
  doc["cols"] = a.cols();
  doc["re"] = rows_of(a, false);
  if (has_imaginary(a)) doc["im"] = rows_of(a, true);
  return doc;
}

CMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "matrix document must be an object");
  return read_rows(doc, read_dim(doc, "rows"), read_dim(doc, "cols"));
}

std::string dump_matrix(const HermitianMatrix& a) { return to_json(a).dump(2) + "\n"; }

HermitianMatrix parse_matrix(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return hermitian_from_json(doc);
}

}  // namespace opineq
