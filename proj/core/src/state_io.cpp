#include "covmat/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "covmat/error.hpp"

namespace covmat {

using nlohmann::json;

DensityMatrix state_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw Error("state file needs \"dims\" and \"matrix\" fields");
  }
  try {
    const auto dims = doc.at("dims").get<std::vector<int>>();
    const auto& rows = doc.at("matrix");
    const int total = product_of(dims);
    if (!rows.is_array() || static_cast<int>(rows.size()) != total) {
      throw DimensionMismatch("state file: matrix must have " + std::to_string(total) + " rows");
    }
    ComplexMatrix m(total, total);
    for (int i = 0; i < total; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != total) {
        throw DimensionMismatch("state file: row " + std::to_string(i) + " must have " +
                                std::to_string(total) + " entries");
      }
      for (int j = 0; j < total; ++j) {
        const auto& entry = row[static_cast<std::size_t>(j)];
        if (!entry.is_array() || entry.size() != 2) {
          throw Error("state file: entries must be [re, im] pairs");
        }
        m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
      }
    }
    return DensityMatrix(dims, std::move(m));
  } catch (const json::exception& e) {
    throw Error(std::string("state file has wrong field types: ") + e.what());
  }
}

std::string state_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc = {{"dims", rho.dims()}, {"matrix", std::move(rows)}};
  return doc.dump();
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

void save_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write state file '" + path + "'");
  out << state_to_json(rho) << '\n';
}

}  // namespace covmat
