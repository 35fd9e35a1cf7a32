#include "anosov/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace anosov {
namespace {

std::vector<double> parse_row(const std::string& line, int line_no) {
  std::vector<double> row;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    double v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": not a number: '" + tok + "'");
    row.push_back(v);
  }
  return row;
}

Eigen::MatrixXd close_block(const std::vector<std::vector<double>>& rows, int first_line) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != d)
      throw std::invalid_argument("block starting at line " + std::to_string(first_line) + ": row " +
                                  std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(d));
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

std::vector<Eigen::MatrixXd> parse_matrices(std::istream& in) {
  std::vector<Eigen::MatrixXd> out;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  int block_start = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (first == std::string::npos) {
      if (!rows.empty()) out.push_back(close_block(rows, block_start));
      rows.clear();
      continue;
    }
    if (rows.empty()) block_start = line_no;
    rows.push_back(parse_row(line, line_no));
  }
  if (!rows.empty()) out.push_back(close_block(rows, block_start));
  if (out.empty()) throw std::invalid_argument("no matrices found");
  const auto d = out.front().rows();
  for (const auto& m : out)
    if (m.rows() != d) throw std::invalid_argument("matrices of different sizes in one file");
  return out;
}

std::vector<Eigen::MatrixXd> parse_matrices_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_matrices(ss);
}

std::vector<Eigen::MatrixXd> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  try {
    return parse_matrices(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_matrices(std::ostream& out, const std::vector<Eigen::MatrixXd>& matrices) {
  char buf[40];
  for (std::size_t b = 0; b < matrices.size(); ++b) {
    if (b) out << '\n';
    const auto& m = matrices[b];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
        out << (j ? " " : "") << buf;
      }
      out << '\n';
    }
  }
}

}  // namespace anosov
