#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace anosov {

/// Reads whitespace-separated square matrices, one per block. Blocks are
/// separated by blank lines; lines starting with '#' are comments.
/// Throws std::invalid_argument with a line number on malformed input.
std::vector<Eigen::MatrixXd> parse_matrices(std::istream& in);
std::vector<Eigen::MatrixXd> parse_matrices_string(const std::string& text);
std::vector<Eigen::MatrixXd> read_matrix_file(const std::string& path);

/// Inverse of parse_matrices; round-trips bit-exactly (17 significant digits).
void write_matrices(std::ostream& out, const std::vector<Eigen::MatrixXd>& matrices);

}  // namespace anosov
