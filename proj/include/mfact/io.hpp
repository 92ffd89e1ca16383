#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "mfact/matrix.hpp"

namespace mfact::io {

enum class MatrixFormat { MatrixMarket, DenseText };

// .mtx -> MatrixMarket, .txt (or anything else) -> DenseText.
MatrixFormat format_for_path(const std::filesystem::path& p);

std::optional<MatrixFormat> parse_format_name(const std::string& name);

// MatrixMarket "matrix coordinate real general" and
// "matrix array real general"; only square matrices are accepted.
MMatrix read_matrix_market(std::istream& in, double zero_tol = kDefaultZeroTol);
void write_matrix_market(std::ostream& out, const MMatrix& a);

// Dense text: first line n, then n rows of n whitespace-separated reals.
MMatrix read_dense_text(std::istream& in, double zero_tol = kDefaultZeroTol);
void write_dense_text(std::ostream& out, const MMatrix& a);

MMatrix read_matrix(const std::filesystem::path& p,
                    std::optional<MatrixFormat> format = std::nullopt,
                    double zero_tol = kDefaultZeroTol);
void write_matrix(const std::filesystem::path& p, const MMatrix& a,
                  std::optional<MatrixFormat> format = std::nullopt);

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

}  // namespace mfact::io
