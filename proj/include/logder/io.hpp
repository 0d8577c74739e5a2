#ifndef LOGDER_IO_HPP
#define LOGDER_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/logderiv.hpp"

namespace logder {

/// Parses the .arr format: '#' starts a comment, the first data line is
/// "ell n", followed by n rows of ell rationals (integers or p/q).
Arrangement load_arrangement(std::string_view text);

/// Parses a .der file: ell non-empty lines, line i holding the polynomial p_i.
/// '#' starts a comment.
Derivation load_derivation(std::string_view text, std::size_t ell);

/// Same line format, arbitrary count; used for k-tuples.
std::vector<Polynomial> load_polynomial_lines(std::string_view text, std::size_t nvars);

/// Parses a hyperplane bijection: n whitespace separated 1-based images, the
/// i-th number being the image of hyperplane i. Returned 0-based.
std::vector<std::size_t> load_permutation(std::string_view text);

std::string format_arrangement(const Arrangement& a);
std::string format_derivation(const Derivation& d);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace logder

#endif  // LOGDER_IO_HPP
