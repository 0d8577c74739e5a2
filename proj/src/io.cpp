#include "logder/io.hpp"

#include <fstream>
#include <sstream>

#include "logder/error.hpp"

namespace logder {

namespace {

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  std::string out(line.substr(0, hash));
  const auto first = out.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = out.find_last_not_of(" \t\r");
  return out.substr(first, last - first + 1);
}

std::vector<std::string> data_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line = strip_comment(text.substr(pos, end - pos));
    if (!line.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
    throw ParseError(std::string("invalid ") + what + " '" + token + "'");
  }
  return std::stoul(token);
}

}  // namespace

Arrangement load_arrangement(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("arrangement file has no header line");
  const auto header = split_ws(lines[0]);
  if (header.size() != 2) throw ParseError("arrangement header must be \"ell n\"");
  const std::size_t ell = parse_count(header[0], "dimension");
  const std::size_t n = parse_count(header[1], "hyperplane count");
  if (ell == 0) throw ParseError("dimension must be positive");
  if (lines.size() - 1 != n) {
    throw ParseError("header declares " + std::to_string(n) + " forms but " + std::to_string(lines.size() - 1) +
                     " rows follow");
  }
  std::vector<LinearForm> forms;
  forms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tokens = split_ws(lines[i + 1]);
    if (tokens.size() != ell) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                       " entries, expected " + std::to_string(ell));
    }
    std::vector<Rational> coeffs;
    for (const auto& t : tokens) coeffs.push_back(parse_rational(t));
    forms.emplace_back(std::move(coeffs));
  }
  return Arrangement(ell, std::move(forms));
}

std::vector<Polynomial> load_polynomial_lines(std::string_view text, std::size_t nvars) {
  std::vector<Polynomial> out;
  for (const auto& line : data_lines(text)) out.push_back(parse_polynomial(line, nvars));
  return out;
}

Derivation load_derivation(std::string_view text, std::size_t ell) {
  auto coords = load_polynomial_lines(text, ell);
  if (coords.size() != ell) {
    throw ParseError("derivation file has " + std::to_string(coords.size()) + " coordinate lines, expected " +
                     std::to_string(ell));
  }
  return Derivation(std::move(coords));
}

std::vector<std::size_t> load_permutation(std::string_view text) {
  std::vector<std::size_t> perm;
  for (const auto& line : data_lines(text)) {
    for (const auto& tok : split_ws(line)) {
      const std::size_t v = parse_count(tok, "hyperplane index");
      if (v == 0) throw ParseError("hyperplane indices are 1-based");
      perm.push_back(v - 1);
    }
  }
  return perm;
}

std::string format_arrangement(const Arrangement& a) {
  std::string out = std::to_string(a.ell()) + " " + std::to_string(a.size()) + "\n";
  for (const auto& f : a.forms()) {
    for (std::size_t c = 0; c < f.nvars(); ++c) {
      if (c) out += " ";
      out += f[c].get_str();
    }
    out += "\n";
  }
  return out;
}

std::string format_derivation(const Derivation& d) {
  std::string out;
  for (const auto& p : d.coords()) out += to_string(p) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace logder
