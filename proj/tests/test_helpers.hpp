#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <noncomm/laurent.hpp>
#include <noncomm/rational.hpp>

namespace test_helpers {

using noncomm::Exp;
using noncomm::LaurentPoly;
using noncomm::Rational;

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

// Run a shell command capturing stdout (stderr untouched).
inline CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

// Exact Gaussian elimination; returns the unique solution of A x = b or throws.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) throw std::runtime_error("singular system");
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const Rational lead = a[rank][col];
    for (auto& v : a[rank]) v /= lead;
    b[rank] /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
      b[r] -= f * b[rank];
    }
    ++rank;
  }
  if (rank < cols) throw std::runtime_error("underdetermined system");
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) throw std::runtime_error("inconsistent system");
  return std::vector<Rational>(b.begin(), b.begin() + static_cast<long>(cols));
}

// Express target as a rational combination of the given polynomials (exact),
// solving over the union of their supports.
inline std::vector<Rational> combination_coefficients(
    const std::vector<LaurentPoly<Rational>>& basis, const LaurentPoly<Rational>& target) {
  std::vector<Exp> support;
  auto collect = [&](const LaurentPoly<Rational>& f) {
    for (const auto& [e, c] : f.terms()) {
      bool found = false;
      for (const auto& s : support)
        if (s == e) {
          found = true;
          break;
        }
      if (!found) support.push_back(e);
    }
  };
  for (const auto& f : basis) collect(f);
  collect(target);
  std::vector<std::vector<Rational>> a(support.size(),
                                       std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Rational> b(support.size(), Rational(0));
  for (std::size_t row = 0; row < support.size(); ++row) {
    for (std::size_t col = 0; col < basis.size(); ++col) {
      auto it = basis[col].terms().find(support[row]);
      if (it != basis[col].terms().end()) a[row][col] = it->second;
    }
    auto it = target.terms().find(support[row]);
    if (it != target.terms().end()) b[row] = it->second;
  }
  return solve_exact(std::move(a), std::move(b));
}

}  // namespace test_helpers
