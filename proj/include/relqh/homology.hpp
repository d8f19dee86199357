#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relqh/module.hpp"

namespace relqh {

struct DimValue {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Exact;
  long n = 0;

  static DimValue exact(long v) { return {Kind::Exact, v}; }
  static DimValue at_least(long v) { return {Kind::AtLeast, v}; }
  static DimValue infinite() { return {Kind::Infinite, 0}; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool operator==(const DimValue& o) const { return kind == o.kind && (kind == Kind::Infinite || n == o.n); }
  bool operator!=(const DimValue& o) const { return !(*this == o); }
  // Certain lower bound; Infinite maps to a large sentinel.
  long lower() const { return kind == Kind::Infinite ? (1L << 40) : n; }
  std::string str() const;
};

DimValue min(const DimValue& a, const DimValue& b);

// Minimal projective resolution P_l -> ... -> P_0 -> M.
struct Resolution {
  ModulePtr base;
  std::vector<ModulePtr> terms;                     // P_0 .. P_L
  std::vector<std::vector<std::size_t>> classes;    // summand classes of each P_i
  std::vector<Matrix> differential;                 // d_i : P_i -> P_{i-1}, d_0 = cover map
  // D[i][l][j] in e_{s_l} A e_{t_j}: generator l of P_i maps to sum_j D[i][l][j] g_j (i >= 1)
  std::vector<std::vector<std::vector<Matrix>>> elements;
  std::vector<ModulePtr> syzygies;                  // Omega^0 = M, ..., Omega^{L+1}
  bool terminated = false;                          // Omega^{L+1} = 0
  std::size_t cap = 0;
  std::size_t length() const { return terms.size() ? terms.size() - 1 : 0; }
  bool minimal() const;
};

const Resolution& minimal_projective_resolution(const ModulePtr& m, std::size_t cap = 20);

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap = 20);
// Tor_i over B of x (left module over B^op) and y (left B-module).
std::size_t tor_dim(const ModulePtr& x, const ModulePtr& y, std::size_t i, std::size_t cap = 20);
// Tor_1 .. Tor_k, stopping early at the first nonzero value if requested.
std::vector<std::size_t> tor_dims(const ModulePtr& x, const ModulePtr& y, std::size_t k, std::size_t cap,
                                  bool stop_at_nonzero);
DimValue projective_dimension(const ModulePtr& m, std::size_t cap = 20);
DimValue injective_dimension(const ModulePtr& m, std::size_t cap = 20);

// Rank test of a composable pair: im f = ker g.
bool is_exact_at(const Matrix& f, const Matrix& g);

}  // namespace relqh
