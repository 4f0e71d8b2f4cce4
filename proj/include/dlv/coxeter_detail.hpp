#pragma once

// Shared internal data of a CoxeterSystem.  Immutable after construction.

#include <cstdint>
#include <string>
#include <vector>

namespace dlv::detail {

struct Component {
  enum class Kind { Crystallographic, Dihedral };
  Kind kind;
  std::string label;       // "A3", "I2(5)", ...
  std::vector<int> nodes;  // 0-based global generator indices, in order
  int m = 0;               // dihedral bond label (Kind::Dihedral only)
};

struct CoxData {
  int rank = 0;
  std::vector<std::vector<int>> cox_m;   // rank x rank Coxeter matrix
  // Cartan matrix of the chosen crystallographic realization; rows/columns
  // of dihedral components are zero off the diagonal.
  std::vector<std::vector<int>> cartan;
  std::uint64_t order = 1;               // |W|
  std::string type_name;
  std::vector<Component> components;
  bool crystallographic = true;

  // Positive roots.  Roots 0..rank-1 are the simple roots, in generator
  // order.  Coordinate vectors are in the simple-root basis and are empty
  // for roots of dihedral components.
  int nroots = 0;
  std::vector<std::vector<int>> root_coords;

  // gen_tables[s][i] = signed 1-based index of s(rho_i).
  std::vector<std::vector<std::int16_t>> gen_tables;
};

}  // namespace dlv::detail
