#pragma once

#include <string>
#include <vector>

#include "kmroots/index_set.hpp"
#include "kmroots/rational.hpp"
#include "kmroots/root_vec.hpp"

namespace kmroots {

// Generalized Cartan matrix. Convention fixed globally:
//   a[i][j] = <alpha_j, alpha_i^vee>,
// so the pairing of a lattice vector v with alpha_i^vee is row i of A*v.
struct Gcm {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> a;

  int rank() const { return static_cast<int>(a.size()); }

  // <v, alpha_i^vee>
  int pairing(const RootVec& v, int i) const {
    int p = 0;
    for (int j = 0; j < rank(); ++j) p += a[i][j] * v[j];
    return p;
  }
  bool edge(int i, int j) const { return i != j && a[i][j] != 0; }

  int node_index(const std::string& label) const;  // throws UnknownNode
};

// Validates the GCM axioms: 2 on the diagonal, nonpositive off-diagonal,
// symmetric zero pattern, square, rank in [1, 64].
Gcm validate_gcm(std::vector<std::string> labels, std::vector<std::vector<int>> entries);

// Principal submatrix on I, labels preserved. I must be nonempty.
Gcm subdiagram(const Gcm& gcm, const IndexSet& I);

// Partition of I under the edge relation a[i][j] != 0. Empty I -> empty list.
std::vector<IndexSet> connected_components(const Gcm& gcm, const IndexSet& I);

enum class BlockType { Finite, Affine, Indefinite };

const char* block_type_name(BlockType t);

struct Block {
  IndexSet nodes;
  BlockType type = BlockType::Indefinite;
  // Exact positive vector u (indexed by ascending node order within the
  // block) with A*u > 0 for Finite, A*u = 0 for Affine, A*u < 0 for
  // Indefinite.
  std::vector<Rat> witness;
};

struct MatrixType {
  std::vector<Block> blocks;

  bool all_finite() const {
    for (const auto& b : blocks)
      if (b.type != BlockType::Finite) return false;
    return true;
  }
  bool indecomposable() const { return blocks.size() == 1; }
};

// Trichotomy per indecomposable block, decided by exact rational LP
// feasibility (never by floating-point eigenvalues).
MatrixType classify(const Gcm& gcm);

// Positive rationals d with d_i * a[i][j] = d_j * a[j][i], when they exist.
// Normalized so the minimal d within each connected component is 1.
struct Symmetrizer {
  bool exists = false;
  std::vector<Rat> d;
};

Symmetrizer symmetrizer(const Gcm& gcm);

// (x, y) = sum_{i,j} x_i d_i a[i][j] y_j. Throws NotSymmetrizable.
Rat bilinear_form(const Symmetrizer& sym, const Gcm& gcm, const RootVec& x, const RootVec& y);

}  // namespace kmroots
