#pragma once

#include <vector>

#include "census/factored_rat.hpp"
#include "census/partition.hpp"

namespace census {

/// Symmetrized kernel in z_1..z_n, assembled over one common denominator.
struct SymmetrizedKernel {
  int genus = 0;
  int n = 0;
  FactoredRat value;
};

SymmetrizedKernel build_kernel(int g, int n);

/// One residue step. Returns [(1 - u/c) f] at u = c for a simple pole along
/// u = c and 0 when f is regular there. Throws HigherOrderPole otherwise.
FactoredRat res_simple(const FactoredRat& f, int u, const Rational& c, const Monomial& m);

struct ResidueOrder {
  /// Blocks are processed in this order (block indices); empty means ascending.
  std::vector<int> blocks;
  /// Within a block, bottom of the chain first instead of top first.
  bool bottom_first = false;
};

/// Iterated chain residues of the kernel at u_j = q^{-1}, in leader/ratio
/// coordinates. The result mentions only the leaders z_{1+r_{<i}}, α and q.
/// Pass a prebuilt kernel of size l(λ) to skip rebuilding it.
FactoredRat h_tilde(int g, const Partition& lambda, const ResidueOrder& order = {},
                    const SymmetrizedKernel* kernel = nullptr);

/// Substitutes leader of block i -> z^i q^{-r_{<i}}. h_factor(∅) = 1.
FactoredRat h_factor(int g, const Partition& lambda, const SymmetrizedKernel* kernel = nullptr);
FactoredRat h_from_tilde(const FactoredRat& tilde, const Partition& lambda);

}  // namespace census
