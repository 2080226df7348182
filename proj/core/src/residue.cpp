#include "census/residue.hpp"

#include <algorithm>
#include <numeric>

#include "census/curve_zeta.hpp"
#include "census/error.hpp"

namespace census {

namespace {

Monomial ratio(int k, int l) { return Monomial::of(var::zi(k)) * Monomial::of(var::zi(l), -1); }

// 1/ζ̃(x) = x^{g-1} (1 - x)(1 - q x) / ∏(1 - α_i x)
FactoredRat zeta_tilde_inverse(int g, const Monomial& x) {
  std::vector<AtomPower> den;
  for (int i = 1; i <= 2 * g; ++i) den.push_back({{1, alpha_monomial(i) * x}, 1});
  SparsePoly num = (SparsePoly(1) - SparsePoly(x)) * (SparsePoly(1) - SparsePoly(Monomial::of(var::q) * x));
  return FactoredRat::from_parts(x.pow(g - 1), std::move(num), std::move(den));
}

}  // namespace

SymmetrizedKernel build_kernel(int g, int n) {
  if (n < 1 || n > kMaxChain) throw Error(ErrorKind::InvalidArgument, "kernel size must lie in 1.." + std::to_string(kMaxChain));
  // The summand for σ divided by ∏_{i<j} ζ̃(z_i/z_j) only keeps the pairs σ
  // inverts, each contributing ζ̃(z_l/z_k)/ζ̃(z_k/z_l).
  std::vector<std::vector<FactoredRat>> swap(static_cast<std::size_t>(n) + 1,
                                             std::vector<FactoredRat>(static_cast<std::size_t>(n) + 1));
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      swap[k][l] = zeta_tilde(g, 1, ratio(l, k)) * zeta_tilde_inverse(g, ratio(k, l));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  FactoredRat sum;
  do {
    FactoredRat term = FactoredRat::inverse_binomial(1, Monomial::of(var::zi(perm[0])));
    for (int i = 0; i + 1 < n; ++i)
      term *= FactoredRat::inverse_binomial(1, Monomial::of(var::q) * ratio(perm[i + 1], perm[i]));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) term *= swap[perm[b]][perm[a]];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {g, n, std::move(sum)};
}

FactoredRat res_simple(const FactoredRat& f, int u, const Rational& c, const Monomial& m) {
  if (m.mentions(u)) throw Error(ErrorKind::InvalidArgument, "pole location mentions the residue variable");
  std::vector<AtomPower> kept;
  const Atom* pole = nullptr;
  int order = 0;
  for (const auto& ap : f.denominator()) {
    const int e = ap.atom.shape[u];
    bool vanishes = false;
    if (e != 0) {
      Monomial image = ap.atom.shape.without(u) * m.pow(e);
      vanishes = image.is_one() && ap.atom.constant * census::pow(c, e) == 1;
    }
    if (vanishes) {
      order += ap.multiplicity;
      pole = &ap.atom;
      if (ap.multiplicity > 1) kept.push_back({ap.atom, ap.multiplicity - 1});
    } else {
      kept.push_back(ap);
    }
  }
  if (order == 0) return {};
  if (order > 1)
    throw Error(ErrorKind::HigherOrderPole, "pole of order " + std::to_string(order) + " along " + var_name(u));
  // (1 - u/c) / (1 - k u^e w) -> 1/e at the pole.
  const int e = pole->shape[u];
  FactoredRat rest = FactoredRat::from_parts(f.prefactor(), f.numerator(), std::move(kept));
  return rest.substitute(u, c, m).scaled(Rational(1, e));
}

FactoredRat h_tilde(int g, const Partition& lambda, const ResidueOrder& order, const SymmetrizedKernel* kernel) {
  if (lambda.empty()) throw Error(ErrorKind::InvalidArgument, "h_tilde needs a nonempty partition");
  const BlockProfile profile = block_profile(lambda);
  const int n = profile.n();
  SymmetrizedKernel own;
  if (!kernel || kernel->n != n || kernel->genus != g) {
    own = build_kernel(g, n);
    kernel = &own;
  }

  std::vector<int> blocks = order.blocks.empty() ? profile.nonempty() : order.blocks;
  {
    auto sorted = blocks;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != profile.nonempty()) throw Error(ErrorKind::InvalidArgument, "block order must permute the nonempty blocks");
  }

  // z_{a+m} = z_a u_a ... u_{a+m-1} inside the block led by z_a.
  FactoredRat f = kernel->value;
  for (int i : profile.nonempty()) {
    const int a = profile.leader(i);
    Monomial image = Monomial::of(var::zi(a));
    for (int m = 1; m < profile.r(i); ++m) {
      image *= Monomial::of(var::u(a + m - 1));
      f = f.substitute(var::zi(a + m), 1, image);
    }
  }

  const Monomial at = Monomial::of(var::q, -1);
  for (int i : blocks) {
    const int a = profile.leader(i);
    const int last = a + profile.r(i) - 2;
    for (int k = 0; k <= last - a; ++k) {
      const int j = order.bottom_first ? a + k : last - k;
      f = res_simple(f, var::u(j), 1, at);
    }
  }
  return f;
}

FactoredRat h_from_tilde(const FactoredRat& tilde, const Partition& lambda) {
  const BlockProfile profile = block_profile(lambda);
  FactoredRat h = tilde;
  // Leaders are distinct z_k, images only mention z and q.
  for (int i : profile.nonempty())
    h = h.substitute(var::zi(profile.leader(i)), 1,
                     Monomial::of(var::z, i) * Monomial::of(var::q, -profile.before(i)));
  return h;
}

FactoredRat h_factor(int g, const Partition& lambda, const SymmetrizedKernel* kernel) {
  if (lambda.empty()) return 1;
  return h_from_tilde(h_tilde(g, lambda, {}, kernel), lambda);
}

}  // namespace census
