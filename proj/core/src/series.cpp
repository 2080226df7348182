#include "census/series.hpp"

namespace census {

int mobius(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Möbius needs a positive argument");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace census
