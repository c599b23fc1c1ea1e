#include "hstab/mmm.hpp"

#include <algorithm>

namespace hstab {

CharClassAlphabet char_class_alphabet(int n) {
  if (n <= 2) throw DomainError("the stable range needs n > 2");
  CharClassAlphabet A;
  A.n = n;
  A.generators.push_back({"e", 2 * n});
  int lo = (n + 1 + 3) / 4;  // ceil((n+1)/4)
  for (int i = lo; i <= n - 1; ++i)
    A.generators.push_back({"p" + std::to_string(i), 4 * i});
  return A;
}

namespace {

void enumerate_monomials(const std::vector<int>& degs, size_t idx, int degree, int cap,
                         std::vector<int>& out) {
  if (idx == degs.size()) {
    out.push_back(degree);
    return;
  }
  for (int d = degree; d <= cap; d += degs[idx]) {
    enumerate_monomials(degs, idx + 1, d, cap, out);
    if (degs[idx] == 0) break;
  }
}

}  // namespace

std::vector<int> generator_degrees(int n, int dmax) {
  if (dmax < 0) throw DomainError("dmax must be non-negative");
  CharClassAlphabet A = char_class_alphabet(n);
  std::vector<int> degs;
  for (auto& [_, d] : A.generators) degs.push_back(d);
  std::vector<int> monomials;
  enumerate_monomials(degs, 0, 0, dmax + 2 * n, monomials);
  std::vector<int> out;
  for (int d : monomials)
    if (d > 2 * n) out.push_back(d - 2 * n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> hilbert_series(const std::vector<int>& degrees, int tmax) {
  if (tmax < 0) throw DomainError("tmax must be non-negative");
  for (int d : degrees)
    if (d <= 0 || d % 2 != 0)
      throw DomainError("the ring is polynomial only on positive even degrees");
  std::vector<Int> coeff(tmax + 1, Int(0));
  coeff[0] = 1;
  for (int d : degrees)
    for (int t = d; t <= tmax; ++t) coeff[t] += coeff[t - d];  // 1/(1-t^d) convolution
  return coeff;
}

}  // namespace hstab
