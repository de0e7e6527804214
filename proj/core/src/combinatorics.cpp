#include "fanokit/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace fanokit {

mpz_class binomial(long n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
  return out;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace {

void fill_exponents(std::size_t pos, unsigned remaining, std::vector<unsigned>& current,
                    std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[pos] = e;
    fill_exponents(pos + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<std::vector<unsigned>> exponent_vectors(std::size_t vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> current(vars, 0);
  fill_exponents(0, degree, current, out);
  return out;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::size_t combination_rank(const std::vector<std::size_t>& subset, std::size_t n) {
  // Count subsets that precede `subset` lexicographically.
  std::size_t rank = 0;
  const std::size_t k = subset.size();
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < subset[i]; ++v) {
      rank += binomial(static_cast<long>(n - v - 1), k - i - 1).get_ui();
    }
    prev = subset[i];
  }
  return rank;
}

}  // namespace fanokit
