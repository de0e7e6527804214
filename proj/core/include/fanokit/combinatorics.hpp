#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace fanokit {

/// C(n, k) as an exact integer; 0 when k > n or n < 0.
mpz_class binomial(long n, unsigned long k);
mpz_class binomial(const mpz_class& n, unsigned long k);

mpz_class factorial(unsigned long n);

/// All k-element subsets of {0, ..., n-1} as increasing vectors, in
/// lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// All exponent vectors of length `vars` with total degree `degree`, in
/// descending lexicographic order (x0^d first).
std::vector<std::vector<unsigned>> exponent_vectors(std::size_t vars, unsigned degree);

/// +1 or -1: the sign of the permutation given in one-line notation. The
/// entries must be distinct; they need not be 0..n-1.
int permutation_sign(const std::vector<std::size_t>& perm);

/// Lexicographic rank of an increasing k-subset of {0, ..., n-1}.
std::size_t combination_rank(const std::vector<std::size_t>& subset, std::size_t n);

}  // namespace fanokit
