#pragma once

#include <vector>

#include "admset/context.hpp"
#include "admset/element.hpp"
#include "admset/level.hpp"

namespace admset {

/// Sign of sigma_E for E a cardinality-n subset of {1..2n}: the permutation
/// sending 1..n to the elements of E in increasing order and n+1..2n to E^c
/// in increasing order.
int sigma_sign(const std::vector<int>& E, int two_n);

/// Sign of the alternative convention sigma'_E: 1..n to the elements of
/// 2n+1-E in decreasing order, n+1..2n to E-perp in increasing order.
/// Satisfies sgn(sigma'_E) = (-1)^{m+1} sgn(sigma_E) with n = 2m+1.
int sigma_prime_sign(const std::vector<int>& E, int two_n);

/// E-perp = (2n+1-E)^c, sorted.
std::vector<int> perp_set(const std::vector<int>& E, int two_n);

enum class SpinCase { Strict, SelfDual };

/// The index-set data deciding the spin condition at one face index.
struct SpinWitness {
  long long i = 0;           // index in I, or the mirrored tag period - i
  bool mirrored = false;
  std::vector<int> E_minus, E_plus;
  std::vector<int> E_perp_minus, E_perp_plus;
  int q = 1, q_perp = 1;     // odd, q >= q_perp
  int sgn_minus = 1, sgn_plus = 1;
  SpinCase kase = SpinCase::Strict;
  bool satisfied = false;
};

/// Evaluate the witness for mu_i at index i in {0..m} of a GU(m) context
/// (n = 2m+1), or with `mirrored` set for mu_{-i} at the representative
/// n - i (the index-set breakpoints move from (i, m+1) to (m+1, n-i)).
/// Preconditions: 0 <= mu <= 2, Sigma mu = n, mu(m+1) = 1; violations throw
/// with the failing inequality.  Both signs b_- = m+1 and b_+ = n+m+1 are
/// always computed.
SpinWitness spin_witness(const Vec& mu_i, int i, int n, bool mirrored = false);

/// Witnesses at every representative residue of the coset's face; mirrored
/// residues use mu_{-i} = 2 - mu_i* with the same index recipe.
std::vector<SpinWitness> coset_spin_witnesses(const WeylElement& w, const LevelStructure& I);

/// Naively permissible, zero-count bound s, and a satisfied witness at
/// every representative index.
bool is_spin_permissible(const WeylElement& w, const LevelStructure& I, int s);

std::vector<WeylElement> enumerate_spin(const GroupContext& ctx, const LevelStructure& I, int s);

}  // namespace admset
