#include "admset/spin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "admset/faces.hpp"
#include "admset/permissibility.hpp"

namespace admset {

namespace {

int perm_sign(const std::vector<int>& one_line) {
  // inversion parity
  int inv = 0;
  for (std::size_t a = 0; a < one_line.size(); ++a)
    for (std::size_t b = a + 1; b < one_line.size(); ++b) inv += one_line[a] > one_line[b];
  return inv % 2 == 0 ? 1 : -1;
}

void check_subset(const std::vector<int>& E, int two_n, const char* op) {
  if (two_n % 2 != 0) throw std::invalid_argument(std::string(op) + ": odd ambient size");
  if (static_cast<int>(E.size()) != two_n / 2)
    throw std::invalid_argument(std::string(op) + ": need |E| = n");
  std::vector<char> seen(static_cast<std::size_t>(two_n), 0);
  for (int v : E) {
    if (v < 1 || v > two_n || seen[v - 1])
      throw std::invalid_argument(std::string(op) + ": E is not a subset of {1..2n}");
    seen[v - 1] = 1;
  }
}

std::vector<int> complement(const std::vector<int>& sorted_E, int two_n) {
  std::vector<int> out;
  std::size_t t = 0;
  for (int v = 1; v <= two_n; ++v) {
    if (t < sorted_E.size() && sorted_E[t] == v)
      ++t;
    else
      out.push_back(v);
  }
  return out;
}

}  // namespace

int sigma_sign(const std::vector<int>& E, int two_n) {
  check_subset(E, two_n, "sigma_sign");
  std::vector<int> sorted = E;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> line = sorted;
  for (int v : complement(sorted, two_n)) line.push_back(v);
  return perm_sign(line);
}

std::vector<int> perp_set(const std::vector<int>& E, int two_n) {
  check_subset(E, two_n, "perp_set");
  std::vector<int> refl;  // 2n+1-E, sorted
  for (int v : E) refl.push_back(two_n + 1 - v);
  std::sort(refl.begin(), refl.end());
  return complement(refl, two_n);
}

int sigma_prime_sign(const std::vector<int>& E, int two_n) {
  check_subset(E, two_n, "sigma_prime_sign");
  // 1..n to 2n+1-E in decreasing order; n+1..2n to E-perp in increasing order
  std::vector<int> line;
  std::vector<int> refl;
  for (int v : E) refl.push_back(two_n + 1 - v);
  std::sort(refl.begin(), refl.end(), std::greater<>());
  line = refl;
  for (int v : perp_set(E, two_n)) line.push_back(v);
  return perm_sign(line);
}

SpinWitness spin_witness(const Vec& mu_i, int i, int n, bool mirrored) {
  if (n < 3 || n % 2 != 1) throw std::invalid_argument("spin_witness: n must be odd, n >= 3");
  const int m = (n - 1) / 2;
  if (static_cast<int>(mu_i.size()) != n)
    throw std::invalid_argument("spin_witness: mu has wrong dimension");
  if (i < 0 || i > m) throw std::invalid_argument("spin_witness: index out of range 0..m");
  if (mirrored && i == 0)
    throw std::invalid_argument("spin_witness: index 0 is its own mirror");
  long long total = 0;
  for (int j = 1; j <= n; ++j) {
    if (mu_i[j - 1] < 0 || mu_i[j - 1] > 2)
      throw std::invalid_argument("spin_witness: entry mu(" + std::to_string(j) +
                                  ") = " + std::to_string(mu_i[j - 1]) + " outside [0,2]");
    total += mu_i[j - 1];
  }
  if (total != n)
    throw std::invalid_argument("spin_witness: sum(mu) = " + std::to_string(total) +
                                " != n = " + std::to_string(n));
  if (mu_i[m] != 1)
    throw std::invalid_argument("spin_witness: mu(m+1) = " + std::to_string(mu_i[m]) + " != 1");

  auto mu = [&](int j) { return mu_i[j - 1]; };
  const int two_n = 2 * n;

  // The index set tracks which basis lines of the split form survive in the
  // distinguished wedge.  Per coordinate slice the breakpoints come from the
  // lattice at the given chain index: (i, m+1) at a representative in [0, m],
  // (m+1, n-i) at the mirrored representative n-i.  First-copy indices are j,
  // second-copy indices n+j.
  std::vector<int> core;
  if (!mirrored) {
    for (int j = 1; j <= i; ++j)
      if (mu(j) == 0) core.push_back(j);
    for (int j = i + 1; j <= m; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(j);
    for (int j = m + 2; j <= n; ++j)
      if (mu(j) == 0) core.push_back(j);
    for (int j = 1; j <= i; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(n + j);
    for (int j = i + 1; j <= m; ++j)
      if (mu(j) == 0) core.push_back(n + j);
    for (int j = m + 2; j <= n; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(n + j);
  } else {
    for (int j = 1; j <= m; ++j)
      if (mu(j) == 0) core.push_back(j);
    for (int j = m + 2; j <= n - i; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(j);
    for (int j = n - i + 1; j <= n; ++j)
      if (mu(j) == 0) core.push_back(j);
    for (int j = 1; j <= m; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(n + j);
    for (int j = m + 2; j <= n - i; ++j)
      if (mu(j) == 0) core.push_back(n + j);
    for (int j = n - i + 1; j <= n; ++j)
      if (mu(j) == 0 || mu(j) == 1) core.push_back(n + j);
  }

  SpinWitness w;
  w.i = mirrored ? (n - i) % n : i;
  w.mirrored = mirrored;
  w.E_minus = core;
  w.E_minus.push_back(m + 1);  // b_-
  std::sort(w.E_minus.begin(), w.E_minus.end());
  w.E_plus = core;
  w.E_plus.push_back(n + m + 1);  // b_+
  std::sort(w.E_plus.begin(), w.E_plus.end());
  check_subset(w.E_minus, two_n, "spin_witness(E_-)");
  check_subset(w.E_plus, two_n, "spin_witness(E_+)");

  w.E_perp_minus = perp_set(w.E_minus, two_n);
  w.E_perp_plus = perp_set(w.E_plus, two_n);

  // q records the uniformizer exponent of the distinguished wedge relative
  // to the index-set line, shifted to the odd positive normal form; only the
  // difference q - q_perp enters the case split.  In the direct case the
  // charged slices are the first-copy band (i, m]; in the mirrored case the
  // second-copy band (n+m+1, 2n-i], with opposite charge.
  auto band_count = [&](const std::vector<int>& E) {
    int c = 0;
    if (!mirrored) {
      for (int v : E) c += v > i && v <= m;
    } else {
      for (int v : E) c += v > n + m + 1 && v <= 2 * n - i;
    }
    return c;
  };
  if (!mirrored) {
    w.q = 1 + 2 * band_count(w.E_minus);
    w.q_perp = 1 + 2 * band_count(w.E_perp_minus);
  } else {
    const int band_size = m - i;
    w.q = 1 + 2 * (band_size - band_count(w.E_minus));
    w.q_perp = 1 + 2 * (band_size - band_count(w.E_perp_minus));
  }
  if (w.q < w.q_perp)
    throw std::logic_error("spin_witness: q < q_perp on naively permissible input");

  w.sgn_minus = sigma_sign(w.E_minus, two_n);
  w.sgn_plus = sigma_sign(w.E_plus, two_n);

  if (w.q > w.q_perp) {
    // eigenvectors of both signs project onto the distinguished line
    w.kase = SpinCase::Strict;
    w.satisfied = true;
  } else {
    // the line itself must split between the two eigenspaces
    w.kase = SpinCase::SelfDual;
    w.satisfied = w.E_minus == w.E_perp_minus && w.E_plus == w.E_perp_plus &&
                  w.sgn_plus == -w.sgn_minus;
  }
  return w;
}

std::vector<SpinWitness> coset_spin_witnesses(const WeylElement& w, const LevelStructure& I) {
  if (w.ctx.kind != GroupKind::GU)
    throw std::invalid_argument("coset_spin_witnesses: expected a GU element");
  const int n = w.ctx.dim;
  const MuFamily fam = mu_family(face_of(w, I));
  std::vector<SpinWitness> out;
  for (int i : I.indices) {
    const Vec& mu_i = fam.at_rep(i);
    out.push_back(spin_witness(mu_i, i, n));
    if (i == 0) continue;  // index 0 is its own mirror
    // mirrored index: mu_{-i} = 2 - mu_i*, evaluated with the mirrored recipe
    Vec mu_neg(mu_i.rbegin(), mu_i.rend());
    for (auto& v : mu_neg) v = 2 - v;
    out.push_back(spin_witness(mu_neg, i, n, true));
  }
  return out;
}

bool is_spin_permissible(const WeylElement& w, const LevelStructure& I, int s) {
  if (s < 0 || s > w.ctx.half())
    throw std::invalid_argument("is_spin_permissible: need 0 <= s <= m");
  if (!is_naively_permissible(w, I)) return false;
  const MuFamily fam = mu_family(face_of(w, I));
  for (const auto& mu : fam.mu) {
    int zeros = 0;
    for (long long v : mu) zeros += v == 0;
    if (zeros > s) return false;
  }
  for (const SpinWitness& sw : coset_spin_witnesses(w, I))
    if (!sw.satisfied) return false;
  return true;
}

std::vector<WeylElement> enumerate_spin(const GroupContext& ctx, const LevelStructure& I, int s) {
  if (ctx.kind != GroupKind::GU)
    throw std::invalid_argument("enumerate_spin: defined for GU contexts");
  // same candidate box as the naive enumeration, filtered by the spin test
  const CosetSet naive = enumerate_naive(ctx, I);
  std::vector<WeylElement> out;
  for (const auto& w : naive)
    if (is_spin_permissible(w, I, s)) out.push_back(w);
  return canonicalize(std::move(out));
}

}  // namespace admset
