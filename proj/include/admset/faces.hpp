#pragma once

#include <string>
#include <vector>

#include "admset/bruhat.hpp"
#include "admset/context.hpp"
#include "admset/element.hpp"
#include "admset/level.hpp"

namespace admset {

/// Periodic family (v_i) indexed by the residues of I u (period - I),
/// stored on representatives in [0, period).  The defining conditions:
///   F1  v_{i+period} = v_i - 1   (used to extend the stored data)
///   F2  v_i >= v_j for i <= j
///   F3  sum v_i - sum v_j = j - i
///   F4  v_i + v_{-i}* = d (constant vector), d even
struct FaceOfTypeI {
  GroupContext ctx;  // GSp or GU
  LevelStructure level;
  std::vector<int> reps;   // sorted representatives in [0, period)
  std::vector<Vec> v;      // v[t] is the vector at reps[t]
  long long d = 0;

  const Vec& at_rep(int residue) const;
  /// v_i for an arbitrary integer index, via F1.
  Vec at(long long i) const;
};

struct FaceViolation {
  std::string condition;  // "F1".."F4", "even-d"
  long long i;
  long long j;            // second index when applicable
  std::string detail;
};

/// The standard 0-face (omega_i)_i.
FaceOfTypeI standard_face(const GroupContext& ctx, const LevelStructure& I);

/// The face (w . omega_i)_i; a complete invariant of the coset w W_{G,I}.
FaceOfTypeI face_of(const WeylElement& w, const LevelStructure& I);

/// Empty when the family satisfies F1-F4 with even d.
std::vector<FaceViolation> validate_face(const FaceOfTypeI& f);

/// mu_i = v_i - omega_i, periodic with the same representatives.
struct MuFamily {
  GroupContext ctx;
  LevelStructure level;
  std::vector<int> reps;
  std::vector<Vec> mu;
  long long d = 0;

  const Vec& at_rep(int residue) const;
};

/// Throws if the face fails validation.
MuFamily mu_family(const FaceOfTypeI& f);
std::vector<FaceViolation> validate_mu_family(const MuFamily& m);

struct PairSumViolation {
  int residue;       // representative index
  int j;             // coordinate
  long long sum;     // mu_i(j) + mu_i(j*)
  long long lo, hi;  // required band
};

/// The two-band inequalities on mu_i(j) + mu_i(j*): band [d, d+1] on
/// A_i = {1..i, i*..n} and [d-1, d] on B_i = {i+1..n-i} for i in I, with
/// the bands swapped on the mirrored residues.  Returns every violating
/// (residue, coordinate); empty on any genuine face.
std::vector<PairSumViolation> basic_inequality_violations(const MuFamily& m);
bool check_basic_inequalities(const MuFamily& m, std::vector<PairSumViolation>* out = nullptr);

/// mu + mu* = d componentwise.
bool is_self_dual(const Vec& mu_i, long long d);

}  // namespace admset
