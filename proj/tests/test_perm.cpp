#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "admset/harness.hpp"
#include "admset/permissibility.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace admset;
using testutil::random_element;

TEST_CASE("naive permissibility") {
  const GroupContext gu1 = GroupContext::gu(1);
  const LevelStructure I = make_level(gu1, {0, 1});
  CHECK(is_naively_permissible(translation(gu1, {2, 1, 0}), I));
  CHECK_FALSE(is_naively_permissible(identity(gu1), I));          // wrong sum
  CHECK_FALSE(is_naively_permissible(translation(gu1, {3, 1, -1}), I));  // bound fails
}

TEST_CASE("wedge permissibility") {
  const GroupContext gu1 = GroupContext::gu(1);
  const LevelStructure I = make_level(gu1, {0, 1});
  const WeylElement w = translation(gu1, {2, 1, 0});
  CHECK(is_wedge_permissible(w, I, 1));
  CHECK_FALSE(is_wedge_permissible(w, I, 0));
  CHECK(is_wedge_permissible(translation(gu1, {1, 1, 1}), I, 0));
  CHECK_THROWS_AS(is_wedge_permissible(w, I, 5), std::invalid_argument);
}

TEST_CASE("GL orbit hull membership") {
  const GroupContext gl4 = GroupContext::gl(4);
  const DominantCochar mu = make_dominant(gl4, {2, 1, 1, 0});
  CHECK(conv_hull_member_gl(mu, RatVec::integral(mu.entries)));
  CHECK(conv_hull_member_gl(mu, RatVec::integral({1, 1, 1, 1})));
  CHECK_FALSE(conv_hull_member_gl(mu, RatVec::integral({2, 2, 0, 0})));
  CHECK_THROWS_AS(make_dominant(gl4, {1, 2, 0, 0}), std::invalid_argument);

  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long long> num(-8, 8);
  const auto perms = finite_weyl_elements(gl4);
  for (int t = 0; t < 500; ++t) {
    const DominantCochar d{gl4, random_dominant_mu(gl4, rng(), 3)};
    RatVec x{Vec(4), 2};
    for (auto& v : x.num) v = num(rng);
    // prefix and suffix forms agree
    CHECK(conv_hull_member_gl(d, x) == conv_hull_member_gl_suffix(d, x));
    // membership is invariant under the Weyl action on x
    RatVec y{permute(perms[rng() % perms.size()], x.num), x.den};
    CHECK(conv_hull_member_gl(d, x) == conv_hull_member_gl(d, y));
  }
}

TEST_CASE("GSp orbit hull membership") {
  const GroupContext gsp2 = GroupContext::gsp(2);
  const DominantCochar mu = make_dominant(gsp2, {2, 1, 1, 0});
  CHECK(conv_hull_member_gsp(mu, RatVec::integral(mu.entries)));
  CHECK(conv_hull_member_gsp(mu, RatVec::integral({1, 1, 1, 1})));
  CHECK(conv_hull_member_gsp(mu, RatVec{{3, 2, 2, 1}, 2}));  // midpoint, halves
  CHECK_FALSE(conv_hull_member_gsp(mu, RatVec::integral({2, 2, 0, 0})));  // off the apartment

  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long long> num(-8, 8);
  const GroupContext gl4 = GroupContext::gl(4);
  for (int t = 0; t < 500; ++t) {
    const Vec mv = random_dominant_mu(gsp2, rng(), 3);
    const DominantCochar d{gsp2, mv};
    const DominantCochar d_gl{gl4, mv};
    RatVec x{Vec(4), 2};
    const long long c = num(rng);
    for (int j = 0; j < 2; ++j) {
      x.num[j] = num(rng);
      x.num[3 - j] = c - x.num[j];
    }
    CHECK(conv_hull_member_gsp(d, x) == conv_hull_member_gsp_suffix(d, x));
    // the restricted hull is the GL hull cut down to the apartment
    const bool gl_and_c =
        conv_hull_member_gl(d_gl, x) && x.num.front() + x.num.back() == (mv.front() + mv.back()) * x.den;
    CHECK(conv_hull_member_gsp(d, x) == gl_and_c);
  }
}

TEST_CASE("vertexwise permissibility") {
  const GroupContext gsp1 = GroupContext::gsp(1);
  const LevelStructure I = make_level(gsp1, {0, 1});
  const DominantCochar mu = make_dominant(gsp1, {2, 0});
  // rotation-type element: passes at both base vertices
  const WeylElement w = make_element(gsp1, {2, 1}, {1, 1});
  CHECK(is_mu_permissible(w, mu, I));
  CHECK(is_mu_permissible(translation(gsp1, {2, 0}), mu, I));
  CHECK(is_mu_permissible(translation(gsp1, {0, 2}), mu, I));
  CHECK(is_mu_permissible(translation(gsp1, {1, 1}), mu, I));
  // a translation outside the hull fails at the origin vertex
  CHECK_FALSE(is_mu_permissible(translation(gsp1, {3, -1}), mu, I));
  // and a class mismatch fails outright
  CHECK_FALSE(is_mu_permissible(translation(gsp1, {1, 0}),
                                make_dominant(gsp1, {2, 0}), I));
}

TEST_CASE("admissibility membership") {
  BruhatCache cache;
  const GroupContext gu1 = GroupContext::gu(1);
  const LevelStructure I = make_level(gu1, {0, 1});
  const Vec mu = minuscule_mu(gu1, 1);  // (2,1,0)
  CHECK(is_mu_admissible(translation(gu1, mu), mu, I, &cache));
  CHECK(is_mu_admissible(translation(gu1, {0, 1, 2}), mu, I, &cache));
  CHECK(is_mu_admissible(translation(gu1, {1, 1, 1}), mu, I, &cache));
  // stabilizer-class mismatch
  CHECK_FALSE(is_mu_admissible(translation(gu1, {2, 2, 2}), mu, I, &cache));
}

TEST_CASE("admissible set cardinalities match the independent oracle") {
  BruhatCache cache;
  const GroupContext gl2 = GroupContext::gl(2);
  const LevelStructure iw = iwahori_level(gl2);
  CHECK(enumerate_admissible(gl2, {1, 0}, iw, &cache).size() == 3);
  CHECK(enumerate_admissible(gl2, {2, 0}, iw, &cache).size() == 5);
  CHECK(enumerate_admissible(gl2, {1, 1}, iw, &cache).size() == 1);
  // independent subword-oracle counts for the same sets
  CHECK(oracle::closure({translation(gl2, {1, 0}), translation(gl2, {0, 1})}).size() == 3);
  CHECK(oracle::closure({translation(gl2, {2, 0}), translation(gl2, {0, 2})}).size() == 5);
  CHECK(oracle::closure({translation(gl2, {1, 1})}).size() == 1);
  // degenerate cocharacter
  CHECK(enumerate_admissible(gl2, {0, 0}, iw, &cache) == CosetSet{identity(gl2)});
}

TEST_CASE("classical stratification counts") {
  // Iwahori-level admissible sets whose cardinalities are classical; each is
  // recomputed here with the independent subword oracle before asserting.
  BruhatCache cache;
  auto adm_and_oracle = [&](const GroupContext& ctx, Vec mu, std::size_t expect) {
    std::vector<WeylElement> seeds;
    for (const Vec& v : weyl_orbit(ctx, mu)) seeds.push_back(translation(ctx, v));
    CHECK(oracle::closure(seeds).size() == expect);
    CHECK(enumerate_admissible(ctx, mu, iwahori_level(ctx), &cache).size() == expect);
  };
  adm_and_oracle(GroupContext::gl(2), {1, 0}, 3);
  adm_and_oracle(GroupContext::gl(3), {1, 0, 0}, 7);
  adm_and_oracle(GroupContext::gl(4), {1, 0, 0, 0}, 15);
  adm_and_oracle(GroupContext::gl(5), {1, 0, 0, 0, 0}, 31);
  adm_and_oracle(GroupContext::gl(4), {1, 1, 0, 0}, 33);
  adm_and_oracle(GroupContext::gsp(2), {1, 1, 0, 0}, 13);
  adm_and_oracle(GroupContext::gsp(3), {1, 1, 1, 0, 0, 0}, 79);
}

TEST_CASE("closure projection equals the direct coset filter") {
  BruhatCache cache;
  for (int m = 1; m <= 2; ++m) {
    const GroupContext ctx = GroupContext::gsp(m);
    for (int s = 0; s <= m; ++s) {
      const Vec mu = minuscule_mu(ctx, s);
      for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
        const LevelStructure I = make_level(ctx, I_set);
        const CosetSet via_projection = enumerate_admissible(ctx, mu, I, &cache);
        std::vector<WeylElement> direct;
        for (const auto& w : coset_universe(ctx, mu, I, 2))
          if (is_mu_admissible(w, mu, I, &cache)) direct.push_back(w);
        CHECK(via_projection == canonicalize(std::move(direct)));
      }
    }
  }
}

TEST_CASE("GL closure projection equals the direct coset filter") {
  BruhatCache cache;
  const GroupContext gl = GroupContext::gl(4);
  for (int k = 0; k < 3; ++k) {
    const Vec mu = random_dominant_mu(gl, 400 + k, 2);
    for (const auto& I_set : {std::vector<int>{0}, std::vector<int>{1, 3}}) {
      const LevelStructure I = make_level(gl, I_set);
      const CosetSet via_projection = enumerate_admissible(gl, mu, I, &cache);
      std::vector<WeylElement> direct;
      for (const auto& w : coset_universe(gl, mu, I, 2))
        if (is_mu_admissible(w, mu, I, &cache)) direct.push_back(w);
      CHECK(via_projection == canonicalize(std::move(direct)));
    }
  }
}

TEST_CASE("admissible sets sit inside permissible sets") {
  BruhatCache cache;
  for (int m = 1; m <= 2; ++m) {
    for (int k = 0; k < 6; ++k) {
      // GSp and its GL shadow
      const GroupContext gsp = GroupContext::gsp(m);
      const GroupContext gl = GroupContext::gl(2 * m);
      const Vec mu_sp = random_dominant_mu(gsp, 1000 + k, 3);
      const Vec mu_gl = random_dominant_mu(gl, 2000 + k, 3);
      for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
        const LevelStructure I = make_level(gsp, I_set);
        const DominantCochar dom_sp = make_dominant(gsp, mu_sp);
        for (const auto& w : enumerate_admissible(gsp, mu_sp, I, &cache))
          CHECK(is_mu_permissible(w, dom_sp, I));
        const LevelStructure I_gl = gl_pm_level(gl, I);
        const DominantCochar dom_gl = make_dominant(gl, mu_gl);
        for (const auto& w : enumerate_admissible(gl, mu_gl, I_gl, &cache))
          CHECK(is_mu_permissible(w, dom_gl, I_gl));
      }
      // GU via an even-invariant cocharacter
      const GroupContext gu = GroupContext::gu(m);
      const Vec mu_gu = random_dominant_mu(gu, 3000 + k, 3);
      const DominantCochar dom_gu = make_dominant(gu, mu_gu);
      const LevelStructure I = make_level(gu, {0});
      for (const auto& w : enumerate_admissible(gu, mu_gu, I, &cache))
        CHECK(is_mu_permissible(w, dom_gu, I));
    }
  }
}

TEST_CASE("wedge sets transfer through the GU -> GSp embedding") {
  const int m = 2;
  const GroupContext gu = GroupContext::gu(m);
  const GroupContext gsp = GroupContext::gsp(m);
  for (int s = 0; s <= m; ++s)
    for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
      const LevelStructure I = make_level(gu, I_set);
      const CosetSet gu_set = enumerate_wedge(gu, I, s);
      const CosetSet gsp_set = enumerate_wedge(gsp, I, s);
      std::vector<WeylElement> image;
      for (const auto& w : gu_set) image.push_back(embed_gu_to_gsp(w));
      CHECK(canonicalize(std::move(image)) == gsp_set);
      // pointwise agreement as well
      std::mt19937_64 rng(71);
      for (int t = 0; t < 20; ++t) {
        const WeylElement w = random_element(gu, rng, 1);
        CHECK(is_wedge_permissible(w, I, s) ==
              is_wedge_permissible(embed_gu_to_gsp(w), I, s));
      }
    }
}

TEST_CASE("the enumeration box is exhaustive") {
  // a strictly larger candidate box must not find new members
  const GroupContext gu2 = GroupContext::gu(2);
  const Vec mu = minuscule_mu(gu2, 1);
  for (const auto& I_set : {std::vector<int>{0, 1}, std::vector<int>{2}}) {
    const LevelStructure I = make_level(gu2, I_set);
    const CosetSet tight = enumerate_wedge(gu2, I, 1);
    std::vector<WeylElement> wide;
    for (const auto& w : coset_universe(gu2, mu, I, 3))
      if (is_wedge_permissible(w, I, 1)) wide.push_back(w);
    CHECK(tight == canonicalize(std::move(wide)));
  }
}

TEST_CASE("wedge sets equal admissible sets directly in GSp") {
  BruhatCache cache;
  for (int m = 1; m <= 2; ++m) {
    const GroupContext gsp = GroupContext::gsp(m);
    for (int s = 0; s <= m; ++s)
      for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
        const LevelStructure I = make_level(gsp, I_set);
        CHECK(enumerate_wedge(gsp, I, s) ==
              enumerate_admissible(gsp, minuscule_mu(gsp, s), I, &cache));
      }
  }
}

TEST_CASE("double-coset admissibility agrees with the direct definition") {
  BruhatCache cache;
  for (int m = 1; m <= 2; ++m) {
    const GroupContext gsp = GroupContext::gsp(m);
    for (int s = 0; s <= m; ++s) {
      const Vec mu = minuscule_mu(gsp, s);
      for (const auto& I_set : testutil::nonempty_subsets_upto(m)) {
        const LevelStructure I = make_level(gsp, I_set);
        const ParahoricSubgroup P = parahoric(gsp, I);
        const CosetSet via_projection =
            to_double_cosets(enumerate_admissible(gsp, mu, I, &cache), I);
        // direct definition: below some translate of mu in the double-coset order
        std::vector<WeylElement> seeds;
        for (const Vec& v : weyl_orbit(gsp, mu)) seeds.push_back(translation(gsp, v));
        std::vector<WeylElement> direct;
        for (const auto& w : to_double_cosets(coset_universe(gsp, mu, I, 2), I)) {
          for (const auto& t : seeds)
            if (bruhat_leq_cosets(w, t, P, P, &cache)) {
              direct.push_back(w);
              break;
            }
        }
        CHECK(via_projection == canonicalize(std::move(direct)));
      }
    }
  }
}

TEST_CASE("double coset projections are coarser") {
  BruhatCache cache;
  const GroupContext gsp2 = GroupContext::gsp(2);
  const LevelStructure I = make_level(gsp2, {0, 1});
  const CosetSet single = enumerate_admissible(gsp2, minuscule_mu(gsp2, 1), I, &cache);
  const CosetSet dbl = to_double_cosets(single, I);
  CHECK(dbl.size() <= single.size());
  CHECK(!dbl.empty());
  const ParahoricSubgroup P = parahoric(gsp2, I);
  for (const auto& w : dbl) CHECK(min_length_rep(w, P, P) == w);
}
