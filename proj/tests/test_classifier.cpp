#include <catch2/catch_amalgamated.hpp>

#include "paralie/classifier.hpp"

using namespace paralie;

TEST_CASE("symmetric R-spaces per type") {
  for (int k = 2; k <= 9; ++k) {
    auto nodes = symmetric_rspaces({{'C', k}});
    CHECK(nodes == std::vector<int>{k}); // the long node alone
    auto an = symmetric_rspaces({{'A', k}});
    CHECK(static_cast<int>(an.size()) == k); // any node
  }
  CHECK(symmetric_rspaces({{'E', 8}}).empty());
  CHECK(symmetric_rspaces({{'F', 4}}).empty());
  CHECK(symmetric_rspaces({{'G', 2}}).empty());
  CHECK(symmetric_rspaces({{'B', 5}}) == std::vector<int>{1});
  CHECK(symmetric_rspaces({{'D', 6}}) == std::vector<int>{1, 5, 6});
  CHECK(symmetric_rspaces({{'E', 6}}) == std::vector<int>{1, 5});
  CHECK(symmetric_rspaces({{'E', 7}}) == std::vector<int>{1});
}

TEST_CASE("self duality verdicts") {
  for (int m = 2; m <= 5; ++m) {
    RootSystem a(LieType{{'A', 2 * m - 1}});
    for (int i = 1; i <= 2 * m - 1; ++i)
      CHECK(is_self_dual(Parabolic(a, {i})) == (i == m));
  }
  RootSystem a4({{'A', 4}});
  for (int i = 1; i <= 4; ++i) CHECK_FALSE(is_self_dual(Parabolic(a4, {i})));

  RootSystem e6({{'E', 6}});
  CHECK_FALSE(is_self_dual(Parabolic(e6, {1})));
  CHECK_FALSE(is_self_dual(Parabolic(e6, {5})));
  RootSystem e7({{'E', 7}});
  CHECK(is_self_dual(Parabolic(e7, {1})));

  RootSystem d8({{'D', 8}});
  CHECK(is_self_dual(Parabolic(d8, {8})));
  CHECK(is_self_dual(Parabolic(d8, {1})));
  RootSystem d7({{'D', 7}});
  CHECK_FALSE(is_self_dual(Parabolic(d7, {7})));
  CHECK(is_self_dual(Parabolic(d7, {1})));

  for (int k = 2; k <= 9; ++k) {
    RootSystem c({{'C', k}});
    CHECK(is_self_dual(Parabolic(c, {k})));
  }
  RootSystem g2({{'G', 2}});
  CHECK_THROWS(is_self_dual(Parabolic(g2, {1}))); // not abelian
}

TEST_CASE("isotropy diagrams") {
  RootSystem e6({{'E', 6}});
  auto iso6 = isotropy(Parabolic(e6, {5}));
  CHECK(iso6.rs.lie_type() == LieType{{'D', 5}}); // so(10,C)

  RootSystem e7({{'E', 7}});
  auto iso7 = isotropy(Parabolic(e7, {1}));
  CHECK(iso7.rs.lie_type() == LieType{{'E', 6}});
  CHECK(iso7.W_hw == parse_weight("1,0,0,0,0,0"));
  CHECK(iso7.p_crossed == std::set<int>{5});
  CHECK(iso7.killing_scale == 1);

  for (int n = 2; n <= 5; ++n) {
    RootSystem c({{'C', n + 1}});
    auto iso = isotropy(Parabolic(c, {n + 1}));
    CHECK(iso.rs.lie_type() == LieType{{'A', n}});
    CHECK(iso.p_crossed == std::set<int>{n});
    Weight two(n, Rat(0));
    two[0] = 2;
    CHECK(iso.W_hw == two);
    CHECK(iso.killing_scale == rat(1, 2)); // iso roots are short in sp(2n+2)
  }

  RootSystem a5({{'A', 5}});
  auto isoA = isotropy(Parabolic(a5, {3}));
  CHECK(isoA.rs.lie_type() == LieType{{'A', 2}, {'A', 2}});
  CHECK(isoA.W_hw == parse_weight("1,0,1,0"));
  CHECK(isoA.p_crossed == std::set<int>{2, 4});

  RootSystem d6({{'D', 6}});
  auto isoD = isotropy(Parabolic(d6, {6}));
  CHECK(isoD.rs.lie_type() == LieType{{'A', 5}});
  CHECK(isoD.W_hw == parse_weight("0,1,0,0,0"));
  CHECK(isoD.p_crossed == std::set<int>{4}); // penultimate node
}

TEST_CASE("strongly orthogonal sequences") {
  // sl(2n+2) with the middle node crossed: beta_i = alpha_{n+1-i}+...+alpha_{n+1+i}
  for (int n = 1; n <= 3; ++n) {
    int k = n + 1;
    RootSystem a(LieType{{'A', 2 * n + 1}});
    Parabolic q(a, {k});
    auto seq = strongly_orthogonal_seq(q);
    REQUIRE(static_cast<int>(seq.betas.size()) == n + 1);
    for (int i = 0; i <= n; ++i) {
      const Root& b = seq.betas[n - i]; // betas run highest first
      IntVec expect(2 * n + 1, 0);
      for (int j = k - i; j <= k + i; ++j) expect[j - 1] = 1;
      CHECK(b.simple == expect);
    }
  }
  for (int k = 3; k <= 7; ++k) {
    RootSystem b({{'B', k}});
    CHECK(strongly_orthogonal_seq(Parabolic(b, {1})).betas.size() == 2);
    RootSystem c({{'C', k}});
    CHECK(strongly_orthogonal_seq(Parabolic(c, {k})).betas.size() == static_cast<std::size_t>(k));
  }
  // non-self-dual input is rejected through beta_0 != alpha_r
  RootSystem a5({{'A', 5}});
  CHECK_THROWS(strongly_orthogonal_seq(Parabolic(a5, {2})));
}

TEST_CASE("parameters (r, n)") {
  for (int n = 1; n <= 6; ++n) {
    RootSystem c({{'C', n + 1}});
    CHECK(parameters(Parabolic(c, {n + 1})) == std::pair<long, long>{1, n});
  }
  for (int n = 1; n <= 3; ++n) {
    RootSystem d(LieType{{'D', 2 * n + 2}});
    CHECK(parameters(Parabolic(d, {2 * n + 2})) == std::pair<long, long>{4, n});
    RootSystem a(LieType{{'A', 2 * n + 1}});
    CHECK(parameters(Parabolic(a, {n + 1})) == std::pair<long, long>{2, n});
  }
  RootSystem e7({{'E', 7}});
  CHECK(parameters(Parabolic(e7, {1})) == std::pair<long, long>{8, 2});
  for (int k = 2; k <= 8; ++k) {
    RootSystem b({{'B', k}});
    CHECK(parameters(Parabolic(b, {1})) == std::pair<long, long>{2 * k - 3, 1});
  }
  for (int k = 4; k <= 8; ++k) {
    RootSystem d({{'D', k}});
    CHECK(parameters(Parabolic(d, {1})) == std::pair<long, long>{2 * k - 4, 1});
  }
}

TEST_CASE("Peirce line audit") {
  // exactly one height-one root pairs to 2 with each beta_i
  for (const auto& [lt, node] : std::vector<std::pair<LieType, int>>{
           {{{'C', 4}}, 4}, {{{'A', 5}}, 3}, {{{'D', 6}}, 6}, {{{'E', 7}}, 1}, {{{'B', 5}}, 1}}) {
    RootSystem h(lt);
    Parabolic q(h, {node});
    auto seq = strongly_orthogonal_seq(q);
    for (const auto& b : seq.betas) {
      long count = 0;
      for (const auto& alpha : h.positive_roots())
        if (q.sigma_height(alpha) == 1 &&
            h.pairing(to_weight(alpha.fw), to_weight(b.fw)) == 2)
          ++count;
      CHECK(count == 1);
    }
  }
}

TEST_CASE("ppg records and dimension table") {
  RootSystem e7({{'E', 7}});
  auto rec = ppg_record(Parabolic(e7, {1}));
  CHECK(rec.family == "E7");
  CHECK(rec.dims.dim_W == 27);
  CHECK(rec.dims.dim_gp == 16);
  CHECK(rec.dims.dim_B == 10);
  CHECK(rec.dims.half_r_np1 == 12);
  CHECK(rec.grading_eigs == std::array<Rat, 3>{rat(2, 3), rat(-1, 3), rat(-4, 3)});
  CHECK(rec.w_conjecture == 8);

  for (int n = 1; n <= 3; ++n) {
    RootSystem a(LieType{{'A', 2 * n + 1}});
    auto r = ppg_record(Parabolic(a, {n + 1}));
    CHECK(r.family == "A");
    CHECK(r.dims.dim_W == (n + 1) * (n + 1));
    CHECK(r.dims.dim_gp == 2 * n);
    CHECK(r.dims.dim_B == n * n);
    CHECK(r.dims.half_r_np1 == n + 1);
  }
  for (int np = 1; np <= 5; ++np) { // BD_{n+4}: so(n+4), dims (n+2, n, 1, n)
    LieType lt = (np % 2 == 1) ? LieType{{'B', (np + 3) / 2}} : LieType{{'D', (np + 4) / 2}};
    RootSystem h(lt);
    auto r = ppg_record(Parabolic(h, {1}));
    CHECK(r.family == "BD");
    CHECK(r.r == np);
    CHECK(r.n == 1);
    CHECK(r.dims.dim_W == np + 2);
    CHECK(r.dims.dim_gp == np);
    CHECK(r.dims.dim_B == 1);
    CHECK(r.dims.half_r_np1 == np);
  }
  // the L-isomorphism as a geometric-weight identity
  for (const auto& [lt, node] : std::vector<std::pair<LieType, int>>{
           {{{'C', 4}}, 4}, {{{'A', 5}}, 3}, {{{'D', 6}}, 6}, {{{'E', 7}}, 1}, {{{'B', 4}}, 1}}) {
    RootSystem h(lt);
    Parabolic q(h, {node});
    auto r = ppg_record(q);
    Isotropy iso = isotropy(q);
    auto wd = wdual_components(q, iso);
    Parabolic p(iso.rs, iso.p_crossed);
    CHECK(r.dims.half_r_np1 * p.geometric_weight(wd.top) == r.r * r.n);
  }
}

TEST_CASE("classification up to rank nine") {
  auto recs = classify_all(9);
  std::map<std::string, int> by_family;
  for (const auto& r : recs) {
    by_family[r.family] += 1;
    CHECK(r.self_dual);
    if (r.family == "C") CHECK(r.r == 1);
    if (r.family == "A") CHECK(r.r == 2);
    if (r.family == "D") CHECK(r.r == 4);
    if (r.family == "E7") CHECK((r.r == 8 && r.n == 2));
    if (r.family == "BD") CHECK(r.n == 1);
    CHECK_FALSE(r.real_forms.empty());
  }
  CHECK(by_family["C"] == 8);           // C_2..C_9
  CHECK(by_family["A"] == 4);           // A_3, A_5, A_7, A_9
  CHECK(by_family["D"] == 3);           // D_4, D_6, D_8 spin
  CHECK(by_family["E7"] == 1);
  CHECK(by_family["BD"] == 8 + 7);      // B_2..B_9 and D_3..D_9 first node
  CHECK(by_family.size() == 5);         // nothing else: no E6, E8, F4, G2

  // stability under rank extension
  auto recs11 = classify_all(11);
  for (const auto& r : recs) {
    bool found = false;
    for (const auto& s : recs11)
      if (s.big_type == r.big_type && s.q_crossed == r.q_crossed) {
        found = true;
        CHECK(s.r == r.r);
        CHECK(s.n == r.n);
        CHECK(s.dims.dim_W == r.dims.dim_W);
      }
    CHECK(found);
  }
}

TEST_CASE("graded components match the appendix tables") {
  // type C row of the W and W* tables
  RootSystem c4({{'C', 4}});
  Parabolic q(c4, {4});
  Isotropy iso = isotropy(q);
  auto w = w_components(q, iso);
  CHECK(w.top == parse_weight("2,0,0"));
  REQUIRE(w.mid.size() == 1);
  CHECK(w.mid[0] == parse_weight("1,0,-1"));
  CHECK(w.bot == parse_weight("0,0,-2"));
  auto wd = wdual_components(q, iso);
  CHECK(wd.top == parse_weight("0,0,2"));
  CHECK(wd.mid[0] == parse_weight("0,1,0"));
  CHECK(wd.bot == parse_weight("0,2,-2"));

  // type E7 row
  RootSystem e7({{'E', 7}});
  Parabolic q7(e7, {1});
  Isotropy iso7 = isotropy(q7);
  auto w7 = w_components(q7, iso7);
  CHECK(w7.top == parse_weight("1,0,0,0,0,0"));
  CHECK(w7.mid[0] == parse_weight("0,0,0,0,-1,1"));
  CHECK(w7.bot == parse_weight("0,0,0,0,-1,0"));
  auto wd7 = wdual_components(q7, iso7);
  CHECK(wd7.top == parse_weight("0,0,0,0,1,0"));
  CHECK(wd7.mid[0] == parse_weight("0,0,0,1,-1,0")); // 27* hw minus alpha_5
  CHECK(wd7.bot == parse_weight("1,0,0,0,-1,0"));

  // type D row: A_{2n+1} with the penultimate node crossed
  RootSystem d6({{'D', 6}});
  Parabolic qd(d6, {6});
  Isotropy isod = isotropy(qd);
  auto wD = w_components(qd, isod);
  CHECK(wD.top == parse_weight("0,1,0,0,0"));
  CHECK(wD.mid[0] == parse_weight("1,0,0,-1,1"));
  CHECK(wD.bot == parse_weight("0,0,0,-1,0"));
  auto wdD = wdual_components(qd, isod);
  CHECK(wdD.top == parse_weight("0,0,0,1,0"));
  CHECK(wdD.mid[0] == parse_weight("0,0,1,-1,1"));

  // type BD row: so(n+2) with the first node crossed
  RootSystem b4({{'B', 4}});
  Parabolic qb(b4, {1});
  Isotropy isob = isotropy(qb);
  auto wB = w_components(qb, isob);
  CHECK(wB.top == parse_weight("1,0,0"));
  CHECK(wB.mid[0] == parse_weight("-1,1,0"));
  CHECK(wB.bot == parse_weight("-1,0,0"));

  // type A row: two middle components, conjugate to each other
  RootSystem a5({{'A', 5}});
  Parabolic qa(a5, {3});
  Isotropy isoa = isotropy(qa);
  auto wA = w_components(qa, isoa);
  CHECK(wA.top == parse_weight("1,0,1,0"));
  REQUIRE(wA.mid.size() == 2);
  CHECK(wA.bot == parse_weight("0,-1,0,-1"));
}

TEST_CASE("quabla scalars across the five families") {
  std::vector<std::pair<LieType, int>> cases;
  for (int n = 1; n <= 6; ++n) cases.push_back({{{'C', n + 1}}, n + 1});
  for (int n = 1; n <= 3; ++n) cases.push_back({{{'A', 2 * n + 1}}, n + 1});
  for (int n = 1; n <= 3; ++n) cases.push_back({{{'D', 2 * n + 2}}, 2 * n + 2});
  cases.push_back({{{'E', 7}}, 1});
  for (int np = 1; np <= 6; ++np)
    cases.push_back({(np % 2 == 1) ? LieType{{'B', (np + 3) / 2}} : LieType{{'D', (np + 4) / 2}}, 1});

  for (const auto& [lt, node] : cases) {
    RootSystem h(lt);
    Parabolic q(h, {node});
    auto [r, n] = parameters(q);
    Isotropy iso = isotropy(q);
    auto s = spectral_data(q, iso);
    CHECK(s.on_W[0] == 0);
    CHECK(s.on_W[1] == rat(r * n - r + 2, 2));
    CHECK(s.on_W[2] == r * n);
    CHECK(s.on_Wd[0] == 0);
    CHECK(s.on_Wd[1] == 1);
    CHECK(s.on_Wd[2] == r);
    CHECK(s.on_Bstar == rat(r * n + 3 * r - 4, 2));
  }
}

TEST_CASE("quadric representation U*") {
  RootSystem c4({{'C', 4}});
  auto u = udual_data(Parabolic(c4, {4}));
  CHECK(u.U_hw == parse_weight("0,2,0")); // Cartan^2 Lambda^2
  CHECK(u.dim_check);

  RootSystem e7({{'E', 7}});
  auto u7 = udual_data(Parabolic(e7, {1}));
  CHECK(u7.U_hw == parse_weight("1,0,0,0,0,0")); // U* isomorphic to W
  CHECK(u7.dim_U == 27);

  RootSystem b5({{'B', 5}});
  auto ub = udual_data(Parabolic(b5, {1}));
  CHECK(ub.dim_U == 1); // trivial
  CHECK(is_zero(ub.U_hw));

  RootSystem a5({{'A', 5}});
  auto ua = udual_data(Parabolic(a5, {3}));
  CHECK(ua.U_hw == parse_weight("1,0,1,0"));
  CHECK(ua.dim_U == 9);

  RootSystem d6({{'D', 6}});
  auto ud = udual_data(Parabolic(d6, {6}));
  CHECK(ud.U_hw == parse_weight("0,1,0,0,0")); // Lambda^4 C^6* = Lambda^2 C^6
  CHECK(ud.dim_U == 15);
}
