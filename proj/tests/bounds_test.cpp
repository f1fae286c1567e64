#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symgeo/bounds.hpp>
#include <symgeo/presentation.hpp>

#include <optional>
#include <string>

using namespace symgeo;

namespace {

const Contribution* find(const BoundReport& r, const std::string& name) {
  for (const Contribution& c : r.contributions)
    if (c.name == name) return &c;
  return nullptr;
}

BoundReport family(const GroupFamily& f, Target t = Target::chi) {
  return family_report(f, t);
}

}  // namespace

TEST_CASE("elementary bound operations") {
  CHECK(betti_lower(0, 0) == 2);
  CHECK(betti_lower(2, 1) == -1);
  CHECK(betti_lower(9, 36) == 20);

  CHECK(chi_sigma_lower(0) == 4);
  CHECK(chi_sigma_lower(1) == 4);
  CHECK(chi_sigma_lower(2) == 0);
  CHECK(chi_sigma_lower(3) == 0);
  CHECK(chi_sigma_lower(4) == -4);

  CHECK(presentation_upper(0, 0) == std::pair{12LL, -8LL});
  CHECK(presentation_upper(1, 1) == std::pair{36LL, -24LL});
  CHECK(presentation_upper(2, 1) == std::pair{48LL, -32LL});
}

TEST_CASE("surface system upper bound") {
  CHECK(gompf_surface_upper(10, 136, false) == std::pair{3396LL, -2264LL});
  CHECK(gompf_surface_upper(0, 0, false) == std::pair{12LL, -8LL});
  CHECK(gompf_surface_upper(0, 0, true) == std::pair{24LL, -16LL});
  CHECK(gompf_surface_upper(10, 136, true) == std::pair{6792LL, -4528LL});
  CHECK_THROWS_AS(gompf_surface_upper(-1, 0, false), std::invalid_argument);
  CHECK_THROWS_AS(gompf_surface_upper(0, -2, false), std::invalid_argument);
}

TEST_CASE("small summand upper bound") {
  CHECK(small_summand_upper(12, 12, 1, 1) == 36);
  CHECK(small_summand_upper(6, 12, 1, 1) == 30);
  CHECK(small_summand_upper(6, 6, 2, 1, true) == 24);
  CHECK_THROWS_AS(small_summand_upper(5, 12, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(small_summand_upper(12, 11, 1, 1), std::invalid_argument);
  CHECK(small_summand_upper(5, 12, 1, 1, true) == 29);

  CHECK_FALSE(small_summand_hypothetical(12, 12));
  CHECK(small_summand_hypothetical(6, 12));
  CHECK(small_summand_hypothetical(12, 11));
}

TEST_CASE("sharpest chi lower bound for free abelian groups") {
  const long long expected[] = {3,  2,  0,  3,  0,  7,  6,  10, 15,
                                20, 28, 36, 44, 55, 66, 78, 91};
  for (long long n = 0; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(free_abelian_chi_lower(n) == expected[n]);
  }
  CHECK_THROWS_AS(free_abelian_chi_lower(-1), std::invalid_argument);

  /* the family report never drops below the dedicated bound */
  for (long long n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto r = family(GroupFamily::free_abelian(n));
    REQUIRE(r.lower.has_value());
    CHECK(*r.lower == free_abelian_chi_lower(n));
  }
}

TEST_CASE("syntactic family recognition") {
  CHECK(recognize_family(parse_presentation("<|>")) == GroupFamily::trivial());
  CHECK(recognize_family(parse_presentation("<x,y,z|>")) ==
        GroupFamily::free_group(3));
  CHECK(recognize_family(parse_presentation("<a|a^5>")) ==
        GroupFamily::cyclic(5));
  CHECK(recognize_family(parse_presentation("<a|a^4, a^6>")) ==
        GroupFamily::cyclic(2));
  CHECK(recognize_family(parse_presentation("<a|a a^-1>")) ==
        GroupFamily::free_abelian(1));
  CHECK(recognize_family(parse_presentation("<x,y|[x,y]>")) ==
        GroupFamily::free_abelian(2));
  CHECK(recognize_family(parse_presentation("<x,y,z|[x,y],[x,z],[y,z]>")) ==
        GroupFamily::free_abelian(3));
  CHECK(recognize_family(
            parse_presentation("<x1,y1,x2,y2|[x1,y1] [x2,y2]>")) ==
        GroupFamily::surface(2));

  /* conservative: anything else must stay unrecognized */
  CHECK_FALSE(recognize_family(parse_presentation("<x,y|x y>")).has_value());
  CHECK_FALSE(recognize_family(parse_presentation("<x,y|x^2 y^3>")).has_value());
  CHECK_FALSE(
      recognize_family(parse_presentation("<x,y,z|[x,y],[x,y],[x,z]>"))
          .has_value());
  CHECK_FALSE(
      recognize_family(parse_presentation("<x1,y1,x2,y2|[x1,y1]>")).has_value());
}

TEST_CASE("trivial group report") {
  const auto r = family(GroupFamily::trivial());
  CHECK(r.lower == 3);
  CHECK(r.upper == 3);
  CHECK(r.exact);
  const Contribution* w = find(r, "projective_plane");
  REQUIRE(w != nullptr);
  REQUIRE(w->witness.has_value());
  CHECK(w->witness->chi == 3);
  CHECK(w->witness->sigma == 1);

  const auto cs = family(GroupFamily::trivial(), Target::chi_plus_sigma);
  CHECK(cs.lower == 4);
  CHECK(cs.upper == 4);
  CHECK(cs.exact);
}

TEST_CASE("free group reports") {
  SUBCASE("rank one") {
    const auto r = family(GroupFamily::free_group(1));
    CHECK(r.lower == 2);
    CHECK(r.upper == 12);
    CHECK_FALSE(r.exact);
    const auto cs = family(GroupFamily::free_group(1), Target::chi_plus_sigma);
    CHECK(cs.lower == 4);
    CHECK(cs.upper == 4);
    CHECK(cs.exact);
  }
  SUBCASE("higher rank keeps the twelve upper") {
    for (long long n = 2; n <= 6; ++n) {
      CAPTURE(n);
      const auto r = family(GroupFamily::free_group(n));
      CHECK(r.upper == 12);
      const Contribution* k = find(r, "kotschick");
      REQUIRE(k != nullptr);
      /* ceil(6(1-n)/5); truncation is the ceiling for negative numerators */
      CHECK(k->value == 6 * (1 - n) / 5);
    }
    /* spot values of the 2 chi + 3 sigma >= 0 improvement */
    CHECK(find(family(GroupFamily::free_group(2)), "kotschick")->value == -1);
    CHECK(find(family(GroupFamily::free_group(3)), "kotschick")->value == -2);
    CHECK(find(family(GroupFamily::free_group(6)), "kotschick")->value == -6);
  }
  SUBCASE("witness really has a free quotient rank") {
    const auto r = family(GroupFamily::free_group(2));
    const Contribution* c = find(r, "dehn_twist_monodromy");
    REQUIRE(c != nullptr);
    REQUIRE(c->witness.has_value());
    CHECK(c->witness->chi == 12);
    CHECK(c->witness->sigma == -8);
    CHECK(c->witness->b1 == 2);
  }
}

TEST_CASE("cyclic group reports") {
  SUBCASE("upper bound depends on the known complex surfaces") {
    for (long long n = 2; n <= 12; ++n) {
      CAPTURE(n);
      const auto r = family(GroupFamily::cyclic(n));
      CHECK(r.lower == 3);
      const long long expected_upper =
          (n == 2 || n == 4) ? 11 : (n == 5 || n == 8) ? 10 : 12;
      CHECK(r.upper == expected_upper);
      CHECK_FALSE(r.exact);
      const auto cs = family(GroupFamily::cyclic(n), Target::chi_plus_sigma);
      CHECK(cs.lower == 4);
      CHECK(cs.upper == 4);
      CHECK(cs.exact);
    }
  }
  SUBCASE("complex surface witnesses") {
    const auto r5 = family(GroupFamily::cyclic(5));
    const Contribution* c = find(r5, "complex_surface");
    REQUIRE(c != nullptr);
    CHECK(c->value == 10);
    CHECK(c->citation.find("Catanese") != std::string::npos);
    REQUIRE(c->witness.has_value());
    CHECK(c->witness->minimal == Tri::yes);
    CHECK(c->witness->chi + c->witness->sigma == 4);

    CHECK(find(family(GroupFamily::cyclic(2)), "complex_surface")
              ->citation.find("Barlow") != std::string::npos);
    CHECK(find(family(GroupFamily::cyclic(4)), "complex_surface")
              ->citation.find("Godeaux") != std::string::npos);
    CHECK(find(family(GroupFamily::cyclic(8)), "complex_surface")
              ->citation.find("Reid") != std::string::npos);
    CHECK(find(family(GroupFamily::cyclic(3)), "complex_surface") == nullptr);
  }
  SUBCASE("monodromy witness matches the group") {
    const auto r = family(GroupFamily::cyclic(7));
    const Contribution* c = find(r, "torus_monodromy");
    REQUIRE(c != nullptr);
    REQUIRE(c->witness.has_value());
    CHECK(c->witness->pi1.abelianization() ==
          (AbelianInvariants{0, {Int(7)}}));
  }
}

TEST_CASE("free abelian reports") {
  SUBCASE("even rank via symmetric squares") {
    const auto r2 = family(GroupFamily::free_abelian(2));
    CHECK(r2.lower == 0);
    CHECK(r2.upper == 0);
    CHECK(r2.exact);
    REQUIRE(find(r2, "ruled_surface") != nullptr);

    const auto r4 = family(GroupFamily::free_abelian(4));
    CHECK(r4.lower == 0);
    CHECK(r4.upper == 0);
    CHECK(r4.exact);
    REQUIRE(find(r4, "four_torus") != nullptr);
    CHECK(find(r4, "symmetric_square")->value == 1);

    const auto r6 = family(GroupFamily::free_abelian(6));
    CHECK(r6.lower == 6);
    CHECK(r6.upper == 6);
    CHECK(r6.exact);
    CHECK(find(r6, "symmetric_square")->witness->b1 == 6);

    const auto r8 = family(GroupFamily::free_abelian(8));
    CHECK(r8.lower == 15);
    CHECK(r8.upper == 3 - 16 + 28);  // Sym2(4) meets the lower bound
    CHECK(r8.exact);
  }
  SUBCASE("odd rank via helper sums") {
    const auto r1 = family(GroupFamily::free_abelian(1));
    CHECK(r1.lower == 2);
    CHECK(r1.upper == 12);

    const auto r3 = family(GroupFamily::free_abelian(3));
    CHECK(r3.lower == 3);
    CHECK(r3.upper == 12);
    REQUIRE(find(r3, "metabolizer") != nullptr);
    const Contribution* t4 = find(r3, "four_torus_helper_sum");
    REQUIRE(t4 != nullptr);
    REQUIRE(t4->witness.has_value());
    CHECK(t4->witness->pi1.abelianization() == AbelianInvariants{3, {}});

    const auto r5 = family(GroupFamily::free_abelian(5));
    CHECK(r5.lower == 7);
    CHECK(r5.upper == 18);
    const Contribution* h = find(r5, "symmetric_square_helper_sum");
    REQUIRE(h != nullptr);
    CHECK(h->witness->pi1.abelianization() == AbelianInvariants{5, {}});
  }
  SUBCASE("chi plus sigma") {
    const long long exact_value[] = {0, 4, 0, 4, 0, 8};
    for (long long n = 1; n <= 5; ++n) {
      CAPTURE(n);
      const auto r =
          family(GroupFamily::free_abelian(n), Target::chi_plus_sigma);
      CHECK(r.exact);
      CHECK(r.upper == exact_value[n]);
    }
    const auto r6 =
        family(GroupFamily::free_abelian(6), Target::chi_plus_sigma);
    CHECK(r6.lower == 0);
    CHECK(r6.upper == 4);
    CHECK_FALSE(r6.exact);
  }
}

TEST_CASE("surface group report") {
  const auto r = family(GroupFamily::surface(2));
  CHECK(r.lower == -5);
  CHECK(r.upper == 72);
  const Contribution* c = find(r, "relator_fiber_sum");
  REQUIRE(c != nullptr);
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->chi == 72);
  CHECK(c->witness->pi1.abelianization() == AbelianInvariants{4, {}});
}

TEST_CASE("mixed abelian reports") {
  SUBCASE("small shapes reach the torus bundle sums") {
    const auto r = family(GroupFamily::abelian_sum({2, 4}));
    CHECK(r.lower == 3);
    CHECK(r.upper == 12);
    const auto cs =
        family(GroupFamily::abelian_sum({2, 4}), Target::chi_plus_sigma);
    CHECK(cs.lower == 4);
    CHECK(cs.upper == 4);
    CHECK(cs.exact);
  }
  SUBCASE("rank two with torsion") {
    const auto r = family(GroupFamily::abelian_sum({0, 0, 2, 3}));
    CHECK(r.lower == 0);  // cup product parity beats betti = -1
    CHECK(r.upper == 12);
  }
  SUBCASE("large shapes") {
    const auto r = family(GroupFamily::abelian_sum({0, 2, 4, 8}));
    CHECK(r.upper == 24);
    const auto cs =
        family(GroupFamily::abelian_sum({0, 2, 4, 8}), Target::chi_plus_sigma);
    CHECK(cs.upper == 8);
  }
  SUBCASE("uncovered shapes are refused, not guessed") {
    CHECK_THROWS_AS(family(GroupFamily::abelian_sum({2, 2, 2, 2})),
                    std::invalid_argument);
    GroupFamily z3;  // hand-built Z^3 in sum form dodges the normalizer
    z3.kind = FamilyKind::abelian;
    z3.orders = {0, 0, 0};
    CHECK_THROWS_AS(family(z3), std::invalid_argument);
  }
}

TEST_CASE("chi plus sigma congruence is universal") {
  const GroupFamily families[] = {
      GroupFamily::trivial(),       GroupFamily::free_group(3),
      GroupFamily::cyclic(9),       GroupFamily::free_abelian(4),
      GroupFamily::surface(3),      GroupFamily::abelian_sum({2, 4}),
  };
  for (const GroupFamily& f : families) {
    CAPTURE(f.to_string());
    const auto cs = family_report(f, Target::chi_plus_sigma);
    REQUIRE(cs.congruence.has_value());
    CHECK(*cs.congruence == (Congruence{4, 0}));
    const auto chi = family_report(f, Target::chi);
    CHECK_FALSE(chi.congruence.has_value());
  }
}

TEST_CASE("layered reports") {
  SUBCASE("recognized family wins the upper bound") {
    const auto r =
        layered_report(parse_presentation("<x,y|[x,y]>"), Target::chi);
    CHECK(r.lower == 0);
    CHECK(r.upper == 0);
    CHECK(r.exact);
    REQUIRE(find(r, "ruled_surface") != nullptr);
    /* the generic construction is still listed, just not the minimum */
    CHECK(find(r, "relator_fiber_sum")->value == 48);
  }
  SUBCASE("cyclic presentation") {
    const auto r = layered_report(parse_presentation("<a|a^5>"), Target::chi);
    CHECK(r.lower == 3);
    CHECK(r.upper == 10);
    CHECK(find(r, "relator_fiber_sum")->value == 36);
  }
  SUBCASE("single free generator") {
    const auto r = layered_report(parse_presentation("<x|>"), Target::chi);
    CHECK(r.lower == 2);
    CHECK(r.upper == 12);
    const auto cs =
        layered_report(parse_presentation("<x|>"), Target::chi_plus_sigma);
    CHECK(cs.lower == 4);
    CHECK(cs.upper == 4);
    CHECK(cs.exact);
  }
  SUBCASE("unrecognized presentations carry caveats") {
    const auto r =
        layered_report(parse_presentation("<x,y|x^2 y^3>"), Target::chi);
    CHECK(r.lower == 2);  // b1 = 1, parity bound
    CHECK(r.upper == 48);
    REQUIRE(r.caveats.size() == 2);
    CHECK(r.caveats[0].find("b2 of the fundamental group") !=
          std::string::npos);
    CHECK(r.caveats[1].find("not recognized") != std::string::npos);
    const auto cs = layered_report(parse_presentation("<x,y|x^2 y^3>"),
                                   Target::chi_plus_sigma);
    CHECK(cs.caveats.size() == 1);
  }
  SUBCASE("small summand option") {
    LayeredOptions opts;
    opts.small_summands = {{6, 12}};
    const auto r =
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts);
    const Contribution* c = find(r, "small_summands");
    REQUIRE(c != nullptr);
    CHECK(c->value == 30);
    CHECK(c->hypothetical);
    bool caveat = false;
    for (const std::string& s : r.caveats)
      if (s.find("smaller than any known construction") != std::string::npos)
        caveat = true;
    CHECK(caveat);
    CHECK(r.upper == 10);  // the hypothetical value does not beat 10

    opts.small_summands = {{12, 12}};
    const auto r2 =
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts);
    CHECK_FALSE(find(r2, "small_summands")->hypothetical);

    opts.small_summands = {{5, 12}};
    CHECK_THROWS_AS(
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts),
        std::invalid_argument);
    opts.hypothetical_ok = true;
    CHECK(find(layered_report(parse_presentation("<a|a^5>"), Target::chi,
                              opts),
               "small_summands")
              ->value == 29);
  }
  SUBCASE("hypothetical upper below a proven lower is refused") {
    LayeredOptions opts;
    opts.small_summands = {{2, 12}};
    opts.hypothetical_ok = true;
    CHECK_THROWS_AS(
        layered_report(parse_presentation("<|>"), Target::chi, opts),
        std::invalid_argument);
  }
  SUBCASE("surface system option") {
    LayeredOptions opts;
    opts.gompf = LayeredOptions::Gompf{10, 136, false};
    const auto r =
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts);
    CHECK(find(r, "surface_system_sum")->value == 3396);
    bool caveat = false;
    for (const std::string& s : r.caveats)
      if (s.find("edge count") != std::string::npos) caveat = true;
    CHECK(caveat);
  }
  SUBCASE("conjectural inequality flag only adds a caveat") {
    LayeredOptions opts;
    opts.assume_bmy = true;
    const auto r =
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts);
    bool caveat = false;
    for (const std::string& s : r.caveats)
      if (s.find("Bogomolov-Miyaoka-Yau") != std::string::npos) caveat = true;
    CHECK(caveat);
    CHECK(r.upper == 10);
  }
}

TEST_CASE("report rendering") {
  SUBCASE("text") {
    const auto r =
        layered_report(parse_presentation("<x,y|[x,y]>"), Target::chi);
    const std::string text = report_text(r);
    CHECK(text.find("target: chi\n") == 0);
    CHECK(text.find("lower: 0\n") != std::string::npos);
    CHECK(text.find("upper: 0\n") != std::string::npos);
    CHECK(text.find("exact: yes\n") != std::string::npos);
    CHECK(text.find("contributions:\n") != std::string::npos);
    CHECK(text.find("[witness S2xT2: chi=0 sigma=0]") != std::string::npos);
    CHECK(text.find("congruence:") == std::string::npos);

    const auto cs = family(GroupFamily::trivial(), Target::chi_plus_sigma);
    CHECK(report_text(cs).find("congruence: 0 mod 4\n") != std::string::npos);
    CHECK(report_text(cs).find("target: chi+sigma\n") == 0);
  }
  SUBCASE("hypothetical marker") {
    LayeredOptions opts;
    opts.small_summands = {{6, 12}};
    const auto r =
        layered_report(parse_presentation("<a|a^5>"), Target::chi, opts);
    CHECK(report_text(r).find("[hypothetical]") != std::string::npos);
    CHECK(report_text(r).find("caveats:\n") != std::string::npos);
  }
  SUBCASE("json") {
    const auto r =
        layered_report(parse_presentation("<a|a^5>"), Target::chi);
    const nlohmann::json j = report_json(r);
    CHECK(j["target"] == "chi");
    CHECK(j["lower"] == 3);
    CHECK(j["upper"] == 10);
    CHECK(j["exact"] == false);
    CHECK(j["congruence"].is_null());
    REQUIRE(j["contributions"].is_array());
    bool saw_witness = false;
    for (const auto& item : j["contributions"]) {
      CHECK(item.contains("name"));
      CHECK(item.contains("kind"));
      CHECK(item.contains("value"));
      CHECK(item.contains("citation"));
      if (!item["witness"].is_null()) {
        saw_witness = true;
        CHECK(item["witness"].contains("chi"));
        CHECK(item["witness"].contains("pi1"));
      }
    }
    CHECK(saw_witness);

    const auto cs = family(GroupFamily::cyclic(3), Target::chi_plus_sigma);
    const nlohmann::json jc = report_json(cs);
    CHECK(jc["congruence"]["modulus"] == 4);
    CHECK(jc["congruence"]["residue"] == 0);

    /* byte determinism */
    CHECK(report_json(layered_report(parse_presentation("<a|a^5>"),
                                     Target::chi))
              .dump() == j.dump());
  }
}
