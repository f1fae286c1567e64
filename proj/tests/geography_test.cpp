#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <symgeo/geography.hpp>
#include <symgeo/manifold.hpp>

#include <cctype>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace symgeo;

namespace {

Interval closed(long long lo, long long hi) {
  Interval iv;
  iv.lo = Rational(lo);
  iv.hi = Rational(hi);
  return iv;
}

Interval window(const Rational& lo, const Rational& hi) {
  Interval iv;
  iv.lo = lo;
  iv.hi = hi;
  return iv;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-10/3") == Rational(-10, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // normalized

  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(-10, 3)) == "-10/3");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(rational_to_string(parse_rational("-4/2")) == "-2");

  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("upper envelope of witness lines") {
  SUBCASE("two crossing lines") {
    const std::vector<Witness> ws = {{"CP2", 3, 1}, {"E1", 12, -8}};
    const EnvelopeFn f =
        upper_envelope(ws, window(Rational(-1), Rational(3, 2)));
    REQUIRE(f.pieces.size() == 2);
    CHECK(f.pieces[0].affine == Affine{3, 1});
    CHECK(f.pieces[0].witness == "CP2");
    CHECK(*f.pieces[0].lo == Rational(-1));
    CHECK(*f.pieces[0].hi == Rational(1));
    CHECK(f.pieces[0].lo_closed);
    CHECK_FALSE(f.pieces[0].hi_closed);
    CHECK(f.pieces[1].affine == Affine{12, -8});
    CHECK(f.pieces[1].witness == "E1");
    CHECK(*f.pieces[1].lo == Rational(1));
    CHECK(f.pieces[1].lo_closed);
    CHECK(*f.pieces[1].hi == Rational(3, 2));
    CHECK(f.pieces[1].hi_closed);
    /* crossing: 3 + b = 12 - 8b at b = 1, both give 4 */
    CHECK(*f.value(Rational(1)) == Rational(4));
    CHECK(*f.value(Rational(0)) == Rational(3));
    CHECK(*f.value(Rational(3, 2)) == Rational(0));
    for (const Piece& p : f.pieces) CHECK(p.status == PieceStatus::upper_only);
    CHECK(concavity_check(f));
  }
  SUBCASE("single witness is a constant or line") {
    const EnvelopeFn f = upper_envelope({{"S4", 2, 0}}, closed(-1, 1));
    REQUIRE(f.pieces.size() == 1);
    CHECK(f.pieces[0].affine == Affine{2, 0});
    CHECK(concavity_check(f));
  }
  SUBCASE("symmetric tent") {
    const EnvelopeFn f =
        upper_envelope({{"Sym2(3)", 6, -2}, {"Sym2(3) reversed", 6, 2}},
                       closed(-1, 1));
    REQUIRE(f.pieces.size() == 2);
    CHECK(*f.pieces[0].hi == Rational(0));
    CHECK(f.pieces[0].affine == Affine{6, 2});
    CHECK(f.pieces[1].affine == Affine{6, -2});
    CHECK(*f.value(Rational(0)) == Rational(6));
    CHECK(*f.value(Rational(-1)) == Rational(4));
    CHECK(concavity_check(f));
  }
  SUBCASE("parallel lines keep the lower one") {
    const EnvelopeFn f =
        upper_envelope({{"high", 10, -8}, {"low", 9, -8}, {"flat", 20, 0}},
                       closed(0, 1));
    for (const Piece& p : f.pieces) CHECK(p.witness != "high");
    CHECK(*f.value(Rational(0)) == Rational(9));
    CHECK(concavity_check(f));
  }
  SUBCASE("dominated line never appears") {
    const EnvelopeFn f = upper_envelope(
        {{"CP2", 3, 1}, {"E1", 12, -8}, {"useless", 40, -3}}, closed(-2, 2));
    for (const Piece& p : f.pieces) CHECK(p.witness != "useless");
    CHECK(concavity_check(f));
  }
  SUBCASE("unbounded interval") {
    Interval iv;  // everything
    const EnvelopeFn f = upper_envelope({{"CP2", 3, 1}, {"E1", 12, -8}}, iv);
    REQUIRE(f.pieces.size() == 2);
    CHECK_FALSE(f.pieces[0].lo.has_value());
    CHECK_FALSE(f.pieces[1].hi.has_value());
    CHECK(*f.value(Rational(-100)) == Rational(-97));
    CHECK(concavity_check(f));
  }
  SUBCASE("empty witness set is refused") {
    CHECK_THROWS_AS(upper_envelope({}, closed(-1, 1)), std::invalid_argument);
  }
  SUBCASE("annotation flags the finite-set caveat") {
    const EnvelopeFn f = upper_envelope({{"CP2", 3, 1}}, closed(-1, 1));
    REQUIRE(f.annotations.size() == 1);
    CHECK(f.annotations[0].find("true infimum may be lower") !=
          std::string::npos);
  }
}

TEST_CASE("piece membership and lookup") {
  const EnvelopeFn f =
      upper_envelope({{"CP2", 3, 1}, {"E1", 12, -8}}, closed(-1, 2));
  /* internal breakpoint belongs to the right piece */
  CHECK(f.piece_at(Rational(1))->witness == "E1");
  CHECK(f.piece_at(Rational(1, 2))->witness == "CP2");
  CHECK(f.piece_at(Rational(-1))->witness == "CP2");
  CHECK(f.piece_at(Rational(2))->witness == "E1");
  CHECK(f.piece_at(Rational(3)) == nullptr);
  CHECK(f.piece_at(Rational(-2)) == nullptr);
  CHECK_FALSE(f.value(Rational(3)).has_value());

  Piece p;
  p.lo = Rational(0);
  p.hi = Rational(1);
  p.lo_closed = true;
  p.hi_closed = false;
  CHECK(p.contains(Rational(0)));
  CHECK(p.contains(Rational(1, 2)));
  CHECK_FALSE(p.contains(Rational(1)));
}

TEST_CASE("restriction") {
  const EnvelopeFn table = known_table(KnownTable::minimal_trivial);
  const EnvelopeFn cut = restrict_envelope(table, window(Rational(-1), Rational(3, 2)));
  REQUIRE(cut.pieces.size() == 2);
  CHECK(cut.pieces[0].affine == Affine{3, 1});
  CHECK(cut.pieces[0].status == PieceStatus::exact);
  CHECK(*cut.pieces[0].lo == Rational(-1));
  CHECK(*cut.pieces[0].hi == Rational(1));
  CHECK(cut.pieces[1].affine == Affine{12, -8});
  CHECK(cut.pieces[1].status == PieceStatus::exact);
  CHECK(*cut.pieces[1].hi == Rational(3, 2));
  CHECK(cut.label == table.label);
  CHECK(concavity_check(cut));

  /* matches the bare witness envelope piece for piece */
  const EnvelopeFn direct = upper_envelope(
      {{"CP2", 3, 1}, {"dolgachev", 12, -8}},
      window(Rational(-1), Rational(3, 2)));
  REQUIRE(direct.pieces.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(direct.pieces[i].affine == cut.pieces[i].affine);
    CHECK(direct.pieces[i].lo == cut.pieces[i].lo);
    CHECK(direct.pieces[i].hi == cut.pieces[i].hi);
    CHECK(direct.pieces[i].lo_closed == cut.pieces[i].lo_closed);
    CHECK(direct.pieces[i].hi_closed == cut.pieces[i].hi_closed);
  }

  /* restriction to a window inside one piece */
  const EnvelopeFn inner =
      restrict_envelope(table, window(Rational(-1, 2), Rational(1, 2)));
  REQUIRE(inner.pieces.size() == 1);
  CHECK(inner.pieces[0].affine == Affine{3, 1});
}

TEST_CASE("concavity check") {
  for (KnownTable t :
       {KnownTable::smooth_trivial, KnownTable::symplectic_trivial,
        KnownTable::minimal_trivial, KnownTable::smooth_Z6}) {
    CHECK(concavity_check(known_table(t)));
  }

  SUBCASE("gap breaks it") {
    EnvelopeFn f;
    f.label = "broken";
    Piece a;
    a.lo = Rational(0);
    a.hi = Rational(1);
    a.hi_closed = false;
    a.affine = {1, 0};
    Piece b;
    b.lo = Rational(2);
    b.hi = Rational(3);
    b.affine = {1, 0};
    f.pieces = {a, b};
    CHECK_FALSE(concavity_check(f));
  }
  SUBCASE("discontinuity breaks it") {
    EnvelopeFn f;
    Piece a;
    a.lo = Rational(0);
    a.hi = Rational(1);
    a.hi_closed = false;
    a.affine = {1, 0};
    Piece b;
    b.lo = Rational(1);
    b.hi = Rational(2);
    b.affine = {5, 0};
    f.pieces = {a, b};
    CHECK_FALSE(concavity_check(f));
  }
  SUBCASE("increasing slopes break it") {
    EnvelopeFn f;
    Piece a;
    a.lo = Rational(-1);
    a.hi = Rational(0);
    a.hi_closed = false;
    a.affine = {2, -1};
    Piece b;
    b.lo = Rational(0);
    b.hi = Rational(1);
    b.affine = {2, 1};  // convex corner
    f.pieces = {a, b};
    CHECK_FALSE(concavity_check(f));
  }
  SUBCASE("both endpoints claiming the breakpoint breaks it") {
    EnvelopeFn f;
    Piece a;
    a.lo = Rational(0);
    a.hi = Rational(1);
    a.hi_closed = true;
    a.affine = {1, 0};
    Piece b;
    b.lo = Rational(1);
    b.hi = Rational(2);
    b.lo_closed = true;
    b.affine = {1, 0};
    f.pieces = {a, b};
    CHECK_FALSE(concavity_check(f));
  }
  SUBCASE("empty envelope fails") {
    EnvelopeFn f;
    CHECK_FALSE(concavity_check(f));
  }
}

TEST_CASE("known tables") {
  SUBCASE("smooth trivial") {
    const EnvelopeFn f = known_table(KnownTable::smooth_trivial);
    REQUIRE(f.pieces.size() == 1);
    CHECK(f.pieces[0].affine == Affine{2, 0});
    CHECK(f.pieces[0].witness == "S4");
    CHECK(f.pieces[0].status == PieceStatus::exact);
    CHECK(*f.value(Rational(0)) == Rational(2));
    CHECK_FALSE(f.value(Rational(-2)).has_value());
  }
  SUBCASE("symplectic trivial") {
    const EnvelopeFn f = known_table(KnownTable::symplectic_trivial);
    REQUIRE(f.pieces.size() == 2);
    CHECK(*f.pieces[0].lo == Rational(-10, 3));
    CHECK(f.pieces[0].status == PieceStatus::upper_only);
    CHECK(f.pieces[1].status == PieceStatus::exact);
    CHECK(f.pieces[0].affine == f.pieces[1].affine);
    CHECK(*f.value(Rational(-2)) == Rational(1));
    CHECK(f.piece_at(Rational(-2))->status == PieceStatus::upper_only);
    CHECK(f.piece_at(Rational(0))->status == PieceStatus::exact);
    CHECK(concavity_check(f));
  }
  SUBCASE("minimal trivial") {
    const EnvelopeFn f = known_table(KnownTable::minimal_trivial);
    REQUIRE(f.pieces.size() == 3);
    CHECK(*f.value(Rational(1)) == Rational(4));
    CHECK(*f.value(Rational(3, 2)) == Rational(0));
    CHECK(f.piece_at(Rational(1))->witness == "dolgachev");
  }
  SUBCASE("rank six scan") {
    const EnvelopeFn f = known_table(KnownTable::smooth_Z6);
    CHECK(*f.value(Rational(0)) == Rational(6));
    CHECK(*f.value(Rational(1)) == Rational(4));
    CHECK(*f.value(Rational(-1)) == Rational(4));
    bool exact_note = false;
    for (const std::string& a : f.annotations)
      if (a.find("f(1, 0) = 6 exactly") != std::string::npos)
        exact_note = true;
    CHECK(exact_note);
  }
}

TEST_CASE("envelope upper bounds dominate their witnesses") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> chi(-20, 40);
  std::uniform_int_distribution<long long> sigma(-16, 16);
  std::uniform_int_distribution<int> count(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    CAPTURE(trial);
    std::vector<Witness> ws;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
      ws.push_back({"w" + std::to_string(i), chi(rng), sigma(rng)});
    const EnvelopeFn f = upper_envelope(ws, closed(-3, 3));
    REQUIRE(concavity_check(f));
    /* evaluate on a grid: the envelope is the pointwise minimum */
    for (long long num = -12; num <= 12; ++num) {
      const Rational b(num, 4);
      const auto v = f.value(b);
      REQUIRE(v.has_value());
      Rational best = Affine{ws[0].chi, ws[0].sigma}.at(b);
      for (const Witness& w : ws) {
        const Rational line = Affine{w.chi, w.sigma}.at(b);
        if (line < best) best = line;
      }
      CHECK(*v == best);
    }
    /* adding witnesses can only lower the envelope */
    std::vector<Witness> more = ws;
    more.push_back({"extra", chi(rng), sigma(rng)});
    const EnvelopeFn g = upper_envelope(more, closed(-3, 3));
    for (long long num = -12; num <= 12; ++num) {
      const Rational b(num, 4);
      CHECK(*g.value(b) <= *f.value(b));
    }
  }
}

TEST_CASE("moves and unbounded directions") {
  SUBCASE("half planes from the standard moves") {
    const std::vector<Move> moves = {{"blow_up", 1, -1, true},
                                     {"projective_plane_sum", 1, 1, true}};
    const auto hps = unbounded_directions(moves);
    REQUIRE(hps.size() == 2);
    /* a chi + b sigma bounded requires a - b >= 0 and a + b >= 0 */
    CHECK(hps[0].coeff_a == 1);
    CHECK(hps[0].coeff_b == -1);
    CHECK(hps[1].coeff_a == 1);
    CHECK(hps[1].coeff_b == 1);
  }
  SUBCASE("non repeatable moves are rejected") {
    CHECK_THROWS_AS(unbounded_directions({{"one_shot", 1, -1, false}}),
                    std::invalid_argument);
  }
}

TEST_CASE("cone domains") {
  SUBCASE("smooth") {
    const ConeDomain d = smooth_domain();
    CHECK(d.exact);
    CHECK(d.contains(Rational(1), Rational(1)));
    CHECK(d.contains(Rational(1), Rational(-1)));
    CHECK(d.contains(Rational(2), Rational(1)));
    CHECK(d.contains(Rational(0), Rational(0)));
    CHECK_FALSE(d.contains(Rational(1), Rational(2)));
    CHECK_FALSE(d.contains(Rational(1), Rational(-2)));
    CHECK_FALSE(d.contains(Rational(-1), Rational(0)));
  }
  SUBCASE("symplectic") {
    const ConeDomain d = symplectic_domain();
    CHECK_FALSE(d.exact);
    CHECK(d.contains(Rational(1), Rational(1)));
    CHECK(d.contains(Rational(3), Rational(-1)));
    CHECK_FALSE(d.contains(Rational(1), Rational(2)));
    CHECK_FALSE(d.contains(Rational(-1), Rational(-1)));
    /* necessary constraints only: the steep directions stay inside even
     * though the true boundary angle is unknown */
    CHECK(d.contains(Rational(1), Rational(-2)));
    CHECK(d.notes.size() >= 3);
  }
  SUBCASE("minimal") {
    const ConeDomain d = minimal_domain();
    /* the K3 fiber sum forces 24 a - 16 b >= 0, i.e. b <= 3a/2 */
    CHECK(d.contains(Rational(2), Rational(3)));
    CHECK_FALSE(d.contains(Rational(2), Rational(4)));
    CHECK(d.contains(Rational(1), Rational(-1)));
    bool cone_note = false;
    for (const std::string& n : d.notes)
      if (n.find("cone over {1} x [-1, 3/2]") != std::string::npos)
        cone_note = true;
    CHECK(cone_note);

    const ConeDomain wide = minimal_domain(true);
    bool bmy_note = false;
    for (const std::string& n : wide.notes)
      if (n.find("Bogomolov") != std::string::npos) bmy_note = true;
    CHECK(bmy_note);
  }
}

TEST_CASE("registered sequences") {
  SUBCASE("frozen membership decisions") {
    using SF = SequenceFamily;
    CHECK(sequence_bounded(SF::non_closed_domain, Rational(1), Rational(0)));
    CHECK(sequence_bounded(SF::non_closed_domain, Rational(1), Rational(1)));
    CHECK_FALSE(
        sequence_bounded(SF::non_closed_domain, Rational(1), Rational(2)));
    CHECK(
        sequence_bounded(SF::non_closed_domain, Rational(1), Rational(-3)));
    /* the boundary ray 2a = b: only the a <= 0 half is inside */
    CHECK(sequence_bounded(SF::non_closed_domain, Rational(0), Rational(0)));
    CHECK(
        sequence_bounded(SF::non_closed_domain, Rational(-1), Rational(-2)));
    CHECK_FALSE(
        sequence_bounded(SF::non_closed_domain, Rational(1), Rational(2)));

    CHECK(sequence_bounded(SF::stipsicz_ray, Rational(1), Rational(0)));
    CHECK(sequence_bounded(SF::stipsicz_ray, Rational(3), Rational(-10)));
    CHECK_FALSE(sequence_bounded(SF::stipsicz_ray, Rational(3), Rational(-11)));
    CHECK_FALSE(sequence_bounded(SF::stipsicz_ray, Rational(-1), Rational(0)));
  }
  SUBCASE("the predicate matches the member values") {
    /* a chi_k + b sigma_k = (4a - 2b) k^2 - 2a k + 2a; bounded below over
     * k >= 1 iff the leading coefficient is positive, or zero with the
     * linear part nonnegative */
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> coef(-6, 6);
    for (int trial = 0; trial < 400; ++trial) {
      const Rational a(coef(rng), 1 + (trial % 3));
      const Rational b(coef(rng), 1 + (trial % 2));
      const bool predicted =
          sequence_bounded(SequenceFamily::non_closed_domain, a, b);
      const Rational lead = 4 * a - 2 * b;
      const bool expected = lead > 0 || (lead == 0 && a <= 0);
      CAPTURE(rational_to_string(a));
      CAPTURE(rational_to_string(b));
      CHECK(predicted == expected);
      /* empirical spot check against actual members */
      if (!predicted) {
        Rational worst = 0;
        bool fell = false;
        for (long long k = 1; k <= 64; k *= 2) {
          const Witness m =
              sequence_member(SequenceFamily::non_closed_domain, k);
          const Rational v = a * m.chi + b * m.sigma;
          if (v < worst - 100) fell = true;
          if (v < worst) worst = v;
        }
        if (lead < 0) CHECK(fell);
      }
    }
  }
  SUBCASE("member invariants match the connected sum") {
    for (long long k = 1; k <= 6; ++k) {
      CAPTURE(k);
      const Witness w =
          sequence_member(SequenceFamily::non_closed_domain, k);
      const ManifoldClass m = stipsicz_member(k);
      CHECK(w.chi == m.chi);
      CHECK(w.sigma == m.sigma);
      CHECK(w.chi == 2 + 4 * k * k - 2 * k);
      CHECK(w.sigma == -2 * k * k);
    }
    CHECK_THROWS_AS(sequence_member(SequenceFamily::non_closed_domain, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sequence_member(SequenceFamily::stipsicz_ray, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("csv emission") {
  const EnvelopeFn f = known_table(KnownTable::minimal_trivial);
  SUBCASE("sampled rows are exact rationals") {
    const std::string csv = envelope_csv(f, Rational(-1), Rational(3, 2), 11);
    CHECK(csv.find("# format_version: 1\n") == 0);
    CHECK(csv.find("b,value,witness,status\n") != std::string::npos);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#' && line.find("b,value") != 0)
        rows.push_back(line);
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().rfind("-1,", 0) == 0);
    CHECK(rows.back().rfind("3/2,0,", 0) == 0);
    bool found = false;
    for (const std::string& row : rows)
      if (row.rfind("1,4,dolgachev,exact", 0) == 0) found = true;
    CHECK(found);
  }
  SUBCASE("samples outside the domain degrade gracefully") {
    const std::string csv = envelope_csv(f, Rational(-5), Rational(-4), 3);
    std::istringstream in(csv);
    std::string line;
    int outside = 0;
    while (std::getline(in, line))
      if (line.find(",-,-,outside") != std::string::npos) ++outside;
    CHECK(outside == 3);
  }
  SUBCASE("degenerate ranges") {
    const std::string one = envelope_csv(f, Rational(0), Rational(0), 1);
    CHECK(one.find("0,3,CP2,exact\n") != std::string::npos);
    CHECK_THROWS_AS(envelope_csv(f, Rational(0), Rational(1), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(envelope_csv(f, Rational(1), Rational(0), 2),
                    std::invalid_argument);
  }
  SUBCASE("deterministic") {
    CHECK(envelope_csv(f, Rational(-1), Rational(3, 2), 11) ==
          envelope_csv(f, Rational(-1), Rational(3, 2), 11));
  }
}

TEST_CASE("svg emission") {
  std::vector<std::pair<std::string, EnvelopeFn>> charts;
  charts.emplace_back("minimal", known_table(KnownTable::minimal_trivial));
  charts.emplace_back("smooth", known_table(KnownTable::smooth_trivial));
  const std::string svg = envelope_svg(charts);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("class=\"exact\"") != std::string::npos);
  CHECK(svg.find("class=\"upper\"") != std::string::npos);
  CHECK(svg.find("dolgachev") != std::string::npos);
  /* fixed two-digit output, no scientific notation, no negative zero;
   * "e-" itself appears in attribute names like stroke-width */
  bool scientific = false;
  for (std::size_t pos = svg.find("e-"); pos != std::string::npos;
       pos = svg.find("e-", pos + 1))
    if (pos > 0 && std::isdigit(static_cast<unsigned char>(svg[pos - 1])))
      scientific = true;
  CHECK_FALSE(scientific);
  CHECK(svg.find("-0.00") == std::string::npos);
  CHECK(envelope_svg(charts) == svg);
}

TEST_CASE("json emission") {
  const nlohmann::json j = envelope_json(known_table(KnownTable::minimal_trivial));
  CHECK(j["label"] == "minimal_trivial");
  REQUIRE(j["pieces"].is_array());
  REQUIRE(j["pieces"].size() == 3);
  const auto& p0 = j["pieces"][0];
  CHECK(p0["lo"] == "-10/3");
  CHECK(p0["hi"] == "-1");
  CHECK(p0["lo_closed"] == true);
  CHECK(p0["hi_closed"] == false);
  CHECK(p0["constant"] == 3);
  CHECK(p0["slope"] == 1);
  CHECK(p0["status"] == "upper_only");
  const auto& p2 = j["pieces"][2];
  CHECK(p2["lo"] == "1");
  CHECK(p2["hi"] == "3/2");
  CHECK(p2["status"] == "exact");
  CHECK(p2["witness"] == "dolgachev");

  const nlohmann::json d = domain_json(smooth_domain());
  CHECK(d["exact"] == true);
  REQUIRE(d["constraints"].is_array());
  CHECK(d["constraints"].size() == 2);
  CHECK(d["constraints"][0].contains("coeff_a"));
  CHECK(d["constraints"][0].contains("coeff_b"));
}
