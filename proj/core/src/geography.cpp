#include "symgeo/geography.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace symgeo {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void check_interval(const Interval& interval) {
  if (!interval.lo || !interval.hi) return;
  if (*interval.lo > *interval.hi)
    throw std::invalid_argument("interval endpoints out of order");
  if (*interval.lo == *interval.hi &&
      !(interval.lo_closed && interval.hi_closed))
    throw std::invalid_argument("empty interval");
}

std::optional<Piece> clip_piece(Piece p, const Interval& interval) {
  if (interval.lo) {
    if (!p.lo || *p.lo < *interval.lo) {
      p.lo = interval.lo;
      p.lo_closed = interval.lo_closed;
    } else if (*p.lo == *interval.lo) {
      p.lo_closed = p.lo_closed && interval.lo_closed;
    }
  }
  if (interval.hi) {
    if (!p.hi || *p.hi > *interval.hi) {
      p.hi = interval.hi;
      p.hi_closed = interval.hi_closed;
    } else if (*p.hi == *interval.hi) {
      p.hi_closed = p.hi_closed && interval.hi_closed;
    }
  }
  if (p.lo && p.hi) {
    if (*p.lo > *p.hi) return std::nullopt;
    if (*p.lo == *p.hi && !(p.lo_closed && p.hi_closed)) return std::nullopt;
  }
  return p;
}

struct Line {
  long long constant = 0;
  long long slope = 0;
  std::string label;
};

/* b where the two lines cross; requires a.slope > b.slope. */
Rational crossing(const Line& a, const Line& b) {
  return Rational(b.constant - a.constant) / Rational(a.slope - b.slope);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("expected an integer or a fraction p/q, got '" +
                                 std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw bad();
  }
  const auto digits = [&](std::string_view part, bool sign_ok) {
    if (!part.empty() && sign_ok && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    return std::all_of(part.begin(), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(num, true)) throw bad();
  if (den.empty()) return Rational(boost::multiprecision::cpp_int(std::string(num)));
  if (!digits(den, false)) throw bad();
  boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" +
                                          std::string(text) + "'");
  return Rational(boost::multiprecision::cpp_int(std::string(num)), d);
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string_view to_string(PieceStatus s) {
  return s == PieceStatus::exact ? "exact" : "upper_only";
}

bool Piece::contains(const Rational& b) const {
  if (lo && (lo_closed ? b < *lo : b <= *lo)) return false;
  if (hi && (hi_closed ? b > *hi : b >= *hi)) return false;
  return true;
}

const Piece* EnvelopeFn::piece_at(const Rational& b) const {
  for (const Piece& p : pieces)
    if (p.contains(b)) return &p;
  return nullptr;
}

std::optional<Rational> EnvelopeFn::value(const Rational& b) const {
  const Piece* p = piece_at(b);
  if (!p) return std::nullopt;
  return p->affine.at(b);
}

EnvelopeFn upper_envelope(const std::vector<Witness>& ws,
                          const Interval& interval) {
  if (ws.empty())
    throw std::invalid_argument("upper_envelope needs at least one witness");
  check_interval(interval);

  std::vector<Line> lines;
  lines.reserve(ws.size());
  for (const Witness& w : ws) lines.push_back({w.chi, w.sigma, w.label});
  std::stable_sort(lines.begin(), lines.end(),
                   [](const Line& a, const Line& b) {
                     if (a.slope != b.slope) return a.slope > b.slope;
                     return a.constant < b.constant;
                   });

  /* Among parallel lines only the lowest can be active. */
  std::vector<Line> uniq;
  for (Line& l : lines)
    if (uniq.empty() || uniq.back().slope != l.slope)
      uniq.push_back(std::move(l));

  /* Lower envelope of lines by decreasing slope: the steepest line wins
   * far left, and a line whose active interval closes up is popped. */
  std::vector<Line> hull;
  std::vector<Rational> cuts;  // cuts[i] separates hull[i] from hull[i+1]
  for (Line& l : uniq) {
    Rational x;
    while (!hull.empty()) {
      x = crossing(hull.back(), l);
      if (!cuts.empty() && x <= cuts.back()) {
        hull.pop_back();
        cuts.pop_back();
        continue;
      }
      break;
    }
    if (!hull.empty()) cuts.push_back(x);
    hull.push_back(std::move(l));
  }

  EnvelopeFn f;
  f.label = "upper envelope";
  f.annotations = {"min over the given witnesses; the true infimum may be lower"};
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Piece p;
    if (i > 0) p.lo = cuts[i - 1];
    if (i + 1 < hull.size()) p.hi = cuts[i];
    p.lo_closed = true;   // an internal breakpoint belongs to the right piece
    p.hi_closed = false;
    p.affine = {hull[i].constant, hull[i].slope};
    p.witness = hull[i].label;
    p.status = PieceStatus::upper_only;
    if (i + 1 == hull.size()) p.hi_closed = true;
    if (auto clipped = clip_piece(std::move(p), interval))
      f.pieces.push_back(std::move(*clipped));
  }
  return f;
}

EnvelopeFn restrict_envelope(const EnvelopeFn& f, const Interval& interval) {
  check_interval(interval);
  EnvelopeFn out;
  out.label = f.label;
  out.annotations = f.annotations;
  for (const Piece& p : f.pieces)
    if (auto clipped = clip_piece(p, interval))
      out.pieces.push_back(std::move(*clipped));
  return out;
}

bool concavity_check(const EnvelopeFn& f) {
  const auto& ps = f.pieces;
  if (ps.empty()) return false;
  for (const Piece& p : ps)
    if (p.lo && p.hi &&
        (*p.lo > *p.hi || (*p.lo == *p.hi && !(p.lo_closed && p.hi_closed))))
      return false;
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const Piece& a = ps[i - 1];
    const Piece& b = ps[i];
    if (!a.hi || !b.lo) return false;
    if (*a.hi != *b.lo) return false;
    if (a.hi_closed == b.lo_closed) return false;  // gap or double cover
    if (a.affine.at(*a.hi) != b.affine.at(*b.lo)) return false;
  }
  /* Equal adjacent affines merge into one piece (they may differ in
   * status only); across distinct affines slopes must strictly drop. */
  const Affine* prev = nullptr;
  for (const Piece& p : ps) {
    if (prev && p.affine == *prev) continue;
    if (prev && p.affine.slope >= prev->slope) return false;
    prev = &p.affine;
  }
  return true;
}

bool HalfPlane::satisfied(const Rational& a, const Rational& b) const {
  const Rational v = Rational(coeff_a) * a + Rational(coeff_b) * b;
  return closed ? v >= 0 : v > 0;
}

std::vector<HalfPlane> unbounded_directions(const std::vector<Move>& moves) {
  std::vector<HalfPlane> out;
  out.reserve(moves.size());
  for (const Move& m : moves) {
    if (!m.repeatable)
      throw std::invalid_argument(
          "unbounded_directions needs repeatable moves; '" + m.label +
          "' is not");
    out.push_back({m.label, m.delta_chi, m.delta_sigma, true});
  }
  return out;
}

bool ConeDomain::contains(const Rational& a, const Rational& b) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& h) { return h.satisfied(a, b); });
}

ConeDomain smooth_domain() {
  ConeDomain d;
  d.label = "smooth";
  d.constraints = unbounded_directions({
      {"blow_up", 1, -1, true},
      {"projective_plane_sum", 1, 1, true},
  });
  d.exact = true;
  d.notes = {
      "equals the cone over {1} x [-1, 1], independently of the group",
      "f is even in b: orientation reversal preserves smoothness",
  };
  return d;
}

ConeDomain symplectic_domain() {
  ConeDomain d;
  d.label = "symplectic";
  d.constraints = {
      {"blow_up", 1, -1, true},
      {"large_signature_examples", 1, 0, true},
  };
  d.exact = false;
  d.notes = {
      "one boundary edge is the ray a = b with a >= 0",
      "the other edge's angle is unknown; it lies between -pi/2 and -pi/4",
      "for the trivial group the unknown edge is no higher than slope -10/3 "
      "(Stipsicz)",
      "whether the domain depends on the group is open",
  };
  return d;
}

ConeDomain minimal_domain(bool assume_bmy) {
  ConeDomain d;
  d.label = "minimal symplectic";
  d.constraints = unbounded_directions({
      {"k3_fiber_sum", 24, -16, true},
  });
  d.exact = false;
  d.notes = {
      "contains the cone over {1} x [-1, 3/2]",
      "f(2, 3) = 0 for every group that is not a surface group (Liu)",
  };
  if (assume_bmy)
    d.notes.push_back(
        "assuming the Bogomolov-Miyaoka-Yau inequality the domain contains "
        "the cone over {1} x [-3, 3/2]");
  else
    d.notes.push_back(
        "the conjectural Bogomolov-Miyaoka-Yau inequality would widen the "
        "lower edge to slope -3");
  return d;
}

bool sequence_bounded(SequenceFamily family, const Rational& a,
                      const Rational& b) {
  switch (family) {
    case SequenceFamily::non_closed_domain:
      /* a chi(M_k) + b sigma(M_k) = (4a - 2b) k^2 - 2a k + 2a */
      return 2 * a > b || (2 * a == b && a <= 0);
    case SequenceFamily::stipsicz_ray:
      return 10 * a + 3 * b >= 0;
  }
  throw std::invalid_argument("unregistered sequence family");
}

Witness sequence_member(SequenceFamily family, long long k) {
  if (family == SequenceFamily::stipsicz_ray)
    throw std::invalid_argument(
        "the stipsicz_ray family has no registered member formulas");
  if (k < 1) throw std::invalid_argument("sequence members are indexed from 1");
  Witness w;
  w.label = "M_" + std::to_string(k);
  w.chi = 2 + 4 * k * k - 2 * k;
  w.sigma = -2 * k * k;
  return w;
}

EnvelopeFn known_table(KnownTable t) {
  const Rational kLeft(-10, 3);
  EnvelopeFn f;
  switch (t) {
    case KnownTable::smooth_trivial:
      f.label = "smooth_trivial";
      f.pieces = {
          {Rational(-1), Rational(1), true, true, {2, 0}, "S4",
           PieceStatus::exact},
      };
      f.annotations = {
          "value -infinity for |b| > 1",
          "f is even in b: orientation reversal",
      };
      return f;
    case KnownTable::symplectic_trivial:
      f.label = "symplectic_trivial";
      f.pieces = {
          {kLeft, Rational(-1), true, false, {3, 1}, "CP2",
           PieceStatus::upper_only},
          {Rational(-1), Rational(1), true, true, {3, 1}, "CP2",
           PieceStatus::exact},
      };
      f.annotations = {
          "value -infinity for b < -10/3 or b > 1",
          "the value on [-10/3, -1) is unknown; the projective plane only "
          "bounds it from above",
          "simply connected symplectic examples make chi + b sigma unbounded "
          "below for b < -10/3 (Stipsicz)",
      };
      return f;
    case KnownTable::minimal_trivial:
      f.label = "minimal_trivial";
      f.pieces = {
          {kLeft, Rational(-1), true, false, {3, 1}, "CP2",
           PieceStatus::upper_only},
          {Rational(-1), Rational(1), true, false, {3, 1}, "CP2",
           PieceStatus::exact},
          {Rational(1), Rational(3, 2), true, true, {12, -8}, "dolgachev",
           PieceStatus::exact},
      };
      f.annotations = {
          "value -infinity for b < -10/3 or b > 3/2",
          "fiber sums with the K3 surface make chi + b sigma unbounded below "
          "for b > 3/2",
          "the value on [-10/3, -1) is unknown",
      };
      return f;
    case KnownTable::smooth_Z6:
      f.label = "smooth_Z6";
      f.pieces = {
          {Rational(-1), Rational(0), true, false, {6, 2}, "Sym2(3) reversed",
           PieceStatus::upper_only},
          {Rational(0), Rational(1), true, true, {6, -2}, "Sym2(3)",
           PieceStatus::upper_only},
      };
      f.annotations = {
          "f(1, 0) = 6 exactly",
          "value -infinity for |b| > 1",
          "the bounds are exact everywhere if and only if chi + sigma >= 4 "
          "for every smooth manifold with this fundamental group",
          "f is even in b: orientation reversal",
      };
      return f;
  }
  throw std::invalid_argument("unregistered table tag");
}

std::string envelope_csv(const EnvelopeFn& f, const Rational& from,
                         const Rational& to, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  if (from > to) throw std::invalid_argument("sample endpoints out of order");
  std::ostringstream out;
  out << "# format_version: 1\n";
  out << "b,value,witness,status\n";
  const Rational span = to - from;
  for (std::size_t i = 0; i < samples; ++i) {
    const Rational b =
        samples == 1
            ? from
            : from + span * Rational(static_cast<long long>(i)) /
                         Rational(static_cast<long long>(samples - 1));
    out << rational_to_string(b) << ",";
    if (const Piece* p = f.piece_at(b)) {
      out << rational_to_string(p->affine.at(b)) << "," << p->witness << ","
          << to_string(p->status);
    } else {
      out << "-,-,outside";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

double to_double(const Rational& r) { return r.template convert_to<double>(); }

std::string fmt2(double v) {
  if (std::abs(v) < 0.005) v = 0.0;
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << v;
  return o.str();
}

constexpr double kChartW = 520, kChartH = 190;
constexpr double kPlotX = 60, kPlotY = 28, kPlotW = 400, kPlotH = 120;

}  // namespace

std::string envelope_svg(
    const std::vector<std::pair<std::string, EnvelopeFn>>& charts) {
  if (charts.empty()) throw std::invalid_argument("no charts to draw");
  std::ostringstream svg;
  const double total_h = kChartH * static_cast<double>(charts.size());
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kChartW
      << "\" height=\"" << fmt2(total_h) << "\" viewBox=\"0 0 " << kChartW
      << " " << fmt2(total_h) << "\">\n";
  svg << "<style>\n"
         ".fr{fill:none;stroke:#999;stroke-width:1}\n"
         ".exact{stroke:#17845a;stroke-width:2}\n"
         ".upper{stroke:#c77d00;stroke-width:2;stroke-dasharray:6 4}\n"
         ".t{font:13px sans-serif;fill:#222}\n"
         ".tk{font:10px sans-serif;fill:#555}\n"
         ".c{fill:#333}\n"
         ".o{fill:#fff;stroke:#333}\n"
         "</style>\n";
  for (std::size_t idx = 0; idx < charts.size(); ++idx) {
    const auto& [title, fn] = charts[idx];
    svg << "<g transform=\"translate(0," << fmt2(kChartH * static_cast<double>(idx))
        << ")\">\n";
    svg << "<text class=\"t\" x=\"" << kPlotX << "\" y=\"18\">" << title
        << "</text>\n";
    svg << "<rect class=\"fr\" x=\"" << kPlotX << "\" y=\"" << kPlotY
        << "\" width=\"" << kPlotW << "\" height=\"" << kPlotH << "\"/>\n";

    /* Plot window from the finite endpoints; pieces with a missing side
     * are clamped to it. */
    double xmin = 0, xmax = 0;
    bool have_x = false;
    for (const Piece& p : fn.pieces) {
      for (const auto& end : {p.lo, p.hi}) {
        if (!end) continue;
        const double v = to_double(*end);
        if (!have_x) {
          xmin = xmax = v;
          have_x = true;
        } else {
          xmin = std::min(xmin, v);
          xmax = std::max(xmax, v);
        }
      }
    }
    if (!have_x) {
      xmin = -1;
      xmax = 1;
    }
    if (xmax - xmin < 1e-9) {
      xmin -= 1;
      xmax += 1;
    }
    struct Segment {
      double x0, y0, x1, y1;
      bool lo_dot, lo_closed, hi_dot, hi_closed;
      const Piece* piece;
    };
    std::vector<Segment> segs;
    double ymin = 0, ymax = 0;
    bool have_y = false;
    for (const Piece& p : fn.pieces) {
      Segment s{};
      s.piece = &p;
      s.x0 = p.lo ? to_double(*p.lo) : xmin;
      s.x1 = p.hi ? to_double(*p.hi) : xmax;
      s.y0 = static_cast<double>(p.affine.constant) +
             static_cast<double>(p.affine.slope) * s.x0;
      s.y1 = static_cast<double>(p.affine.constant) +
             static_cast<double>(p.affine.slope) * s.x1;
      s.lo_dot = p.lo.has_value();
      s.hi_dot = p.hi.has_value();
      s.lo_closed = p.lo_closed;
      s.hi_closed = p.hi_closed;
      for (double v : {s.y0, s.y1}) {
        if (!have_y) {
          ymin = ymax = v;
          have_y = true;
        } else {
          ymin = std::min(ymin, v);
          ymax = std::max(ymax, v);
        }
      }
      segs.push_back(s);
    }
    if (!have_y) {
      ymin = -1;
      ymax = 1;
    }
    if (ymax - ymin < 1e-9) {
      ymin -= 1;
      ymax += 1;
    }
    const double ypad = 0.08 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;
    const auto X = [&](double b) {
      return kPlotX + (b - xmin) / (xmax - xmin) * kPlotW;
    };
    const auto Y = [&](double v) {
      return kPlotY + (ymax - v) / (ymax - ymin) * kPlotH;
    };

    /* Open endpoint dots first so a shared breakpoint's closed dot wins. */
    for (const Segment& s : segs) {
      const char* cls =
          s.piece->status == PieceStatus::exact ? "exact" : "upper";
      svg << "<line class=\"" << cls << "\" x1=\"" << fmt2(X(s.x0))
          << "\" y1=\"" << fmt2(Y(s.y0)) << "\" x2=\"" << fmt2(X(s.x1))
          << "\" y2=\"" << fmt2(Y(s.y1)) << "\"/>\n";
      if (!s.piece->witness.empty()) {
        svg << "<text class=\"tk\" text-anchor=\"middle\" x=\""
            << fmt2((X(s.x0) + X(s.x1)) / 2) << "\" y=\""
            << fmt2(Y((s.y0 + s.y1) / 2) - 7) << "\">" << s.piece->witness
            << "</text>\n";
      }
    }
    for (bool closed_pass : {false, true}) {
      for (const Segment& s : segs) {
        if (s.lo_dot && s.lo_closed == closed_pass)
          svg << "<circle class=\"" << (closed_pass ? "c" : "o") << "\" cx=\""
              << fmt2(X(s.x0)) << "\" cy=\"" << fmt2(Y(s.y0))
              << "\" r=\"3\"/>\n";
        if (s.hi_dot && s.hi_closed == closed_pass)
          svg << "<circle class=\"" << (closed_pass ? "c" : "o") << "\" cx=\""
              << fmt2(X(s.x1)) << "\" cy=\"" << fmt2(Y(s.y1))
              << "\" r=\"3\"/>\n";
      }
    }

    /* Axis tick labels: window ends plus each breakpoint. */
    std::vector<double> ticks{xmin, xmax};
    for (const Segment& s : segs) {
      if (s.lo_dot) ticks.push_back(s.x0);
      if (s.hi_dot) ticks.push_back(s.x1);
    }
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end(),
                            [](double a, double b) {
                              return std::abs(a - b) < 1e-9;
                            }),
                ticks.end());
    for (double t : ticks)
      svg << "<text class=\"tk\" text-anchor=\"middle\" x=\"" << fmt2(X(t))
          << "\" y=\"162\">" << fmt2(t) << "</text>\n";
    svg << "<text class=\"tk\" text-anchor=\"end\" x=\"" << fmt2(kPlotX - 6)
        << "\" y=\"" << fmt2(Y(ymax - ypad) + 4) << "\">" << fmt2(ymax - ypad)
        << "</text>\n";
    svg << "<text class=\"tk\" text-anchor=\"end\" x=\"" << fmt2(kPlotX - 6)
        << "\" y=\"" << fmt2(Y(ymin + ypad) + 4) << "\">" << fmt2(ymin + ypad)
        << "</text>\n";
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

nlohmann::json envelope_json(const EnvelopeFn& f) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const Piece& p : f.pieces) {
    nlohmann::json j;
    j["lo"] = p.lo ? nlohmann::json(rational_to_string(*p.lo))
                   : nlohmann::json(nullptr);
    j["hi"] = p.hi ? nlohmann::json(rational_to_string(*p.hi))
                   : nlohmann::json(nullptr);
    j["lo_closed"] = p.lo_closed;
    j["hi_closed"] = p.hi_closed;
    j["constant"] = p.affine.constant;
    j["slope"] = p.affine.slope;
    j["witness"] = p.witness;
    j["status"] = std::string(to_string(p.status));
    pieces.push_back(std::move(j));
  }
  return nlohmann::json{{"label", f.label},
                        {"annotations", f.annotations},
                        {"pieces", std::move(pieces)}};
}

nlohmann::json domain_json(const ConeDomain& d) {
  nlohmann::json cs = nlohmann::json::array();
  for (const HalfPlane& h : d.constraints)
    cs.push_back({{"label", h.label},
                  {"coeff_a", h.coeff_a},
                  {"coeff_b", h.coeff_b},
                  {"closed", h.closed}});
  return nlohmann::json{{"label", d.label},
                        {"constraints", std::move(cs)},
                        {"exact", d.exact},
                        {"notes", d.notes}};
}

}  // namespace symgeo
