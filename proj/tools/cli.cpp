#include "cli.hpp"

#include <symgeo/bounds.hpp>
#include <symgeo/errors.hpp>
#include <symgeo/geography.hpp>
#include <symgeo/manifold.hpp>
#include <symgeo/presentation.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgeo::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

long long parse_integer(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
}

long long parse_count(const std::string& s) {
  const long long v = parse_integer(s);
  if (v < 0)
    throw std::invalid_argument("expected a nonnegative integer, got '" + s +
                                "'");
  return v;
}

bool is_presentation(const std::string& input) {
  return !input.empty() && input.front() == '<';
}

GroupFamily parse_family(const std::string& spec) {
  const auto unknown = [&] {
    return std::invalid_argument(
        "unknown family spec '" + spec +
        "'; expected trivial, free:n, cyclic:n, zn:n, surface:g, or "
        "gpf:k,l[,inf...]");
  };
  if (spec == "trivial") return GroupFamily::trivial();
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw unknown();
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "free") return GroupFamily::free_group(parse_count(rest));
  if (kind == "cyclic") return GroupFamily::cyclic(parse_count(rest));
  if (kind == "zn") return GroupFamily::free_abelian(parse_count(rest));
  if (kind == "surface") return GroupFamily::surface(parse_count(rest));
  if (kind == "gpf") {
    std::vector<long long> orders;
    for (const std::string& part : split(rest, ','))
      orders.push_back(part == "inf" ? 0 : parse_count(part));
    if (orders.empty()) throw unknown();
    return GroupFamily::abelian_sum(std::move(orders));
  }
  throw unknown();
}

Target parse_target(const std::string& s) {
  if (s == "chi") return Target::chi;
  if (s == "chi+sigma") return Target::chi_plus_sigma;
  throw std::invalid_argument("unknown target '" + s +
                              "'; expected chi or chi+sigma");
}

void require_format(const std::string& format,
                    const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed)
    if (format == a) return;
  std::string msg = "unknown format '" + format + "'; expected";
  for (std::size_t i = 0; i < allowed.size(); ++i)
    msg += (i == 0 ? " " : i + 1 == allowed.size() ? " or " : ", ") +
           allowed[i];
  throw std::invalid_argument(msg);
}

std::string affine_to_string(const Affine& a) {
  if (a.slope == 0) return std::to_string(a.constant);
  std::string s;
  if (a.constant != 0)
    s = std::to_string(a.constant) + (a.slope > 0 ? " + " : " - ");
  else if (a.slope < 0)
    s = "-";
  s += std::to_string(std::llabs(a.slope)) + " b";
  return s;
}

std::string interval_to_string(const Piece& p) {
  std::string s;
  s += p.lo ? (p.lo_closed ? "[" : "(") + rational_to_string(*p.lo)
            : std::string("(-inf");
  s += ", ";
  s += p.hi ? rational_to_string(*p.hi) + (p.hi_closed ? "]" : ")")
            : std::string("inf)");
  return s;
}

std::string envelope_text(const EnvelopeFn& f) {
  std::ostringstream o;
  o << "envelope: " << f.label << "\n";
  o << "pieces:\n";
  for (const Piece& p : f.pieces) {
    std::ostringstream row;
    row << "  " << std::left << std::setw(14) << interval_to_string(p)
        << "  " << std::setw(10) << affine_to_string(p.affine) << "  "
        << std::setw(10) << to_string(p.status) << "  witness " << p.witness;
    o << row.str() << "\n";
  }
  if (!f.annotations.empty()) {
    o << "annotations:\n";
    for (const std::string& a : f.annotations) o << "  - " << a << "\n";
  }
  return o.str();
}

std::string halfplane_to_string(const HalfPlane& h) {
  std::string s;
  if (h.coeff_a != 0) s += std::to_string(h.coeff_a) + " a";
  if (h.coeff_b != 0) {
    if (!s.empty())
      s += (h.coeff_b > 0 ? " + " : " - ") +
           std::to_string(std::llabs(h.coeff_b));
    else
      s += std::to_string(h.coeff_b);
    s += " b";
  }
  if (s.empty()) s = "0";
  s += h.closed ? " >= 0" : " > 0";
  return s;
}

std::string domain_text(const ConeDomain& d) {
  std::ostringstream o;
  o << "domain: " << d.label << "\n";
  o << "constraints:\n";
  for (const HalfPlane& h : d.constraints)
    o << "  " << std::left << std::setw(18) << halfplane_to_string(h)
      << "  (" << h.label << ")\n";
  o << "exact: " << (d.exact ? "yes" : "no") << "\n";
  if (!d.notes.empty()) {
    o << "notes:\n";
    for (const std::string& n : d.notes) o << "  - " << n << "\n";
  }
  return o.str();
}

struct BoundsParams {
  std::string input;
  std::string target = "chi";
  std::string format = "text";
  bool assume_bmy = false;
  bool hypothetical = false;
  std::string small_summands;
  std::string gompf;
};

int run_bounds(const BoundsParams& p, std::ostream& out) {
  require_format(p.format, {"text", "json"});
  const Target target = parse_target(p.target);
  BoundReport report;
  if (is_presentation(p.input)) {
    const Presentation pres = parse_presentation(p.input);
    LayeredOptions opts;
    opts.assume_bmy = p.assume_bmy;
    opts.hypothetical_ok = p.hypothetical;
    if (!p.small_summands.empty()) {
      const auto parts = split(p.small_summands, ',');
      if (parts.size() != 2)
        throw std::invalid_argument(
            "--small-summands expects two integers k,l");
      opts.small_summands = {parse_integer(parts[0]), parse_integer(parts[1])};
    }
    if (!p.gompf.empty()) {
      const auto parts = split(p.gompf, ',');
      if (parts.size() != 2 && parts.size() != 3)
        throw std::invalid_argument(
            "--gompf expects curves,edges or curves,edges,spin");
      LayeredOptions::Gompf g;
      g.curves = parse_count(parts[0]);
      g.edges = parse_count(parts[1]);
      if (parts.size() == 3) {
        if (parts[2] != "spin")
          throw std::invalid_argument("the third --gompf field must be 'spin'");
        g.spin = true;
      }
      opts.gompf = g;
    }
    report = layered_report(pres, target, opts);
  } else {
    if (p.assume_bmy || p.hypothetical || !p.small_summands.empty() ||
        !p.gompf.empty())
      throw std::invalid_argument(
          "--assume-bmy, --hypothetical, --small-summands and --gompf only "
          "apply to presentation input");
    report = family_report(parse_family(p.input), target);
  }
  if (p.format == "json")
    out << report_json(report).dump(2) << "\n";
  else
    out << report_text(report);
  return 0;
}

struct ConstructParams {
  std::string input;
  std::string format = "json";
};

int run_construct(const ConstructParams& p, std::ostream& out) {
  require_format(p.format, {"json", "text"});
  ConstructionTrace trace;
  if (is_presentation(p.input)) {
    trace = build_from_presentation(parse_presentation(p.input));
  } else if (p.input.rfind("cyclic:", 0) == 0) {
    const long long n = parse_count(p.input.substr(7));
    trace = build_from_monodromy({{{0, 1}, {-1, 2 - n}}});
  } else if (p.input.rfind("free:", 0) == 0) {
    const long long n = parse_count(p.input.substr(5));
    if (n < 1)
      throw std::invalid_argument(
          "free:n needs n >= 1; use a presentation for the trivial group");
    /* Dehn twists along the second-coordinate curves: x_i -> x_i y_i. */
    std::vector<Word> images;
    for (long long i = 0; i < n; ++i) {
      Word x;
      x.push(static_cast<std::uint32_t>(2 * i), 1);
      x.push(static_cast<std::uint32_t>(2 * i + 1), 1);
      images.push_back(std::move(x));
      Word y;
      y.push(static_cast<std::uint32_t>(2 * i + 1), 1);
      images.push_back(std::move(y));
    }
    trace = build_from_monodromy(n, images);
  } else {
    throw std::invalid_argument(
        "no registered construction for '" + p.input +
        "'; use a presentation, free:n, or cyclic:n");
  }
  if (p.format == "text")
    out << trace.to_text();
  else
    out << trace.to_json().dump(2) << "\n";
  return 0;
}

struct AbelianizeParams {
  std::string input;
  std::string format = "text";
};

int run_abelianize(const AbelianizeParams& p, std::ostream& out) {
  require_format(p.format, {"text", "json"});
  if (!is_presentation(p.input))
    throw std::invalid_argument("abelianize expects a presentation \"<...>\"");
  const Presentation pres = parse_presentation(p.input);
  const AbelianInvariants inv = abelianize(pres);
  if (p.format == "json") {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : inv.torsion) torsion.push_back(t.str());
    const nlohmann::json j{{"generators", pres.generator_count()},
                           {"relators", pres.relator_count()},
                           {"group", inv.to_string()},
                           {"rank", inv.rank},
                           {"torsion", std::move(torsion)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "generators: " << pres.generator_count() << "\n";
  out << "relators: " << pres.relator_count() << "\n";
  out << "group: " << inv.to_string() << "\n";
  out << "rank: " << inv.rank << "\n";
  out << "torsion:";
  if (inv.torsion.empty()) {
    out << " -";
  } else {
    for (const Int& t : inv.torsion) out << " " << t.str();
  }
  out << "\n";
  return 0;
}

struct GeographyParams {
  std::string klass;
  std::string witnesses;
  bool domains = false;
  std::string format = "text";
  std::string from;
  std::string to;
  std::size_t samples = 11;
  bool assume_bmy = false;
};

KnownTable parse_table_tag(const std::string& s) {
  if (s == "smooth_trivial") return KnownTable::smooth_trivial;
  if (s == "symplectic_trivial") return KnownTable::symplectic_trivial;
  if (s == "minimal_trivial") return KnownTable::minimal_trivial;
  if (s == "smooth_Z6") return KnownTable::smooth_Z6;
  throw std::invalid_argument(
      "unknown table '" + s +
      "'; expected smooth_trivial, symplectic_trivial, minimal_trivial, or "
      "smooth_Z6");
}

std::vector<Witness> parse_witnesses(const std::string& s) {
  std::vector<Witness> ws;
  for (const std::string& part : split(s, ',')) {
    const auto fields = split(part, ':');
    if (fields.size() != 3 || fields[0].empty())
      throw std::invalid_argument("witness '" + part +
                                  "' is not label:chi:sigma");
    ws.push_back(
        {fields[0], parse_integer(fields[1]), parse_integer(fields[2])});
  }
  return ws;
}

int run_geography(const GeographyParams& p, std::ostream& out) {
  require_format(p.format, {"text", "json", "csv", "svg"});
  const int selectors = static_cast<int>(!p.klass.empty()) +
                        static_cast<int>(!p.witnesses.empty()) +
                        static_cast<int>(p.domains);
  if (selectors > 1)
    throw std::invalid_argument(
        "--class, --witnesses and --domains are mutually exclusive");
  if (p.from.empty() != p.to.empty())
    throw std::invalid_argument("--from and --to must be given together");

  if (p.domains) {
    if (p.format == "csv" || p.format == "svg")
      throw std::invalid_argument("--domains supports text or json output");
    const std::vector<ConeDomain> ds = {smooth_domain(), symplectic_domain(),
                                        minimal_domain(p.assume_bmy)};
    if (p.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const ConeDomain& d : ds) arr.push_back(domain_json(d));
      out << arr.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < ds.size(); ++i)
        out << (i ? "\n" : "") << domain_text(ds[i]);
    }
    return 0;
  }

  std::optional<Interval> window;
  if (!p.from.empty())
    window = Interval{parse_rational(p.from), parse_rational(p.to)};

  std::vector<EnvelopeFn> fns;
  if (!p.klass.empty()) {
    fns.push_back(known_table(parse_table_tag(p.klass)));
  } else if (!p.witnesses.empty()) {
    if (!window)
      throw std::invalid_argument("--witnesses needs --from and --to");
    fns.push_back(upper_envelope(parse_witnesses(p.witnesses), *window));
  } else {
    fns.push_back(known_table(KnownTable::smooth_trivial));
    fns.push_back(known_table(KnownTable::symplectic_trivial));
    fns.push_back(known_table(KnownTable::minimal_trivial));
  }

  if (p.format == "csv") {
    if (fns.size() != 1)
      throw std::invalid_argument("csv output needs --class or --witnesses");
    const EnvelopeFn& f = fns.front();
    Rational from, to;
    if (window) {
      from = *window->lo;
      to = *window->hi;
    } else {
      if (f.pieces.empty() || !f.pieces.front().lo || !f.pieces.back().hi)
        throw std::invalid_argument("csv output needs --from and --to");
      from = *f.pieces.front().lo;
      to = *f.pieces.back().hi;
    }
    out << envelope_csv(f, from, to, p.samples);
    return 0;
  }

  /* A window restricts what text/json/svg show. */
  if (window && p.witnesses.empty())
    for (EnvelopeFn& f : fns) f = restrict_envelope(f, *window);

  if (p.format == "json") {
    if (fns.size() == 1) {
      out << envelope_json(fns.front()).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const EnvelopeFn& f : fns) arr.push_back(envelope_json(f));
      out << arr.dump(2) << "\n";
    }
  } else if (p.format == "svg") {
    std::vector<std::pair<std::string, EnvelopeFn>> charts;
    charts.reserve(fns.size());
    for (const EnvelopeFn& f : fns) charts.emplace_back(f.label, f);
    out << envelope_svg(charts);
  } else {
    for (std::size_t i = 0; i < fns.size(); ++i)
      out << (i ? "\n" : "") << envelope_text(fns[i]);
  }
  return 0;
}

struct TableParams {
  std::string family;
  long long max = 12;
  std::string format = "text";
};

int run_table(const TableParams& p, std::ostream& out) {
  require_format(p.format, {"text", "csv", "json"});
  long long start = 0;
  if (p.family == "free" || p.family == "zn")
    start = 1;
  else if (p.family == "cyclic")
    start = 2;
  else
    throw std::invalid_argument("unknown table family '" + p.family +
                                "'; expected free, cyclic, or zn");
  if (p.max < start)
    throw std::invalid_argument("--max must be at least " +
                                std::to_string(start));
  const auto make = [&](long long n) {
    if (p.family == "free") return GroupFamily::free_group(n);
    if (p.family == "cyclic") return GroupFamily::cyclic(n);
    return GroupFamily::free_abelian(n);
  };
  const auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream body;
  if (p.format == "csv")
    body << "n,chi_lower,chi_upper,chi_exact,cs_lower,cs_upper,cs_exact\n";
  if (p.format == "text") {
    body << "family: " << p.family << "\n";
    body << std::setw(4) << "n" << std::setw(10) << "chi_lo" << std::setw(10)
         << "chi_hi" << std::setw(11) << "chi_exact" << std::setw(9)
         << "cs_lo" << std::setw(9) << "cs_hi" << std::setw(10) << "cs_exact"
         << "\n";
  }
  for (long long n = start; n <= p.max; ++n) {
    const GroupFamily f = make(n);
    const BoundReport chi = family_report(f, Target::chi);
    const BoundReport cs = family_report(f, Target::chi_plus_sigma);
    if (p.format == "json") {
      const auto jopt = [](const std::optional<long long>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
      };
      rows.push_back({{"n", n},
                      {"chi_lower", jopt(chi.lower)},
                      {"chi_upper", jopt(chi.upper)},
                      {"chi_exact", chi.exact},
                      {"cs_lower", jopt(cs.lower)},
                      {"cs_upper", jopt(cs.upper)},
                      {"cs_exact", cs.exact}});
    } else if (p.format == "csv") {
      body << n << "," << opt(chi.lower) << "," << opt(chi.upper) << ","
           << (chi.exact ? "yes" : "no") << "," << opt(cs.lower) << ","
           << opt(cs.upper) << "," << (cs.exact ? "yes" : "no") << "\n";
    } else {
      body << std::setw(4) << n << std::setw(10) << opt(chi.lower)
           << std::setw(10) << opt(chi.upper) << std::setw(11)
           << (chi.exact ? "yes" : "no") << std::setw(9) << opt(cs.lower)
           << std::setw(9) << opt(cs.upper) << std::setw(10)
           << (cs.exact ? "yes" : "no") << "\n";
    }
  }
  if (p.format == "json")
    out << rows.dump(2) << "\n";
  else
    out << body.str();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "exact Euler characteristic and signature bounds for closed symplectic "
      "4-manifolds with a prescribed fundamental group"};
  app.name("symgeo");
  app.require_subcommand(1);

  BoundsParams bp;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "merged lower and upper bounds for chi or chi+sigma");
  bounds->add_option("input", bp.input,
                     "presentation \"<x,y|[x,y]>\" or family spec "
                     "(trivial, free:n, cyclic:n, zn:n, surface:g, "
                     "gpf:k,l[,inf...])")
      ->required();
  bounds->add_option("--target", bp.target, "chi or chi+sigma");
  bounds->add_option("--format", bp.format, "text or json");
  bounds->add_flag("--assume-bmy", bp.assume_bmy,
                   "also apply the conjectural Bogomolov-Miyaoka-Yau bound");
  bounds->add_flag("--hypothetical", bp.hypothetical,
                   "allow helper summands smaller than any known construction");
  bounds->add_option("--small-summands", bp.small_summands,
                     "helper chi values k,l for the summand-based upper bound");
  bounds->add_option("--gompf", bp.gompf,
                     "curves,edges[,spin] for the surface-system upper bound");

  ConstructParams cp;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a symplectic class realizing the given group");
  construct->add_option("input", cp.input,
                        "presentation \"<a|a^5>\", free:n, or cyclic:n")
      ->required();
  construct->add_option("--format", cp.format, "json or text");

  AbelianizeParams ap;
  CLI::App* abelianize = app.add_subcommand(
      "abelianize", "abelian invariants of a presentation");
  abelianize->add_option("input", ap.input, "presentation \"<x,y|[x,y]>\"")
      ->required();
  abelianize->add_option("--format", ap.format, "text or json");

  GeographyParams gp;
  CLI::App* geography = app.add_subcommand(
      "geography", "piecewise-linear envelopes and domain cones for "
                   "f(a,b) = inf a chi + b sigma");
  geography->add_option("--class", gp.klass,
                        "known table: smooth_trivial, symplectic_trivial, "
                        "minimal_trivial, smooth_Z6");
  geography->add_option("--witnesses", gp.witnesses,
                        "comma list label:chi:sigma for an upper envelope");
  geography->add_flag("--domains", gp.domains,
                      "print the bounded-direction cones instead");
  geography->add_option("--format", gp.format, "text, json, csv, or svg");
  geography->add_option("--from", gp.from, "left end of the b window");
  geography->add_option("--to", gp.to, "right end of the b window");
  geography->add_option("--samples", gp.samples, "csv sample count");
  geography->add_flag("--assume-bmy", gp.assume_bmy,
                      "include the conjectural wider minimal cone note");

  TableParams tp;
  CLI::App* table = app.add_subcommand(
      "table", "bound tables for a family across a range of n");
  table->add_option("family", tp.family, "free, cyclic, or zn")->required();
  table->add_option("--max", tp.max, "largest n (default 12)");
  table->add_option("--format", tp.format, "text, csv, or json");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("symgeo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) return run_bounds(bp, out);
    if (construct->parsed()) return run_construct(cp, out);
    if (abelianize->parsed()) return run_abelianize(ap, out);
    if (geography->parsed()) return run_geography(gp, out);
    if (table->parsed()) return run_table(tp, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (position " << e.position() << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace symgeo::cli
