#include "polyhodge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace polyhodge {

namespace {

std::vector<Int> parse_weight_list(const std::string& text) {
  std::vector<Int> weights;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("weights must be a comma-separated list of positive integers");
    Int w(token);
    if (w <= 0) throw UsageError("weights must be positive");
    weights.push_back(std::move(w));
  }
  if (weights.size() < 2) throw UsageError("at least two weights are required");
  return weights;
}

std::optional<SimplexWeights> reduced_simplex_weights(const LoadedInput& input) {
  if (!input.vertex_weights) return std::nullopt;
  SimplexWeights w;
  w.q = *input.vertex_weights;
  std::sort(w.q.begin(), w.q.end());
  w.mu = 0;
  for (const Int& qi : w.q) w.mu += qi;
  if (!is_reduced(w)) return std::nullopt;
  return w;
}

}  // namespace

std::string usage_text() {
  return
      "usage: polyhodge <command> (--weights a,b,c | --polytope FILE) [options]\n"
      "\n"
      "commands:\n"
      "  sectors   twisted-sector table: labels, ages, dimensions, Betti vectors\n"
      "  hodge     Hodge numbers (total and split by age integrality), diamonds,\n"
      "            Hodge-Tate and hard Lefschetz flags\n"
      "  spectrum  spectrum at infinity as a sorted multiset of rationals\n"
      "  jordan    Jordan block type of the monodromy weight structure\n"
      "  polarize  primitive decomposition, Hodge splits, polarization h-values\n"
      "  check     run the full invariant suite; exit 1 when any item fails\n"
      "\n"
      "input (exactly one):\n"
      "  --weights a,b,c    weight tuple of a weighted projective space\n"
      "  --polytope FILE    JSON document with either {\"weights\": [...]} or\n"
      "                     {\"dimension\": n, \"vertices\": [[...], ...]} plus an\n"
      "                     optional \"facets\" list (omitted for simplices)\n"
      "\n"
      "options:\n"
      "  --format FMT       text (default), json, or latex\n"
      "  --output FILE      write the document to FILE instead of stdout\n"
      "\n"
      "exit codes: 0 ok, 1 failed checks, 2 usage, 3 parse error, 4 invalid polytope\n";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"orbifold Hodge data of simplicial lattice polytopes"};
  app.set_help_flag();
  app.require_subcommand(1);

  struct Raw {
    std::string weights, polytope, format = "text", output;
  };
  std::map<std::string, Command> names{
      {"sectors", Command::Sectors}, {"hodge", Command::Hodge},
      {"spectrum", Command::Spectrum}, {"jordan", Command::Jordan},
      {"polarize", Command::Polarize}, {"check", Command::Check}};
  std::map<std::string, Raw> raw;
  for (const auto& [name, cmd] : names) {
    (void)cmd;
    CLI::App* sub = app.add_subcommand(name);
    sub->set_help_flag();
    Raw& r = raw[name];
    sub->add_option("--weights", r.weights);
    sub->add_option("--polytope", r.polytope);
    sub->add_option("--format", r.format);
    sub->add_option("--output", r.output);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* sub = app.get_subcommands().at(0);
  RunConfig config;
  config.command = names.at(sub->get_name());
  const Raw& r = raw.at(sub->get_name());

  if (!r.weights.empty() && !r.polytope.empty())
    throw UsageError("--weights and --polytope are mutually exclusive");
  if (r.weights.empty() && r.polytope.empty())
    throw UsageError("an input is required: --weights or --polytope");
  if (!r.weights.empty()) config.weights = parse_weight_list(r.weights);
  if (!r.polytope.empty()) config.polytope_path = r.polytope;

  if (r.format == "text") config.format = Format::Text;
  else if (r.format == "json") config.format = Format::Json;
  else if (r.format == "latex") config.format = Format::Latex;
  else throw UsageError("unknown format '" + r.format + "' (expected text, json, or latex)");

  if (!r.output.empty()) config.output_path = r.output;
  return config;
}

// ---- Invariant suite ---------------------------------------------------------

namespace {

using Detail = std::optional<std::string>;

std::string rstr(const Rational& r) { return to_string(r); }

}  // namespace

CheckReport run_checks(const LoadedInput& input) {
  CheckReport report;
  auto add = [&](const std::string& name, const std::function<Detail()>& fn) {
    CheckReport::Item item;
    item.name = name;
    try {
      Detail detail = fn();
      item.pass = !detail.has_value();
      if (detail) item.detail = *detail;
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = e.what();
    }
    report.items.push_back(std::move(item));
  };

  const Polytope& p = input.polytope;
  const int n = p.n;
  const Int mu = normalized_volume(p);
  const std::vector<Sector> sectors = enumerate_sectors(p);
  const HodgeTable hodge = hodge_numbers(sectors, n);
  const Spectrum spec = spectrum(sectors);
  const auto weights = reduced_simplex_weights(input);

  add("sector-mass", [&]() -> Detail {
    Int total = 0;
    for (const Sector& s : sectors)
      for (long long b : s.betti) total += b;
    if (total != mu)
      return "sum of sector Betti numbers is " + to_string(total) + ", expected mu = " + to_string(mu);
    return std::nullopt;
  });

  add("involution", [&]() -> Detail {
    for (std::size_t i = 0; i < sectors.size(); ++i) {
      const Sector& s = sectors[i];
      if (s.inverse < 0 || s.inverse >= static_cast<int>(sectors.size()))
        return "inverse index out of range";
      const Sector& t = sectors[static_cast<std::size_t>(s.inverse)];
      if (t.inverse != static_cast<int>(i)) return "involution is not an involution";
      if (!s.box && s.inverse != static_cast<int>(i)) return "untwisted sector is not fixed";
      if (s.dim != t.dim) return "involution changes sector dimension";
      if (s.age + t.age + s.dim != n)
        return "age equation fails: " + rstr(s.age) + " + " + rstr(t.age) + " + " +
               std::to_string(s.dim) + " != " + std::to_string(n);
    }
    return std::nullopt;
  });

  add("betti-palindrome", [&]() -> Detail {
    for (const Sector& s : sectors) {
      if (s.betti.empty() || s.betti.front() != 1) return "Betti vector does not start at 1";
      for (std::size_t k = 0; k < s.betti.size(); ++k)
        if (s.betti[k] != s.betti[s.betti.size() - 1 - k]) return "Betti vector is not palindromic";
      const Sector& t = sectors[static_cast<std::size_t>(s.inverse)];
      if (s.betti != t.betti) return "inverse sectors carry different Betti vectors";
    }
    return std::nullopt;
  });

  add("age-newton", [&]() -> Detail {
    for (const Sector& s : sectors) {
      if (!s.box) {
        if (s.age != 0) return "untwisted sector has nonzero age";
        continue;
      }
      Rational nu = newton_value(p, s.box->point);
      if (nu != s.age)
        return "age " + rstr(s.age) + " of " + format_point(s.box->point) +
               " disagrees with the piecewise-linear value " + rstr(nu);
      for (const Rational& c : s.box->coefficients)
        if (!(c > 0 && c < 1)) return "box coefficient outside (0,1)";
    }
    return std::nullopt;
  });

  add("box-count", [&]() -> Detail {
    for (const std::vector<int>& facet : p.facets) {
      std::set<int> fv(facet.begin(), facet.end());
      Int count = 1;  // origin
      for (const Sector& s : sectors) {
        if (!s.box) continue;
        bool inside = true;
        for (int v : s.box->support.vertex_indices)
          if (!fv.count(v)) { inside = false; break; }
        if (inside) count += 1;
      }
      std::vector<LatticePoint> cols;
      for (int v : facet) cols.push_back(p.vertices[static_cast<std::size_t>(v)]);
      Int vol = det(IntMatrix::from_columns(cols));
      if (vol < 0) vol = -vol;
      if (count != vol)
        return "facet box count " + to_string(count) + " != |det| = " + to_string(vol);
    }
    return std::nullopt;
  });

  add("strict-open-cross-check", [&]() -> Detail {
    // Independent confirmation of box membership on small faces via the
    // bounding-box scan; larger faces are skipped to keep the scan bounded.
    for (const Face& face : enumerate_faces(p)) {
      if (face.vertex_indices.empty() || face.vertex_indices.size() > 2) continue;
      std::vector<LatticePoint> expected;
      for (const Sector& s : sectors)
        if (s.box && s.box->support.vertex_indices == face.vertex_indices)
          expected.push_back(s.box->point);
      std::sort(expected.begin(), expected.end(), lex_less);
      std::vector<LatticePoint> generators;
      for (int v : face.vertex_indices) generators.push_back(p.vertices[static_cast<std::size_t>(v)]);
      // The scan projects to as many coordinates as there are generators, so
      // its size is a product of that many coordinate widths; skip faces
      // where even the narrowest widths multiply out too large.
      std::vector<Int> widths;
      for (int row = 0; row < n; ++row) {
        Int width = 1;
        for (const LatticePoint& g : generators)
          width += g[static_cast<std::size_t>(row)] < 0 ? -g[static_cast<std::size_t>(row)]
                                                        : g[static_cast<std::size_t>(row)];
        widths.push_back(width);
      }
      std::sort(widths.begin(), widths.end());
      Int scan_size = 1;
      for (std::size_t i = 0; i < generators.size(); ++i) scan_size *= widths[i];
      if (scan_size > 20000) continue;
      std::vector<LatticePoint> scanned;
      for (const ParallelepipedPoint& pt : enumerate_open_parallelepiped(IntMatrix::from_columns(generators)))
        scanned.push_back(pt.point);
      if (scanned != expected) return "open-parallelepiped scan disagrees with the sector list";
    }
    return std::nullopt;
  });

  add("hodge-mass", [&]() -> Detail {
    Int total = 0;
    for (const auto& row : hodge.total)
      for (long long v : row) total += v;
    if (total != mu) return "Hodge numbers sum to " + to_string(total) + ", expected " + to_string(mu);
    for (int pp = 0; pp <= n; ++pp)
      for (int q = 0; q <= n; ++q)
        if (hodge.total[static_cast<std::size_t>(pp)][static_cast<std::size_t>(q)] !=
            hodge.h0[static_cast<std::size_t>(pp)][static_cast<std::size_t>(q)] +
                hodge.hneq0[static_cast<std::size_t>(pp)][static_cast<std::size_t>(q)])
          return "total table is not the sum of the two parts";
    return std::nullopt;
  });

  add("hodge-symmetry", [&]() -> Detail {
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        auto sa = static_cast<std::size_t>(a), sb = static_cast<std::size_t>(b);
        if (hodge.total[sa][sb] != hodge.total[sb][sa] || hodge.h0[sa][sb] != hodge.h0[sb][sa] ||
            hodge.hneq0[sa][sb] != hodge.hneq0[sb][sa])
          return "Hodge table is not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    return std::nullopt;
  });

  add("fractional-edge-zero", [&]() -> Detail {
    for (int a = 0; a <= n; ++a) {
      auto sn = static_cast<std::size_t>(n), sa = static_cast<std::size_t>(a);
      if (hodge.hneq0[sn][sa] != 0 || hodge.hneq0[sa][sn] != 0)
        return "fractional-age part reaches degree n";
    }
    return std::nullopt;
  });

  add("hodge-filtration", [&]() -> Detail {
    auto filt = hodge_filtration(sectors, n);
    if (filt.at(0) != mu) return "F^0 is not the full space";
    if (filt.at(n + 1) != 0) return "F^{n+1} is not zero";
    for (int pp = 0; pp <= n; ++pp) {
      if (filt.at(pp) < filt.at(pp + 1)) return "Hodge filtration is not decreasing";
      long long row = 0;
      for (int q = 0; q <= n; ++q) row += hodge.total[static_cast<std::size_t>(pp)][static_cast<std::size_t>(q)];
      if (filt.at(pp) - filt.at(pp + 1) != row)
        return "graded Hodge piece at p = " + std::to_string(pp) + " disagrees with the table";
    }
    return std::nullopt;
  });

  add("hodge-vs-spectrum", [&]() -> Detail {
    auto gd = graded_dims(sectors);
    for (int pp = 0; pp <= n; ++pp) {
      long long row = 0;
      for (int q = 0; q <= n; ++q) row += hodge.total[static_cast<std::size_t>(pp)][static_cast<std::size_t>(q)];
      Int band = 0;
      for (const auto& [alpha, d] : gd)
        if (alpha > Rational(n - pp - 1) && alpha <= Rational(n - pp)) band += d;
      if (band != row)
        return "spectrum band (n-p-1, n-p] at p = " + std::to_string(pp) +
               " carries " + to_string(band) + ", table row sums to " + std::to_string(row);
    }
    return std::nullopt;
  });

  add("spectrum-symmetry", [&]() -> Detail {
    if (Int(spec.values.size()) != mu)
      return "spectrum has " + std::to_string(spec.values.size()) + " values, expected " + to_string(mu);
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      const Rational& a = spec.values[i];
      const Rational& b = spec.values[spec.values.size() - 1 - i];
      if (a + b != n) return "spectrum is not symmetric about n/2";
      if (a < 0 || a > n) return "spectrum value outside [0, n]";
    }
    return std::nullopt;
  });

  add("jordan-blocks", [&]() -> Detail {
    JordanType jordan = jordan_type(sectors);
    Int mass = 0;
    for (const JordanBlock& b : jordan.blocks) {
      if (b.size < 1 || b.size > n + 1) return "block size outside [1, n+1]";
      if (b.multiplicity < 1) return "nonpositive block multiplicity";
      mass += Int(b.size) * b.multiplicity;
    }
    if (mass != mu) return "Jordan blocks cover " + to_string(mass) + " of " + to_string(mu);
    try {
      block_pairing(jordan, n);
    } catch (const UnpairedBlockError& e) {
      return std::string("block pairing failed: ") + e.what();
    }
    return std::nullopt;
  });

  add("weight-symmetry", [&]() -> Detail {
    WeightProfile w = weight_filtration(sectors, n);
    Int mass = 0;
    for (const auto& [m, d] : w.gr_total) mass += d;
    if (mass != mu) return "graded weight pieces do not sum to mu";
    for (const auto& [m, d] : w.gr_integral)
      if (d != w.gr_integral.at(2 * n - m)) return "integral-age weight grading is not symmetric";
    for (const auto& [m, d] : w.gr_fractional) {
      int mirror = 2 * (n - 1) - m;
      long long other = mirror >= 0 && mirror <= 2 * n ? w.gr_fractional.at(mirror) : 0;
      if (d != other) return "fractional-age weight grading is not symmetric";
    }
    return std::nullopt;
  });

  add("hard-lefschetz-vs-hodge-tate", [&]() -> Detail {
    bool hl = hard_lefschetz_check(sectors, n);
    bool ht = is_hodge_tate(sectors).hodge_tate;
    if (hl != ht)
      return std::string("hard Lefschetz says ") + (hl ? "true" : "false") +
             ", Hodge-Tate says " + (ht ? "true" : "false");
    return std::nullopt;
  });

  add("hodge-tate-weights", [&]() -> Detail {
    HtWeightReport r = ht_weight_description(sectors, n);
    if (r.applicable && !r.filtration_matches)
      return "closed-form weight filtration fails in the Hodge-Tate case";
    if (r.applicable && r.all_ages_integral && !r.graded_matches)
      return "closed-form graded pieces fail in the Hodge-Tate all-integral case";
    return std::nullopt;
  });

  add("hodge-tate-vs-diamond", [&]() -> Detail {
    bool diagonal = true;
    for (int a = 0; a <= n && diagonal; ++a)
      for (int b = 0; b <= n; ++b)
        if (a != b && hodge.total[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0) {
          diagonal = false;
          break;
        }
    bool ht = is_hodge_tate(sectors).hodge_tate;
    if (diagonal != ht)
      return std::string("the diamond is ") + (diagonal ? "" : "not ") +
             "diagonal but the Hodge-Tate flag says " + (ht ? "true" : "false");
    return std::nullopt;
  });

  add("lefschetz-dimension-symmetry", [&]() -> Detail {
    // Hard Lefschetz forces the graded dimensions to pair up across the
    // middle; the converse is false, so only the implication is tested.
    if (!hard_lefschetz_check(sectors, n)) return std::nullopt;
    auto gd = graded_dims(sectors);
    auto at = [&](const Rational& a) {
      auto it = gd.find(a);
      return it == gd.end() ? 0LL : it->second;
    };
    for (int k = 0; 2 * k <= n; ++k)
      if (at(Rational(k)) != at(Rational(n - k)))
        return "integral degrees " + std::to_string(k) + " and " + std::to_string(n - k) +
               " have different dimensions";
    std::set<Rational> classes;
    for (const auto& [alpha, d] : gd)
      if (d != 0 && !is_integral(alpha)) classes.insert(fractional_part(alpha));
    for (const Rational& beta : classes)
      for (int k = 0; 2 * k <= n - 1; ++k)
        if (at(beta + k) != at(beta + (n - 1 - k)))
          return "fractional class " + rstr(beta) + " is not symmetric";
    return std::nullopt;
  });

  add("lefschetz-reassembly", [&]() -> Detail {
    PolarizationReport r = polarization_report(sectors, n, weights);
    if (!r.lefschetz_reassembly_ok) return "primitive parts do not reassemble the weight grading";
    if (!r.splits_consistent) return "primitive Hodge splits disagree with their dimensions";
    if (weights && !r.h_values_positive) return "a polarization h-value is not positive";
    return std::nullopt;
  });

  if (input.vertex_weights) {
    add("reflexive-agreement", [&]() -> Detail {
      SimplexWeights w;
      w.q = *input.vertex_weights;
      std::sort(w.q.begin(), w.q.end());
      w.mu = 0;
      for (const Int& qi : w.q) w.mu += qi;
      bool divisibility = true;
      for (const Int& qi : w.q)
        if (w.mu % qi != 0) divisibility = false;
      bool levels = true;
      for (const Int& level : p.facet_levels)
        if (level != 1) levels = false;
      if (is_reduced(w) && divisibility != levels)
        return "weight divisibility and facet levels disagree about reflexivity";
      return std::nullopt;
    });
  }

  if (weights) {
    add("wps-table-agreement", [&]() -> Detail {
      auto table = wps_sector_table(*weights);
      if (table.size() != sectors.size())
        return "label count " + std::to_string(table.size()) + " != sector count " +
               std::to_string(sectors.size());
      std::map<LatticePoint, std::size_t> by_point;
      for (std::size_t i = 0; i < sectors.size(); ++i)
        if (sectors[i].box) by_point[sectors[i].box->point] = i;
      std::vector<int> geometric(table.size(), -1);
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k].label == 0) {
          geometric[k] = 0;
          continue;
        }
        LatticePoint pt = wps_box_point(p, *input.vertex_weights, table[k].label);
        auto it = by_point.find(pt);
        if (it == by_point.end()) return "label " + rstr(table[k].label) + " names no sector";
        geometric[k] = static_cast<int>(it->second);
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        const Sector& s = sectors[static_cast<std::size_t>(geometric[k])];
        if (s.age != table[k].age)
          return "label " + rstr(table[k].label) + ": age " + rstr(table[k].age) +
                 " (closed form) vs " + rstr(s.age) + " (geometric)";
        if (s.dim != table[k].dim)
          return "label " + rstr(table[k].label) + ": dimension mismatch";
        if (geometric[static_cast<std::size_t>(table[k].inverse)] != s.inverse)
          return "label " + rstr(table[k].label) + ": involution mismatch";
      }
      return std::nullopt;
    });

    add("wps-betti-ones", [&]() -> Detail {
      for (const Sector& s : sectors)
        for (long long b : s.betti)
          if (b != 1) return "a weighted-projective sector has a Betti number other than 1";
      return std::nullopt;
    });

    add("wps-hodge-agreement", [&]() -> Detail {
      HodgeTable closed = wps_hodge_numbers(*weights);
      if (closed.h0 != hodge.h0 || closed.hneq0 != hodge.hneq0 || closed.total != hodge.total)
        return "closed-form Hodge numbers disagree with the sector computation";
      return std::nullopt;
    });

    add("wps-primitive-count", [&]() -> Detail {
      PrimitiveReport prim = primitive_dims(sectors, n);
      for (const PrimitivePart* part : {&prim.integral, &prim.fractional}) {
        const bool fractional = part->r == n - 1;
        std::map<int, long long> expected;
        for (const Sector& s : sectors)
          if (is_integral(s.age) != fractional) expected[s.dim] += 1;
        std::map<int, long long> got;
        for (const PrimitiveEntry& e : part->entries) got[e.nu] = e.dim;
        if (expected != got) return "primitive dimensions disagree with the sector-dimension census";
      }
      return std::nullopt;
    });
  }

  report.pass = true;
  for (const CheckReport::Item& item : report.items)
    if (!item.pass) report.pass = false;
  return report;
}

std::string emit_check(const CheckReport& report, Format format) {
  if (format == Format::Json) {
    // Reuse the ordered emitter living in io.cpp? The check document is small
    // enough to assemble by hand without pulling the JSON dependency here.
    std::ostringstream out;
    out << "{\n  \"checks\": [\n";
    for (std::size_t i = 0; i < report.items.size(); ++i) {
      const auto& item = report.items[i];
      out << "    {\n      \"name\": \"" << item.name << "\",\n      \"pass\": "
          << (item.pass ? "true" : "false");
      if (!item.detail.empty()) {
        std::string escaped;
        for (char c : item.detail) {
          if (c == '"' || c == '\\') escaped += '\\';
          escaped += c;
        }
        out << ",\n      \"detail\": \"" << escaped << "\"";
      }
      out << "\n    }" << (i + 1 < report.items.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"pass\": " << (report.pass ? "true" : "false") << "\n}\n";
    return out.str();
  }
  if (format == Format::Latex) {
    std::ostringstream out;
    out << "\\begin{array}{ll}\n";
    for (const auto& item : report.items)
      out << "\\text{" << item.name << "} & \\text{" << (item.pass ? "ok" : "FAIL") << "} \\\\\n";
    out << "\\end{array}\n% result: " << (report.pass ? "pass" : "fail") << "\n";
    return out.str();
  }
  std::ostringstream out;
  for (const auto& item : report.items) {
    if (item.pass)
      out << "ok " << item.name << "\n";
    else
      out << "FAIL " << item.name << ": " << item.detail << "\n";
  }
  out << "result: " << (report.pass ? "pass" : "fail") << "\n";
  return out.str();
}

// ---- Command execution --------------------------------------------------------

RunResult run_command(const RunConfig& config) {
  try {
    if (config.weights.has_value() == config.polytope_path.has_value())
      throw UsageError("exactly one input selector is required");
    LoadedInput input = config.weights ? input_from_weights(*config.weights)
                                       : load_polytope(*config.polytope_path);

    if (config.command == Command::Check) {
      CheckReport report = run_checks(input);
      return {report.pass ? kExitOk : kExitCheckFailed, emit_check(report, config.format), ""};
    }

    std::vector<Sector> sectors = enumerate_sectors(input.polytope);
    std::string out;
    switch (config.command) {
      case Command::Sectors:
        out = emit_sectors(make_sector_document(input, sectors), config.format);
        break;
      case Command::Hodge:
        out = emit_hodge(make_hodge_document(input, sectors), config.format);
        break;
      case Command::Spectrum: {
        SpectrumDocument doc;
        doc.values = spectrum(sectors);
        out = emit_spectrum(doc, config.format);
        break;
      }
      case Command::Jordan: {
        JordanDocument doc;
        doc.jordan = jordan_type(sectors);
        out = emit_jordan(doc, config.format);
        break;
      }
      case Command::Polarize: {
        PolarizeDocument doc;
        doc.n = input.polytope.n;
        doc.report = polarization_report(sectors, input.polytope.n, reduced_simplex_weights(input));
        out = emit_polarize(doc, config.format);
        break;
      }
      case Command::Check:
        break;  // handled above
    }
    return {kExitOk, out, ""};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {kExitValidation, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitCheckFailed, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << usage_text();
    return kExitUsage;
  }
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::cout << usage_text();
    return kExitOk;
  }

  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << usage_text();
    return kExitUsage;
  }

  RunResult result = run_command(config);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  if (result.exit_code == kExitOk || config.command == Command::Check) {
    if (config.output_path) {
      std::ofstream out(*config.output_path, std::ios::binary);
      if (!out || !(out << result.output)) {
        std::cerr << "error: cannot write output file " << *config.output_path << "\n";
        return kExitUsage;
      }
    } else {
      std::cout << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace polyhodge
