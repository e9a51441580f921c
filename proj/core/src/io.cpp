#include "polyhodge/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyhodge {

using njson = nlohmann::ordered_json;

namespace {

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for presentation");
  return v.convert_to<long long>();
}

std::string latex_rational(const Rational& r) {
  if (is_integral(r)) return to_string(r);
  std::string sign = r < 0 ? "-" : "";
  Rational a = r < 0 ? Rational(-r) : r;
  return sign + "\\tfrac{" + to_string(Int(numerator(a))) + "}{" + to_string(Int(denominator(a))) + "}";
}

njson betti_json(const std::vector<long long>& betti) {
  return njson(betti);
}

const njson& require_key(const njson& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

long long require_int(const njson& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::string require_string(const njson& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational require_rational(const njson& j, const char* what) {
  try {
    return parse_rational(require_string(j, what));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_point(const LatticePoint& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---- Input ------------------------------------------------------------------

LoadedInput input_from_weights(const std::vector<Int>& weights) {
  WeightRealization real = realize_weights(weights);
  LoadedInput input;
  input.weights = real.vertex_weights;  // ascending
  input.vertex_weights = real.vertex_weights;
  input.polytope = std::move(real.polytope);
  return input;
}

LoadedInput parse_polytope_document(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level document must be an object");

  if (j.contains("weights")) {
    const njson& wj = j["weights"];
    if (!wj.is_array() || wj.size() < 2)
      throw ParseError("weights must be an array of at least two integers");
    std::vector<Int> weights;
    for (const njson& e : wj) {
      long long v = require_int(e, "weight");
      if (v <= 0) throw ParseError("weights must be positive");
      weights.push_back(Int(v));
    }
    return input_from_weights(weights);
  }

  long long n = require_int(require_key(j, "dimension"), "dimension");
  if (n < 1) throw ParseError("dimension must be at least 1");
  const njson& vj = require_key(j, "vertices");
  if (!vj.is_array() || vj.empty()) throw ParseError("vertices must be a nonempty array");
  std::vector<LatticePoint> vertices;
  for (const njson& row : vj) {
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw ParseError("each vertex must be an array of 'dimension' integers");
    LatticePoint v;
    for (const njson& e : row) v.push_back(Int(require_int(e, "vertex coordinate")));
    vertices.push_back(std::move(v));
  }

  Polytope p;
  if (j.contains("facets")) {
    const njson& fj = j["facets"];
    if (!fj.is_array() || fj.empty()) throw ParseError("facets must be a nonempty array");
    std::vector<std::vector<int>> facets;
    for (const njson& row : fj) {
      if (!row.is_array()) throw ParseError("each facet must be an array of vertex indices");
      std::vector<int> f;
      for (const njson& e : row) {
        long long idx = require_int(e, "facet index");
        if (idx < 0 || idx >= static_cast<long long>(vertices.size()))
          throw ParseError("facet index out of range");
        f.push_back(static_cast<int>(idx));
      }
      facets.push_back(std::move(f));
    }
    p = make_polytope(static_cast<int>(n), std::move(vertices), std::move(facets));
  } else {
    if (static_cast<long long>(vertices.size()) != n + 1)
      throw ParseError("facets are required unless the polytope is a simplex (n+1 vertices)");
    p = make_simplex(std::move(vertices));
  }

  LoadedInput input;
  input.polytope = validate_polytope(std::move(p));
  if (static_cast<int>(input.polytope.vertices.size()) == input.polytope.n + 1)
    input.vertex_weights = vertex_weights(input.polytope);
  return input;
}

LoadedInput load_polytope(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope_document(buf.str());
}

// ---- Presentation tables ----------------------------------------------------

namespace {

// True when the input is a reduced-weight simplex, in which case sectors are
// presented with fraction labels in label order.
std::optional<SimplexWeights> reduced_weights(const LoadedInput& input) {
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

SectorDocument make_sector_document(const LoadedInput& input, const std::vector<Sector>& sectors) {
  SectorDocument doc;
  doc.n = input.polytope.n;
  doc.mu = normalized_volume(input.polytope);

  auto weights = reduced_weights(input);
  if (weights) {
    auto wps = wps_sector_table(*weights);
    if (wps.size() != sectors.size())
      throw std::logic_error("sector table size disagrees with the label set");
    // Position of each geometric sector, keyed by box point.
    std::map<LatticePoint, int> by_point;
    for (std::size_t i = 0; i < sectors.size(); ++i)
      if (sectors[i].box) by_point[sectors[i].box->point] = static_cast<int>(i);

    std::vector<int> geometric_index(wps.size());
    for (std::size_t k = 0; k < wps.size(); ++k) {
      if (wps[k].label == 0) {
        geometric_index[k] = 0;  // canonical order puts the untwisted sector first
        if (sectors.empty() || sectors[0].box)
          throw std::logic_error("untwisted sector is not first in canonical order");
        continue;
      }
      LatticePoint pt = wps_box_point(input.polytope, *input.vertex_weights, wps[k].label);
      auto it = by_point.find(pt);
      if (it == by_point.end())
        throw std::logic_error("label names a point the enumerator did not find");
      geometric_index[k] = it->second;
    }
    for (std::size_t k = 0; k < wps.size(); ++k) {
      const Sector& g = sectors[static_cast<std::size_t>(geometric_index[k])];
      if (g.age != wps[k].age || g.dim != wps[k].dim)
        throw std::logic_error("geometric sector disagrees with the label formulas");
      SectorRow row;
      row.label = to_string(wps[k].label);
      row.age = wps[k].age;
      row.dim = wps[k].dim;
      row.betti = g.betti;
      row.inverse = wps[k].inverse;
      doc.rows.push_back(std::move(row));
    }
    std::vector<int> order(doc.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return doc.rows[static_cast<std::size_t>(a)].age < doc.rows[static_cast<std::size_t>(b)].age;
    });
    doc.age_order = std::move(order);
    return doc;
  }

  for (const Sector& s : sectors) {
    SectorRow row;
    row.label = s.box ? format_point(s.box->point) : "0";
    row.age = s.age;
    row.dim = s.dim;
    row.betti = s.betti;
    row.inverse = s.inverse;
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

HodgeDocument make_hodge_document(const LoadedInput& input, const std::vector<Sector>& sectors) {
  HodgeDocument doc;
  doc.table = hodge_numbers(sectors, input.polytope.n);
  doc.mu = normalized_volume(input.polytope);
  auto ht = is_hodge_tate(sectors);
  doc.hodge_tate = ht.hodge_tate;
  doc.hard_lefschetz = hard_lefschetz_check(sectors, input.polytope.n);
  if (ht.witness) {
    const Sector& s = sectors[static_cast<std::size_t>(ht.witness->sector_index)];
    auto weights = reduced_weights(input);
    if (weights && s.box) {
      // Recover the fraction label: age determines it through any coefficient,
      // but matching by point is simplest.
      for (const WpsSector& ws : wps_sector_table(*weights)) {
        if (ws.label != 0 &&
            wps_box_point(input.polytope, *input.vertex_weights, ws.label) == s.box->point) {
          doc.witness_label = to_string(ws.label);
          break;
        }
      }
    }
    if (!doc.witness_label)
      doc.witness_label = s.box ? format_point(s.box->point) : std::string("0");
    doc.witness_age = ht.witness->age;
    doc.witness_inverse_age = ht.witness->inverse_age;
  }
  return doc;
}

// ---- Emitters ---------------------------------------------------------------

namespace {

std::string dump_json(const njson& j) {
  return j.dump(2) + "\n";
}

std::string emit_sectors_text(const SectorDocument& doc) {
  std::ostringstream out;
  out << "n = " << doc.n << "\n";
  out << "mu = " << to_string(doc.mu) << "\n";
  out << "sectors = " << doc.rows.size() << "\n";

  std::vector<std::array<std::string, 5>> rows;
  for (const SectorRow& r : doc.rows) {
    std::string betti;
    for (std::size_t i = 0; i < r.betti.size(); ++i) {
      if (i > 0) betti += ' ';
      betti += std::to_string(r.betti[i]);
    }
    rows.push_back({r.label, to_string(r.age), std::to_string(r.dim), std::to_string(r.inverse),
                    std::move(betti)});
  }
  std::array<std::string, 5> header{"label", "age", "dim", "inverse", "betti"};
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], r[c].size());
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::string head_line;
  for (std::size_t c = 0; c < 5; ++c) head_line += (c ? "  " : "") + pad(header[c], width[c]);
  while (!head_line.empty() && head_line.back() == ' ') head_line.pop_back();
  out << head_line << "\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) line += (c ? "  " : "") + pad(r[c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  if (doc.age_order) {
    out << "age order:";
    for (int idx : *doc.age_order) out << " " << doc.rows[static_cast<std::size_t>(idx)].label;
    out << "\n";
  }
  return out.str();
}

njson sectors_json(const SectorDocument& doc) {
  njson j;
  j["n"] = doc.n;
  j["mu"] = to_ll(doc.mu);
  njson labels = njson::array(), ages = njson::array(), dims = njson::array(),
        betti = njson::array(), inverse = njson::array();
  for (const SectorRow& r : doc.rows) {
    labels.push_back(r.label);
    ages.push_back(to_string(r.age));
    dims.push_back(r.dim);
    betti.push_back(betti_json(r.betti));
    inverse.push_back(r.inverse);
  }
  j["labels"] = std::move(labels);
  j["ages"] = std::move(ages);
  j["dims"] = std::move(dims);
  j["betti"] = std::move(betti);
  j["inverse"] = std::move(inverse);
  if (doc.age_order) j["age_order"] = *doc.age_order;
  return j;
}

std::string emit_sectors_latex(const SectorDocument& doc) {
  std::ostringstream out;
  out << "\\begin{array}{lllll}\n";
  out << "\\text{label} & \\text{age} & \\text{dim} & \\text{inverse} & \\text{betti} \\\\\n";
  for (const SectorRow& r : doc.rows) {
    out << r.label << " & " << latex_rational(r.age) << " & " << r.dim << " & " << r.inverse
        << " & (";
    for (std::size_t i = 0; i < r.betti.size(); ++i) {
      if (i > 0) out << ",";
      out << r.betti[i];
    }
    out << ") \\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

njson matrix_json(const std::vector<std::vector<long long>>& m) {
  njson rows = njson::array();
  for (const auto& r : m) rows.push_back(njson(r));
  return rows;
}

std::vector<std::vector<long long>> parse_matrix(const njson& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n + 1)
    throw ParseError(std::string(what) + " must be an (n+1) x (n+1) array");
  std::vector<std::vector<long long>> m;
  for (const njson& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
      throw ParseError(std::string(what) + " must be an (n+1) x (n+1) array");
    std::vector<long long> r;
    for (const njson& e : row) r.push_back(require_int(e, what));
    m.push_back(std::move(r));
  }
  return m;
}

std::string diamond_latex(const HodgeTable& t, DiamondPart which) {
  const int n = t.n;
  const auto& mat = which == DiamondPart::Total ? t.total
                    : which == DiamondPart::IntegralAges ? t.h0
                                                         : t.hneq0;
  std::ostringstream out;
  out << "\\begin{array}{*{" << (2 * n + 1) << "}{c}}\n";
  for (int r = 0; r <= 2 * n; ++r) {
    const int off = r <= n ? n - r : r - n;
    for (int c = 0; c <= 2 * n; ++c) {
      if (c > 0) out << " & ";
      if (c >= off && c <= 2 * n - off && (c - off) % 2 == 0) {
        int p = std::max(0, r - n) + (c - off) / 2;
        out << mat[static_cast<std::size_t>(p)][static_cast<std::size_t>(r - p)];
      }
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

}  // namespace

std::string emit_sectors(const SectorDocument& doc, Format format) {
  switch (format) {
    case Format::Text: return emit_sectors_text(doc);
    case Format::Json: return dump_json(sectors_json(doc));
    case Format::Latex: return emit_sectors_latex(doc);
  }
  throw std::logic_error("emit_sectors: unknown format");
}

std::string emit_hodge(const HodgeDocument& doc, Format format) {
  if (format == Format::Json) {
    njson j;
    j["n"] = doc.table.n;
    j["mu"] = to_ll(doc.mu);
    j["h0"] = matrix_json(doc.table.h0);
    j["hneq0"] = matrix_json(doc.table.hneq0);
    j["total"] = matrix_json(doc.table.total);
    j["hodge_tate"] = doc.hodge_tate;
    j["hard_lefschetz"] = doc.hard_lefschetz;
    if (doc.witness_label) {
      njson w;
      w["label"] = *doc.witness_label;
      w["age"] = to_string(*doc.witness_age);
      w["inverse_age"] = to_string(*doc.witness_inverse_age);
      j["hodge_tate_witness"] = std::move(w);
    }
    return dump_json(j);
  }
  if (format == Format::Latex) {
    std::ostringstream out;
    out << "% total\n" << diamond_latex(doc.table, DiamondPart::Total);
    out << "% integral-age part\n" << diamond_latex(doc.table, DiamondPart::IntegralAges);
    out << "% fractional-age part\n" << diamond_latex(doc.table, DiamondPart::FractionalAges);
    return out.str();
  }
  std::ostringstream out;
  out << "n = " << doc.table.n << "\n";
  out << "mu = " << to_string(doc.mu) << "\n";
  out << "hodge-tate: " << (doc.hodge_tate ? "true" : "false") << "\n";
  if (!doc.hodge_tate && doc.witness_label) {
    out << "hodge-tate witness: label " << *doc.witness_label << " (age "
        << to_string(*doc.witness_age) << ", inverse age " << to_string(*doc.witness_inverse_age)
        << ")\n";
  }
  out << "hard-lefschetz: " << (doc.hard_lefschetz ? "true" : "false") << "\n";
  out << "total:\n" << render_diamond(doc.table, DiamondPart::Total);
  out << "integral-age part:\n" << render_diamond(doc.table, DiamondPart::IntegralAges);
  out << "fractional-age part:\n" << render_diamond(doc.table, DiamondPart::FractionalAges);
  return out.str();
}

std::string emit_spectrum(const SpectrumDocument& doc, Format format) {
  if (doc.values.values.empty()) return "{}\n";
  if (format == Format::Json) {
    njson j;
    njson values = njson::array();
    for (const Rational& v : doc.values.values) values.push_back(to_string(v));
    j["values"] = std::move(values);
    j["mu"] = static_cast<long long>(doc.values.values.size());
    return dump_json(j);
  }
  if (format == Format::Latex) {
    std::ostringstream out;
    out << "\\left\\{";
    for (std::size_t i = 0; i < doc.values.values.size(); ++i) {
      if (i > 0) out << ", ";
      out << latex_rational(doc.values.values[i]);
    }
    out << "\\right\\}\n";
    return out.str();
  }
  std::ostringstream out;
  out << "mu = " << doc.values.values.size() << "\n";
  out << "spectrum:";
  for (const Rational& v : doc.values.values) out << " " << to_string(v);
  out << "\n";
  return out.str();
}

std::string emit_jordan(const JordanDocument& doc, Format format) {
  if (format == Format::Json) {
    njson j;
    njson blocks = njson::array();
    for (const JordanBlock& b : doc.jordan.blocks) {
      njson e;
      e["value"] = to_string(b.primitive_value);
      e["size"] = b.size;
      e["multiplicity"] = b.multiplicity;
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    return dump_json(j);
  }
  if (format == Format::Latex) {
    std::ostringstream out;
    out << "\\begin{array}{rrr}\n";
    out << "\\text{value} & \\text{size} & \\text{multiplicity} \\\\\n";
    for (const JordanBlock& b : doc.jordan.blocks)
      out << latex_rational(b.primitive_value) << " & " << b.size << " & " << b.multiplicity
          << " \\\\\n";
    out << "\\end{array}\n";
    return out.str();
  }
  std::ostringstream out;
  out << "blocks (value, size, multiplicity):\n";
  for (const JordanBlock& b : doc.jordan.blocks)
    out << to_string(b.primitive_value) << "  " << b.size << "  " << b.multiplicity << "\n";
  return out.str();
}

std::string emit_polarize(const PolarizeDocument& doc, Format format) {
  if (format == Format::Json) {
    njson parts = njson::array();
    for (const PrimitivePart* part : {&doc.report.primitive.integral, &doc.report.primitive.fractional}) {
      njson pj;
      pj["r"] = part->r;
      njson entries = njson::array();
      for (const PrimitiveEntry& e : part->entries) {
        njson ej;
        ej["nu"] = e.nu;
        ej["dim"] = e.dim;
        njson split;
        for (const auto& [p, d] : e.hodge_split) split[std::to_string(p)] = d;
        ej["split"] = std::move(split);
        entries.push_back(std::move(ej));
      }
      pj["entries"] = std::move(entries);
      parts.push_back(std::move(pj));
    }
    njson hv = njson::array();
    for (const LabelHValue& lv : doc.report.h_values) {
      njson e;
      e["label"] = to_string(lv.label);
      e["rational"] = to_string(lv.value.rational_part);
      e["two_pi_exponent"] = lv.value.two_pi_exponent;
      hv.push_back(std::move(e));
    }
    njson j;
    j["parts"] = std::move(parts);
    j["h_values"] = std::move(hv);
    j["certificate"] = doc.report.pass ? "pass" : "fail";
    return dump_json(j);
  }

  if (format == Format::Latex) {
    std::ostringstream out;
    out << "\\begin{array}{llll}\n";
    out << "\\text{part} & \\nu & \\dim & \\text{split} \\\\\n";
    for (const PrimitivePart* part : {&doc.report.primitive.integral, &doc.report.primitive.fractional}) {
      for (const PrimitiveEntry& e : part->entries) {
        out << "r=" << part->r << " & " << e.nu << " & " << e.dim << " & ";
        bool first = true;
        for (const auto& [p, d] : e.hodge_split) {
          if (!first) out << ",\\;";
          out << "p{=}" << p << ":" << d;
          first = false;
        }
        out << " \\\\\n";
      }
    }
    out << "\\end{array}\n";
    if (!doc.report.h_values.empty()) {
      out << "\\begin{array}{ll}\n";
      out << "\\text{label} & h \\\\\n";
      for (const LabelHValue& lv : doc.report.h_values) {
        out << latex_rational(lv.label) << " & " << latex_rational(lv.value.rational_part)
            << "\\,(2\\pi)^{" << lv.value.two_pi_exponent << "} \\\\\n";
      }
      out << "\\end{array}\n";
    }
    out << "% certificate: " << (doc.report.pass ? "pass" : "fail") << "\n";
    return out.str();
  }

  std::ostringstream out;
  out << "certificate: " << (doc.report.pass ? "pass" : "fail") << "\n";
  for (const PrimitivePart* part : {&doc.report.primitive.integral, &doc.report.primitive.fractional}) {
    out << "part r=" << part->r
        << (part->r == doc.n ? " (integral ages)" : " (fractional ages)") << ":\n";
    for (const PrimitiveEntry& e : part->entries) {
      out << "  P_" << (part->r + e.nu) << " (nu=" << e.nu << "): dim " << e.dim << ", split";
      for (const auto& [p, d] : e.hodge_split) out << " p=" << p << ":" << d;
      out << "\n";
    }
  }
  if (!doc.report.h_values.empty()) {
    out << "h-values:\n";
    for (const LabelHValue& lv : doc.report.h_values) {
      out << "  label " << to_string(lv.label) << ": " << to_string(lv.value.rational_part)
          << " * (2pi)^" << lv.value.two_pi_exponent << "\n";
    }
  }
  return out.str();
}

// ---- Parsers (round-trip inverses of the JSON emitters) ----------------------

SectorDocument parse_sectors_json(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  SectorDocument doc;
  doc.n = static_cast<int>(require_int(require_key(j, "n"), "n"));
  doc.mu = Int(require_int(require_key(j, "mu"), "mu"));
  const njson& labels = require_key(j, "labels");
  const njson& ages = require_key(j, "ages");
  const njson& dims = require_key(j, "dims");
  const njson& betti = require_key(j, "betti");
  const njson& inverse = require_key(j, "inverse");
  if (!labels.is_array() || !ages.is_array() || !dims.is_array() || !betti.is_array() ||
      !inverse.is_array() || labels.size() != ages.size() || labels.size() != dims.size() ||
      labels.size() != betti.size() || labels.size() != inverse.size())
    throw ParseError("sector table arrays must have equal length");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    SectorRow row;
    row.label = require_string(labels[i], "label");
    row.age = require_rational(ages[i], "age");
    row.dim = static_cast<int>(require_int(dims[i], "dim"));
    if (!betti[i].is_array()) throw ParseError("betti entries must be arrays");
    for (const njson& e : betti[i]) row.betti.push_back(require_int(e, "betti"));
    row.inverse = static_cast<int>(require_int(inverse[i], "inverse"));
    doc.rows.push_back(std::move(row));
  }
  if (j.contains("age_order")) {
    std::vector<int> order;
    for (const njson& e : j["age_order"]) order.push_back(static_cast<int>(require_int(e, "age_order")));
    doc.age_order = std::move(order);
  }
  return doc;
}

HodgeDocument parse_hodge_json(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  HodgeDocument doc;
  doc.table.n = static_cast<int>(require_int(require_key(j, "n"), "n"));
  doc.mu = Int(require_int(require_key(j, "mu"), "mu"));
  doc.table.h0 = parse_matrix(require_key(j, "h0"), doc.table.n, "h0");
  doc.table.hneq0 = parse_matrix(require_key(j, "hneq0"), doc.table.n, "hneq0");
  doc.table.total = parse_matrix(require_key(j, "total"), doc.table.n, "total");
  const njson& ht = require_key(j, "hodge_tate");
  const njson& hl = require_key(j, "hard_lefschetz");
  if (!ht.is_boolean() || !hl.is_boolean()) throw ParseError("flags must be booleans");
  doc.hodge_tate = ht.get<bool>();
  doc.hard_lefschetz = hl.get<bool>();
  if (j.contains("hodge_tate_witness")) {
    const njson& w = j["hodge_tate_witness"];
    doc.witness_label = require_string(require_key(w, "label"), "witness label");
    doc.witness_age = require_rational(require_key(w, "age"), "witness age");
    doc.witness_inverse_age = require_rational(require_key(w, "inverse_age"), "witness inverse age");
  }
  return doc;
}

SpectrumDocument parse_spectrum_json(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  SpectrumDocument doc;
  if (j.is_object() && j.empty()) return doc;
  const njson& values = require_key(j, "values");
  if (!values.is_array()) throw ParseError("values must be an array");
  for (const njson& e : values) doc.values.values.push_back(require_rational(e, "spectrum value"));
  long long mu = require_int(require_key(j, "mu"), "mu");
  if (mu != static_cast<long long>(doc.values.values.size()))
    throw ParseError("mu disagrees with the number of spectrum values");
  if (!std::is_sorted(doc.values.values.begin(), doc.values.values.end()))
    throw ParseError("spectrum values must be sorted");
  return doc;
}

}  // namespace polyhodge
