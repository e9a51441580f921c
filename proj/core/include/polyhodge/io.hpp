#pragma once

#include "polyhodge/hodge.hpp"
#include "polyhodge/polarization.hpp"
#include "polyhodge/polytope.hpp"
#include "polyhodge/sectors.hpp"
#include "polyhodge/spectrum.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyhodge {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Latex };

// ---- Input documents -------------------------------------------------------

// A polytope input: either explicit {dimension, vertices[, facets]} (facets
// auto-generated when the vertex count is n+1) or the weight-vector shorthand
// {weights: [...]}. vertex_weights is filled for simplices so fraction labels
// can be attached when the weight tuple is reduced.
struct LoadedInput {
  Polytope polytope;  // validated
  std::optional<std::vector<Int>> weights;        // present for shorthand input
  std::optional<std::vector<Int>> vertex_weights; // present when p is a simplex
};

// Throws ParseError on malformed documents, ValidationError on bad geometry.
LoadedInput load_polytope(const std::string& path);
LoadedInput parse_polytope_document(const std::string& text);
LoadedInput input_from_weights(const std::vector<Int>& weights);

// ---- Output documents ------------------------------------------------------

struct SectorRow {
  std::string label;  // fraction in weight mode, coordinate tuple otherwise
  Rational age;
  int dim = 0;
  std::vector<long long> betti;
  int inverse = 0;  // row index of the involution partner
};

struct SectorDocument {
  int n = 0;
  Int mu;
  std::vector<SectorRow> rows;
  // In weight mode rows follow label order and this holds the permutation
  // that re-sorts them by age; absent in polytope mode (already age-ordered).
  std::optional<std::vector<int>> age_order;
};

struct HodgeDocument {
  HodgeTable table;
  Int mu;
  bool hodge_tate = false;
  bool hard_lefschetz = false;
  std::optional<std::string> witness_label;  // sector violating Hodge-Tate
  std::optional<Rational> witness_age, witness_inverse_age;
};

struct SpectrumDocument {
  Spectrum values;
};

struct JordanDocument {
  JordanType jordan;
};

struct PolarizeDocument {
  int n = 0;
  PolarizationReport report;
};

// Builds the presentation table. When the input carries a reduced weight
// tuple the rows are labeled by fractions and ordered by label; otherwise by
// canonical sector order with coordinate labels.
SectorDocument make_sector_document(const LoadedInput& input, const std::vector<Sector>& sectors);
HodgeDocument make_hodge_document(const LoadedInput& input, const std::vector<Sector>& sectors);

std::string emit_sectors(const SectorDocument& doc, Format format);
std::string emit_hodge(const HodgeDocument& doc, Format format);
std::string emit_spectrum(const SpectrumDocument& doc, Format format);
std::string emit_jordan(const JordanDocument& doc, Format format);
std::string emit_polarize(const PolarizeDocument& doc, Format format);

// Inverses of the structured emitters, for round-trip checks.
SectorDocument parse_sectors_json(const std::string& text);
HodgeDocument parse_hodge_json(const std::string& text);
SpectrumDocument parse_spectrum_json(const std::string& text);

std::string format_point(const LatticePoint& v);

}  // namespace polyhodge
