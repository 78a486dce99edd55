#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hspec/dynamics.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/matrix_builders.hpp"
#include "hspec/oracle.hpp"
#include "hspec/spectral_engine.hpp"
#include "hspec/symmetry.hpp"
#include "hspec/unit_symmetry.hpp"

// Reading and writing the JSON documents used by the command line.
namespace hspec {

using Json = nlohmann::ordered_json;

// Throws ParseError naming the path when it cannot be read.
std::string read_file(const std::string& path);

// {"delta_V": {label: number}, "delta_E": {edge id: number}}
WeightFunctions parse_weights(std::string_view text);

// {"map": {label: label}}; labels left out are fixed.
Permutation parse_permutation(const Hypergraph& h, std::string_view text);

// {"unit_map": {unit-key: unit-key}}; units left out are fixed.
std::vector<Index> parse_unit_map(const Hypergraph& h, const UnitPartition& units, std::string_view text);

// {"x0": [...]} or a bare list in vertex order, or {"x0": {label: value}}.
// A value is a number or [re, im].
CVector parse_state(const Hypergraph& h, std::string_view text);

Json complex_json(Complex z);
Json vector_json(const CVector& x);
Json matrix_json(const CMatrix& m);  // row-major list of [re, im]

Json units_document(const Hypergraph& h, const UnitPartition& units);
Json matrix_document(const HypergraphMatrix& m);
Json decomposition_document(const SpectralDecomposition& d);
Json verification_json(const SpectrumReport& r);
Json trajectory_document(const Trajectory& t);

// Two-space indent, numbers with 17 significant digits, integers as integers,
// short scalar arrays on one line.
std::string dump_json(const Json& doc);

}  // namespace hspec
