#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/hypergraph.hpp"

namespace hspec {

enum class MatrixKind {
    adjacency_r,
    adjacency_b,
    transition,
    laplacian_r,
    laplacian_b,
    signless_q,
    general_adjacency,
    general_laplacian,
    general_signless,
    unit_normalized,
};

std::string_view to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view name);
const std::vector<MatrixKind>& all_matrix_kinds();

bool is_general_kind(MatrixKind kind);
// Kinds whose definition is symmetric in u,v for every hypergraph.
bool is_symmetric_kind(MatrixKind kind);

// Positive vertex and edge weights, keyed by label / edge id.
struct WeightFunctions {
    std::map<std::string, double, std::less<>> delta_v;
    std::map<std::string, double, std::less<>> delta_e;
};

struct HypergraphMatrix {
    MatrixKind kind;
    std::vector<std::string> index;  // row/column labels in vertex order
    CMatrix entries;

    Index order() const { return static_cast<Index>(entries.rows()); }
};

HypergraphMatrix build_matrix(const Hypergraph& h, MatrixKind kind,
                              const std::optional<WeightFunctions>& weights = std::nullopt);

struct RowSumReport {
    bool applicable = false;
    Complex expected;
    std::vector<Complex> row_sums;
    std::vector<Index> violations;  // rows off by more than the tolerance

    bool ok() const { return violations.empty(); }
};

// Laplacian kinds should have zero row sums and the transition kind unit row
// sums; other kinds are reported as not applicable.
RowSumReport row_sum_check(const HypergraphMatrix& m, double tol = 1e-12);

}  // namespace hspec
