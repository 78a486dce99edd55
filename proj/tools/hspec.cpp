// hspec: command line front end for the hypergraph spectral toolkit.
//
// Exit codes: 0 all requested checks pass, 1 a verification failed,
// 2 bad input or a domain error (incompatible matrix, not an automorphism).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hspec/documents.hpp"
#include "hspec/dynamics.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/matrix_builders.hpp"
#include "hspec/oracle.hpp"
#include "hspec/random_instances.hpp"
#include "hspec/spectral_engine.hpp"
#include "hspec/symmetry.hpp"
#include "hspec/unit_symmetry.hpp"

using namespace hspec;

namespace {

struct Options {
    std::string hypergraph;
    std::string report;
    std::string kind = "adjacency_r";
    std::string weights;
    std::string symmetry;
    std::string mode = "automorphism";
    std::string x0;
    std::string out;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    Index steps = 10;
    Index count = 50;
    bool normalize = false;
};

constexpr int kFail = 1;
constexpr int kError = 2;

void emit(const Options& o, const Json& doc) {
    const std::string text = dump_json(doc);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + o.out + "'");
    f << text;
}

Hypergraph load_hypergraph(const std::string& path) {
    try {
        return parse_hypergraph(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

HypergraphMatrix load_matrix(const Options& o, const Hypergraph& h) {
    const MatrixKind kind = parse_matrix_kind(o.kind);
    std::optional<WeightFunctions> w;
    if (!o.weights.empty()) w = parse_weights(read_file(o.weights));
    return build_matrix(h, kind, w);
}

std::string require_symmetry(const Options& o) {
    if (o.symmetry.empty()) throw InvalidArgument("--symmetry is required");
    return read_file(o.symmetry);
}

void check_mode(const Options& o) {
    if (o.mode != "automorphism" && o.mode != "unit") {
        throw InvalidArgument("--mode must be 'automorphism' or 'unit'");
    }
}

std::string unit_name(const Hypergraph& h, const UnitPartition& units, Index i) {
    return "{" + unit_key(h, units.units[i]) + "}";
}

std::string format_value(Complex z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

// Renders a witness with labels (vertex labels or unit keys).
std::string describe(const CompatibilityWitness& w, const Permutation& p,
                     const std::function<std::string(Index)>& name) {
    return "entry (" + name(w.row) + ", " + name(w.col) + ") is " + format_value(w.value) + " but its image (" +
           name(p(w.row)) + ", " + name(p(w.col)) + ") is " + format_value(w.image_value);
}

int cmd_units(const Options& o) {
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const UnitPartition units = compute_units(h);
    Json doc = units_document(h, units);
    const auto contraction = unit_contraction(h, units);
    Json edges = Json::array();
    for (const auto& e : contraction.contracted.edges()) {
        Json members = Json::array();
        for (Index u : e.members) members.push_back(contraction.contracted.label(u));
        edges.push_back({{"id", e.id}, {"units", members}});
    }
    doc["contraction"] = edges;
    emit(o, doc);
    return 0;
}

int cmd_matrix(const Options& o) {
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const HypergraphMatrix m = load_matrix(o, h);
    Json doc = matrix_document(m);
    const auto rows = row_sum_check(m);
    if (rows.applicable) {
        Json sums = Json::array();
        for (const auto& z : rows.row_sums) sums.push_back(complex_json(z));
        doc["row_sums"] = {{"expected", complex_json(rows.expected)}, {"sums", sums}, {"ok", rows.ok()}};
    }
    emit(o, doc);
    return 0;
}

int cmd_validate(const Options& o) {
    check_mode(o);
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const std::string text = require_symmetry(o);
    Json doc;
    bool ok = true;
    if (o.mode == "automorphism") {
        const Permutation p = parse_permutation(h, text);
        const Automorphism a = validate_automorphism(h, p);
        doc["valid"] = true;
        doc["order"] = a.order;
        Json cyc = Json::array();
        for (const auto& c : p.cycles()) {
            Json labels = Json::array();
            for (Index v : c) labels.push_back(h.label(v));
            cyc.push_back(labels);
        }
        doc["cycles"] = cyc;
        Json edge_map;
        for (Index e = 0; e < h.size(); ++e) edge_map[h.edge(e).id] = h.edge(a.edge_map[e]).id;
        doc["edge_map"] = edge_map;
        Json factors = Json::array();
        for (const auto& rot : rotation_decomposition(p).factors) {
            Json comps = Json::array();
            for (const auto& c : rot.components) {
                Json labels = Json::array();
                for (Index v : c) labels.push_back(h.label(v));
                comps.push_back(labels);
            }
            factors.push_back({{"order", rot.order}, {"components", comps}});
        }
        doc["rotations"] = factors;
        if (!o.kind.empty()) {
            const auto m = load_matrix(o, h);
            const auto rep = is_compatible(m.entries, p, kDefaultCompatibilityTol);
            doc["kind"] = o.kind;
            doc["compatible"] = rep.compatible;
            if (rep.witness) {
                doc["witness"] = describe(*rep.witness, p, [&](Index v) { return h.label(v); });
                ok = false;
            }
        }
    } else {
        const UnitPartition units = compute_units(h);
        const auto map = parse_unit_map(h, units, text);
        const UnitAutomorphism ua = validate_unit_automorphism(h, units, map);
        doc["valid"] = true;
        doc["cardinality_preserving"] = ua.cardinality_preserving;
        Json edge_map;
        for (Index e = 0; e < h.size(); ++e) edge_map[h.edge(e).id] = h.edge(ua.induced_edge_map[e]).id;
        doc["edge_map"] = edge_map;
        if (!o.kind.empty()) {
            const auto m = load_matrix(o, h);
            const auto rep = is_unit_automorphism_compatible(m.entries, ua, units);
            doc["kind"] = o.kind;
            doc["compatible"] = rep.compatible;
            if (rep.witness) {
                doc["witness"] = describe(*rep.witness, Permutation(ua.unit_map),
                                          [&](Index u) { return unit_name(h, units, u); });
                ok = false;
            }
        }
    }
    emit(o, doc);
    return ok ? 0 : kFail;
}

SpectralDecomposition run_decomposition(const Options& o, const Hypergraph& h, const CMatrix& m) {
    const std::string text = require_symmetry(o);
    if (o.mode == "automorphism") {
        const Permutation p = parse_permutation(h, text);
        validate_automorphism(h, p);
        try {
            return decompose_automorphism(m, p);
        } catch (const IncompatibleMatrix& e) {
            throw IncompatibleMatrix(std::string(e.what()) + "; " +
                                         describe(e.witness(), p, [&](Index v) { return h.label(v); }),
                                     e.witness());
        }
    }
    const UnitPartition units = compute_units(h);
    const UnitAutomorphism ua = validate_unit_automorphism(h, units, parse_unit_map(h, units, text));
    try {
        return decompose_unit_automorphism(m, ua, units);
    } catch (const IncompatibleMatrix& e) {
        throw IncompatibleMatrix(std::string(e.what()) + "; " +
                                     describe(e.witness(), Permutation(ua.unit_map),
                                              [&](Index u) { return unit_name(h, units, u); }),
                                 e.witness());
    }
}

int cmd_decompose(const Options& o) {
    check_mode(o);
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const HypergraphMatrix m = load_matrix(o, h);
    const SpectralDecomposition d = run_decomposition(o, h, m.entries);
    const SpectrumReport r = verify_decomposition(m.entries, d, o.tol);
    Json doc;
    doc["kind"] = o.kind;
    doc["mode"] = o.mode;
    doc["index"] = m.index;
    doc["decomposition"] = decomposition_document(d);
    doc["verification"] = verification_json(r);
    doc["verdict"] = r.passed ? "pass" : "fail";
    emit(o, doc);
    return r.passed ? 0 : kFail;
}

// Checks a decompose report against the oracle for the same matrix.
int cmd_verify(const Options& o) {
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const HypergraphMatrix m = load_matrix(o, h);
    Json report;
    try {
        report = Json::parse(read_file(o.report));
    } catch (const Json::parse_error& e) {
        throw ParseError(o.report + ": " + e.what());
    }
    const Json& dec = report.contains("decomposition") ? report.at("decomposition") : report;
    auto to_complex = [](const Json& j) {
        if (!j.is_array() || j.size() != 2) throw ParseError("expected [re, im]");
        return Complex(j[0].get<double>(), j[1].get<double>());
    };
    SpectralDecomposition d;
    d.dimension = m.order();
    try {
        SpectralBlock all;
        for (const auto& z : dec.at("eigenvalues")) all.eigenvalues.push_back(to_complex(z));
        d.blocks.push_back(std::move(all));
        for (const auto& lp : dec.at("lifted")) {
            CVector x(static_cast<Eigen::Index>(lp.at("vector").size()));
            for (std::size_t i = 0; i < lp.at("vector").size(); ++i) {
                x(static_cast<Eigen::Index>(i)) = to_complex(lp.at("vector")[i]);
            }
            if (x.size() != static_cast<Eigen::Index>(m.order())) {
                throw DimensionMismatch("lifted vector length does not match the matrix order");
            }
            d.lifted.push_back({to_complex(lp.at("lambda")), std::move(x), {}});
        }
    } catch (const Json::exception& e) {
        throw ParseError(o.report + ": " + e.what());
    }
    const SpectrumReport r = verify_decomposition(m.entries, d, o.tol);
    emit(o, verification_json(r));
    return r.passed ? 0 : kFail;
}

int cmd_dynamics(const Options& o) {
    const Hypergraph h = load_hypergraph(o.hypergraph);
    const HypergraphMatrix m = load_matrix(o, h);
    const Permutation p = parse_permutation(h, require_symmetry(o));
    validate_automorphism(h, p);
    if (o.x0.empty()) throw InvalidArgument("--x0 is required");
    const CVector x0 = parse_state(h, read_file(o.x0));
    const OrbitPartition cells = orbits(p);
    const Trajectory t = iterate(m.entries, x0, o.steps, cells, o.normalize);
    const SyncCheck sync = check_orbit_synchronization(t, cells, 1e-10, inf_norm(m.entries));
    Json doc = trajectory_document(t);
    doc["compatible"] = is_compatible(m.entries, p).compatible;
    doc["synchronized"] = !sync.first_violation.has_value();
    if (sync.first_violation) doc["first_violation"] = *sync.first_violation;
    emit(o, doc);
    return sync.first_violation ? kFail : 0;
}

int cmd_selftest(const Options& o) {
    std::mt19937_64 rng(o.seed);
    Json failures = Json::array();
    for (Index i = 0; i < o.count; ++i) {
        const RandomInstance inst = random_instance(rng);
        const bool symmetric = i % 2 == 1;
        const CMatrix m = random_compatible_matrix(rng, inst.f, symmetric);
        auto fail = [&](const std::string& what) { failures.push_back({{"instance", i}, {"check", what}}); };
        if (check_commutation(m, inst.f) > 1e-12) fail("commutation");
        if (!is_equitable(m, orbits(inst.f).orbits)) fail("equitable");
        const SpectralDecomposition d = decompose_automorphism(m, inst.f);
        if (!verify_decomposition(m, d, o.tol).passed) fail("spectrum");
        const CMatrix pos = m.cwiseAbs().cast<Complex>();
        const auto radii = spectral_radius_via_quotient(pos, inst.f);
        if (std::abs(radii.full - radii.quotient) > o.tol * std::max(1.0, inf_norm(pos))) fail("spectral_radius");
    }
    Json doc;
    doc["seed"] = o.seed;
    doc["instances"] = o.count;
    doc["failures"] = failures;
    doc["verdict"] = failures.empty() ? "pass" : "fail";
    emit(o, doc);
    return failures.empty() ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of hypergraph matrices via symmetry"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Write the output document here instead of stdout");
    };
    auto add_matrix = [&](CLI::App* c) {
        c->add_option("--kind", o.kind, "Matrix kind")->capture_default_str();
        c->add_option("--weights", o.weights, "Weight document for the general kinds");
    };

    auto* units = app.add_subcommand("units", "List units and the unit contraction");
    units->add_option("hypergraph", o.hypergraph)->required();
    add_common(units);

    auto* matrix = app.add_subcommand("matrix", "Build a hypergraph matrix");
    matrix->add_option("hypergraph", o.hypergraph)->required();
    add_matrix(matrix);
    add_common(matrix);

    auto* validate = app.add_subcommand("validate-symmetry", "Validate an automorphism or unit-automorphism");
    validate->add_option("hypergraph", o.hypergraph)->required();
    validate->add_option("--symmetry", o.symmetry)->required();
    validate->add_option("--mode", o.mode)->capture_default_str();
    validate->add_option("--kind", o.kind, "Also check compatibility of this matrix kind");
    validate->add_option("--weights", o.weights);
    add_common(validate);

    auto* decompose = app.add_subcommand("decompose", "Decompose a matrix under a symmetry and verify");
    decompose->add_option("hypergraph", o.hypergraph)->required();
    decompose->add_option("--symmetry", o.symmetry)->required();
    decompose->add_option("--mode", o.mode)->capture_default_str();
    decompose->add_option("--tol", o.tol)->capture_default_str()->check(CLI::PositiveNumber);
    add_matrix(decompose);
    add_common(decompose);

    auto* verify = app.add_subcommand("verify", "Check a decomposition report against the dense spectrum");
    verify->add_option("hypergraph", o.hypergraph)->required();
    verify->add_option("report", o.report)->required();
    verify->add_option("--tol", o.tol)->capture_default_str()->check(CLI::PositiveNumber);
    add_matrix(verify);
    add_common(verify);

    auto* dynamics = app.add_subcommand("dynamics", "Iterate x <- M x and track orbit synchronization");
    dynamics->add_option("hypergraph", o.hypergraph)->required();
    dynamics->add_option("--symmetry", o.symmetry)->required();
    dynamics->add_option("--x0", o.x0)->required();
    dynamics->add_option("--steps", o.steps)->capture_default_str();
    dynamics->add_flag("--normalize", o.normalize, "Divide each state by its sup norm");
    add_matrix(dynamics);
    add_common(dynamics);

    auto* selftest = app.add_subcommand("selftest", "Randomized property checks");
    selftest->add_option("--seed", o.seed)->capture_default_str();
    selftest->add_option("--count", o.count)->capture_default_str();
    selftest->add_option("--tol", o.tol)->capture_default_str()->check(CLI::PositiveNumber);
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    // validate-symmetry only checks a matrix when --kind is given.
    if (validate->parsed() && validate->count("--kind") == 0) o.kind.clear();

    try {
        if (units->parsed()) return cmd_units(o);
        if (matrix->parsed()) return cmd_matrix(o);
        if (validate->parsed()) return cmd_validate(o);
        if (decompose->parsed()) return cmd_decompose(o);
        if (verify->parsed()) return cmd_verify(o);
        if (dynamics->parsed()) return cmd_dynamics(o);
        if (selftest->parsed()) return cmd_selftest(o);
    } catch (const NotAnAutomorphism& e) {
        std::cerr << "error: not an automorphism: " << e.what() << "\n";
        return kError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
