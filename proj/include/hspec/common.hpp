#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hspec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = std::size_t;

// Base of every error raised by the library. Callers that only need a
// diagnostic can catch this; the subclasses carry structured witnesses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotAnAutomorphism : public Error {
public:
    NotAnAutomorphism(const std::string& what, std::string witness_edge)
        : Error(what), witness_edge_(std::move(witness_edge)) {}
    const std::string& witness_edge() const { return witness_edge_; }

private:
    std::string witness_edge_;
};

// An entry pair (u,v) and its image (f(u),f(v)) whose values differ.
struct CompatibilityWitness {
    Index row = 0;
    Index col = 0;
    Complex value;
    Complex image_value;
};

class IncompatibleMatrix : public Error {
public:
    IncompatibleMatrix(const std::string& what, CompatibilityWitness witness)
        : Error(what), witness_(witness) {}
    const CompatibilityWitness& witness() const { return witness_; }

private:
    CompatibilityWitness witness_;
};

class NotEquitable : public Error {
public:
    using Error::Error;
};

class NotUnitCompatible : public Error {
public:
    NotUnitCompatible(const std::string& what, Index unit, std::string condition)
        : Error(what), unit_(unit), condition_(std::move(condition)) {}
    Index unit() const { return unit_; }
    const std::string& condition() const { return condition_; }

private:
    Index unit_;
    std::string condition_;
};

class NotCardinalityPreserving : public Error {
public:
    NotCardinalityPreserving(const std::string& what, Index source, Index target)
        : Error(what), source_(source), target_(target) {}
    Index source_unit() const { return source_; }
    Index target_unit() const { return target_; }

private:
    Index source_;
    Index target_;
};

inline double inf_norm(const CMatrix& m) {
    double best = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        best = std::max(best, m.row(r).cwiseAbs().sum());
    }
    return best;
}

}  // namespace hspec
