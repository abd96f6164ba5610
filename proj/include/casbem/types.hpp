#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace casbem {

using Vec3 = Eigen::Vector3d;

enum class Precision { Single, Double };
enum class Formulation { EFIE, AEFIE };

inline const char* to_string(Precision p) {
    return p == Precision::Single ? "single" : "double";
}
inline const char* to_string(Formulation f) {
    return f == Formulation::EFIE ? "efie" : "aefie";
}

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MeshError : public Error {
public:
    explicit MeshError(const std::string& what) : Error(what) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

template <class Real>
using DenseMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace casbem
