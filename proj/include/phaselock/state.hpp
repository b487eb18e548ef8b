#pragma once

#include <Eigen/Dense>
#include <complex>

namespace phaselock {

using Complex = std::complex<double>;

// Pure state of dimension q. theta0 is the reference angle of the phase basis
// the state was built in; normalized=false marks an intentionally sub-unit
// norm (for example a character that vanishes somewhere).
struct StateVector {
    Eigen::VectorXcd amps;
    double theta0 = 0.0;
    bool normalized = true;

    int dim() const { return (int)amps.size(); }
    double norm() const { return amps.norm(); }
};

using OperatorMatrix = Eigen::MatrixXcd;

inline Complex inner(const StateVector& a, const StateVector& b) {
    return a.amps.dot(b.amps);
}

// max |A - A^dagger| entrywise
inline double hermiticity_residual(const OperatorMatrix& a) {
    return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

}  // namespace phaselock
