#pragma once

#include "dicke/matrix.hpp"

namespace dicke {

// Collective-spin matrices for A two-level atoms in the symmetric (Dicke)
// basis |M>, M = 0..A counting excited atoms. Spin A/2 representation:
//   S+|M> = sqrt((M+1)(A-M)) |M+1>
//   S-|M> = sqrt(M(A-M+1))   |M-1>
//   S3|M> = (M - A/2)        |M>
struct SpinRep {
    int atoms;
    RMat sp;  // S+
    RMat sm;  // S-
    RMat s3;  // S3
    RMat sx;  // (S+ + S-)/2
};

SpinRep spin_matrices(int atoms);

// Matrix elements d^A_{M'M}(angle) = <M'| exp(i*angle*S_x) |M>, computed by
// eigendecomposition of S_x. The matrix is complex symmetric unitary; entry
// (M', M) is real for even M-M' and purely imaginary for odd M-M'.
struct WignerDMatrix {
    int atoms;
    double angle;
    CMat d;
};

WignerDMatrix wigner_d(int atoms, double angle);

}  // namespace dicke
