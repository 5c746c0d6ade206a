#pragma once

#include <Eigen/Core>

namespace amptk {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using Index = Eigen::Index;

// The 20 canonical residues in the fixed column order used everywhere.
inline constexpr char kAlphabet[21] = "ACDEFGHIKLMNPQRSTVWY";
inline constexpr int kAlphabetSize = 20;

// Residue letter -> alphabet index, or -1 for anything non-canonical.
inline int residue_index(char c) {
  switch (c) {
    case 'A': return 0;  case 'C': return 1;  case 'D': return 2;
    case 'E': return 3;  case 'F': return 4;  case 'G': return 5;
    case 'H': return 6;  case 'I': return 7;  case 'K': return 8;
    case 'L': return 9;  case 'M': return 10; case 'N': return 11;
    case 'P': return 12; case 'Q': return 13; case 'R': return 14;
    case 'S': return 15; case 'T': return 16; case 'V': return 17;
    case 'W': return 18; case 'Y': return 19;
    default: return -1;
  }
}

}  // namespace amptk
