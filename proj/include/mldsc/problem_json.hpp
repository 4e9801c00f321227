#pragma once

#include <string>

#include "mldsc/problem.hpp"

namespace mldsc {

// JSON schema:
//   { "partition": {"d_x": int, "d_z": [int]},
//     "A": [[..]], "B": [[[..]]], "sigma": [[..]],
//     "Q": [[..]], "R": [[[..]]], "P": [[..]],
//     "mu0": [..], "Sigma0": [[..]], "T": double }
// Matrices are row-major nested arrays.
std::string problem_to_json(const LqgProblem& p, int indent = 2);
LqgProblem problem_from_json(const std::string& text);

}  // namespace mldsc
