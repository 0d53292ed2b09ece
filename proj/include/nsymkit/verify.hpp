#pragma once

#include "nsymkit/report.hpp"

#include <string_view>

namespace nsymkit {

enum class Suite { All, Series, Matrices, Walls, Bricks, Duality, Oracle };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

// Pairings between the QSym and NSym bases and their compatibility with the involutions, degree n.
Report verify_duality(int n);
// Abstract conversions against realizations in m >= n variables, degree n.
Report verify_oracle(int n, int m);

// Runs the suite for every degree 1..n_max. The oracle suite needs m >= n_max.
Report run_suite(Suite s, int n_max, int m);

}  // namespace nsymkit
