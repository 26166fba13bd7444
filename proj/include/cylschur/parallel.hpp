#pragma once

#include "cylschur/diagram.hpp"
#include "cylschur/polynomial.hpp"

namespace cylschur {

bool openmp_enabled();
int max_threads();

// OpenMP kernels splitting the walk on the first box's value; results are
// merged in value order and match the serial routines exactly. Without
// OpenMP they degrade to the serial walk.
long long count_cssyt_parallel(const CylindricDiagram& D, int maxEntry,
                               const std::vector<int>* weightFilter = nullptr);
SparsePolynomial schur_monomial_parallel(const CylindricDiagram& D, int nvars);

}
