#pragma once

#include "posspan/matrix.hpp"

namespace posspan {

// Exact phase-1 feasibility for { u >= 0 : E u = b } using Bland's pivot rule.
struct Phase1Result {
    bool feasible;
    Vec point;  // u >= 0 with E u = b when feasible
    Vec dual;   // y with y^T E <= 0 componentwise and y^T b > 0 when infeasible
};

Phase1Result phase1(const Mat& e, const Vec& b);

}  // namespace posspan
