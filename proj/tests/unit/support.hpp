#pragma once

#include <algorithm>
#include <cmath>

inline double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
