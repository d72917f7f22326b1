#include "qdomain/tolerance.hpp"

namespace qdomain {

namespace {
Tolerance g_tolerance;
}

const Tolerance& tolerance() { return g_tolerance; }

void set_tolerance(const Tolerance& t) { g_tolerance = t; }

ScopedTolerance::ScopedTolerance(const Tolerance& t) : saved_(g_tolerance) { g_tolerance = t; }

ScopedTolerance::~ScopedTolerance() { g_tolerance = saved_; }

}  // namespace qdomain
