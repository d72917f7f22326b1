#pragma once

namespace qdomain {

// rel: singular values below rel*sigma_max are dropped.
// abs: absolute floor for the same cutoff.
// eq:  residual norm allowed when testing containment of unit vectors.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
    double eq = 1e-8;
};

const Tolerance& tolerance();
void set_tolerance(const Tolerance& t);

// Restores the previous tolerance on scope exit.
class ScopedTolerance {
public:
    explicit ScopedTolerance(const Tolerance& t);
    ~ScopedTolerance();
    ScopedTolerance(const ScopedTolerance&) = delete;
    ScopedTolerance& operator=(const ScopedTolerance&) = delete;

private:
    Tolerance saved_;
};

}  // namespace qdomain
