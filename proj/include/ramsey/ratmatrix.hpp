#pragma once

#include "ramsey/rat.hpp"

#include <vector>

namespace ramsey {

// Symmetric matrix of exact rationals, row-major.
struct RatMatrix {
    int dim = 0;
    std::vector<Rat> entries;

    RatMatrix() = default;
    explicit RatMatrix(int d) : dim(d), entries(static_cast<size_t>(d) * d, Rat(0)) {}

    Rat& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const Rat& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }

    bool is_symmetric() const;
};

struct PsdVerdict {
    bool psd = false;
    // When !psd: an exact rational vector x with x'Mx < 0.
    std::vector<Rat> witness;
};

// Exact PSD decision by rational symmetric elimination: pivot on strictly
// positive diagonal entries and form Schur complements. Negative verdicts
// come with a witness vector.
PsdVerdict is_psd(const RatMatrix& m);

Rat quadratic_form(const RatMatrix& m, const std::vector<Rat>& x);

RatMatrix scaled(const RatMatrix& m, const Rat& factor);

} // namespace ramsey
