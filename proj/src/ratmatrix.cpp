#include "ramsey/ratmatrix.hpp"

#include <stdexcept>

namespace ramsey {

bool RatMatrix::is_symmetric() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

PsdVerdict is_psd(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd: matrix is not symmetric");
    int d = m.dim;
    RatMatrix s = m;
    // v[i] tracks the congruence transform so that s(i,j) = v_i' M v_j holds
    // throughout; a negative diagonal then yields its witness directly.
    std::vector<std::vector<Rat>> v(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i) v[i][i] = 1;
    std::vector<bool> active(d, true);

    for (;;) {
        int pivot = -1;
        for (int i = 0; i < d && pivot < 0; ++i)
            if (active[i] && s.at(i, i) > 0) pivot = i;
        if (pivot < 0) {
            for (int i = 0; i < d; ++i)
                if (active[i] && s.at(i, i) < 0) return {false, v[i]};
            // remaining diagonal is all zero; any nonzero off-diagonal entry
            // c gives x = t*v_i + v_j with x'Mx = 2tc + s(j,j)
            for (int i = 0; i < d; ++i) {
                if (!active[i]) continue;
                for (int j = 0; j < d; ++j) {
                    if (!active[j] || j == i) continue;
                    const Rat& c = s.at(i, j);
                    if (c == 0) continue;
                    Rat t = -(s.at(j, j) + 1) / (2 * c);
                    std::vector<Rat> x(d);
                    for (int k = 0; k < d; ++k) x[k] = t * v[i][k] + v[j][k];
                    return {false, x};
                }
            }
            return {true, {}};
        }
        const Rat p = s.at(pivot, pivot);
        std::vector<Rat> coef(d, Rat(0));
        for (int i = 0; i < d; ++i)
            if (active[i] && i != pivot) coef[i] = s.at(i, pivot) / p;
        for (int i = 0; i < d; ++i) {
            if (!active[i] || i == pivot || coef[i] == 0) continue;
            for (int k = 0; k < d; ++k) v[i][k] -= coef[i] * v[pivot][k];
        }
        for (int i = 0; i < d; ++i) {
            if (!active[i] || i == pivot) continue;
            for (int j = i; j < d; ++j) {
                if (!active[j] || j == pivot) continue;
                s.at(i, j) -= coef[i] * s.at(pivot, j);
                if (j != i) s.at(j, i) = s.at(i, j);
            }
        }
        active[pivot] = false;
    }
}

Rat quadratic_form(const RatMatrix& m, const std::vector<Rat>& x) {
    if (static_cast<int>(x.size()) != m.dim)
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    Rat total = 0;
    for (int i = 0; i < m.dim; ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < m.dim; ++j) row += m.at(i, j) * x[j];
        total += x[i] * row;
    }
    return total;
}

RatMatrix scaled(const RatMatrix& m, const Rat& factor) {
    RatMatrix out = m;
    for (Rat& e : out.entries) e *= factor;
    return out;
}

} // namespace ramsey
