#include "test_util.hpp"

#include "ramsey/ratmatrix.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ramsey;

namespace {

RatMatrix from_longs(const std::vector<std::vector<long>>& rows, const Rat& scale = 1) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) m.at(i, j) = scale * Rat(rows[i][j]);
    return m;
}

// the 6x6 block of the (K3,C5) lower-bound certificate
RatMatrix k3c5_matrix() {
    return from_longs({{3, 3, 0, -2, -3, -1},
                       {3, 8, 5, -6, -8, -2},
                       {0, 5, 5, -4, -5, -1},
                       {-2, -6, -4, 5, 6, 1},
                       {-3, -8, -5, 6, 8, 2},
                       {-1, -2, -1, 1, 2, 1}},
                      rat(15, 34));
}

} // namespace

TEST_CASE("identity and simple indefinite") {
    RatMatrix id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(is_psd(id).psd);

    RatMatrix m = from_longs({{1, 2}, {2, 1}});
    auto verdict = is_psd(m);
    CHECK(!verdict.psd);
    CHECK(quadratic_form(m, verdict.witness) < 0);
    CHECK(quadratic_form(m, {rat(1), rat(-1)}) == -2);

    RatMatrix asym(2);
    asym.at(0, 1) = 1;
    CHECK_THROWS(is_psd(asym));
}

TEST_CASE("quadratic form basics") {
    RatMatrix id(3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(quadratic_form(id, {rat(1), rat(1), rat(1)}) == 3);
    CHECK_THROWS(quadratic_form(id, {rat(1)}));
}

TEST_CASE("zero diagonal with nonzero row is not PSD") {
    RatMatrix m = from_longs({{0, 1}, {1, 0}});
    auto verdict = is_psd(m);
    CHECK(!verdict.psd);
    CHECK(quadratic_form(m, verdict.witness) < 0);

    RatMatrix z(2);
    CHECK(is_psd(z).psd);

    // positive pivot first, then a zero row that must be accepted
    RatMatrix ok = from_longs({{1, 1}, {1, 1}});
    CHECK(is_psd(ok).psd);
}

TEST_CASE("(K3,C5) block matrix is PSD with the quoted eigenvalues") {
    RatMatrix a1 = k3c5_matrix();
    CHECK(is_psd(a1).psd);

    // nonzero eigenvalues of (34/15)*A1 are about 25.36, 3.76, 0.88
    auto eig = testutil::symmetric_eigenvalues(scaled(a1, rat(34, 15)));
    std::sort(eig.begin(), eig.end());
    std::vector<double> nonzero;
    for (double l : eig)
        if (std::fabs(l) > 1e-8) nonzero.push_back(l);
    REQUIRE(nonzero.size() == 3);
    CHECK(nonzero[2] == doctest::Approx(25.36).epsilon(0.01));
    CHECK(nonzero[1] == doctest::Approx(3.76).epsilon(0.01));
    CHECK(nonzero[0] == doctest::Approx(0.88).epsilon(0.01));

    // 100 random rational vectors stay nonnegative
    testutil::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rat> x(6);
        for (Rat& v : x) v = rat(static_cast<long>(rng.below(21)) - 10, 4);
        CHECK(quadratic_form(a1, x) >= 0);
    }
}

TEST_CASE("random matrices: exact verdict matches floating eigenvalue sign") {
    testutil::Rng rng(23);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int d = 2 + static_cast<int>(rng.below(7));
        RatMatrix m(d);
        if (trial % 2 == 0) {
            // Gram matrix: guaranteed PSD
            std::vector<std::vector<Rat>> b(d, std::vector<Rat>(d));
            for (auto& row : b)
                for (Rat& v : row) v = rat(static_cast<long>(rng.below(9)) - 4, 2);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Rat s = 0;
                    for (int k = 0; k < d; ++k) s += b[i][k] * b[j][k];
                    m.at(i, j) = s;
                }
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) {
                    Rat v = rat(static_cast<long>(rng.below(17)) - 8, 4);
                    m.at(i, j) = v;
                    m.at(j, i) = v;
                }
        }
        auto verdict = is_psd(m);
        if (!verdict.psd) CHECK(quadratic_form(m, verdict.witness) < 0);
        auto eig = testutil::symmetric_eigenvalues(m);
        double lmin = *std::min_element(eig.begin(), eig.end());
        if (lmin > 1e-8) {
            CHECK(verdict.psd);
            ++checked;
        } else if (lmin < -1e-8) {
            CHECK(!verdict.psd);
            ++checked;
        }
    }
    CHECK(checked > 200);
}
