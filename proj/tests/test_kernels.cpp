#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "stp/graph.hpp"
#include "stp/kernels.hpp"
#include "stp/rng.hpp"

using namespace stp;

namespace {

std::vector<double> random_vec(Rng& rng, size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = 2.0 * rng.unit() - 1.0;
    return v;
}

// Reassociation and FMA change the rounding, not the math.
void check_close(double a, double b, double scale) {
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, scale));
}

}  // namespace

TEST_CASE("vector backends agree with the scalar reference") {
    const auto& ref = kern::scalar_ops();
    const auto& act = kern::ops();
    INFO("active backend: " << kern::active_name());

    Rng rng(2024);
    for (size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u, 1000u}) {
        auto x = random_vec(rng, n);
        auto y = random_vec(rng, n);
        double c = std::cos(0.7), s = std::sin(0.7);

        auto x1 = x, y1 = y, x2 = x, y2 = y;
        ref.rotate_pair(x1.data(), y1.data(), n, c, s);
        act.rotate_pair(x2.data(), y2.data(), n, c, s);
        for (size_t i = 0; i < n; ++i) {
            check_close(x1[i], x2[i], 1.0);
            check_close(y1[i], y2[i], 1.0);
        }

        auto y3 = y, y4 = y;
        ref.axpy(y3.data(), x.data(), n, 1.7);
        act.axpy(y4.data(), x.data(), n, 1.7);
        for (size_t i = 0; i < n; ++i) check_close(y3[i], y4[i], 1.0);

        check_close(ref.dot(x.data(), y.data(), n), act.dot(x.data(), y.data(), n),
                    static_cast<double>(n));
        check_close(ref.norm2sq(x.data(), n), act.norm2sq(x.data(), n),
                    static_cast<double>(n));
    }
}

TEST_CASE("rotation preserves norms") {
    const auto& act = kern::ops();
    Rng rng(5);
    auto x = random_vec(rng, 257);
    auto y = random_vec(rng, 257);
    double before = act.norm2sq(x.data(), x.size()) + act.norm2sq(y.data(), y.size());
    act.rotate_pair(x.data(), y.data(), x.size(), std::cos(1.1), std::sin(1.1));
    double after = act.norm2sq(x.data(), x.size()) + act.norm2sq(y.data(), y.size());
    CHECK(std::abs(before - after) < 1e-10 * before);
}

TEST_CASE("backend selection") {
    std::string initial = kern::active_name();
    CHECK(kern::available(kern::Backend::Scalar));
    kern::select(kern::Backend::Scalar);
    CHECK(std::string(kern::active_name()) == "scalar");
    if (kern::available(kern::Backend::Avx2)) {
        kern::select(kern::Backend::Avx2);
        CHECK(std::string(kern::active_name()) == "avx2");
    } else {
        CHECK_THROWS_AS(kern::select(kern::Backend::Avx2), Error);
    }
    kern::select(kern::Backend::Auto);
    CHECK(std::string(kern::active_name()) == initial);
}
