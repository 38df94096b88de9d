#include "robin/stats.hpp"
#include "robin/rectangle.hpp"
#include "robin/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

using namespace robin;
using namespace robin::stats;

namespace {

// representation-search oracle for the two-squares test
bool two_squares_brute(std::int64_t m)
{
    for (std::int64_t a = 0; a * a <= m; ++a) {
        const std::int64_t r = m - a * a;
        const auto b = std::int64_t(std::llround(std::sqrt(double(r))));
        for (std::int64_t bb = std::max<std::int64_t>(0, b - 1); bb <= b + 1; ++bb)
            if (bb * bb == r)
                return true;
    }
    return false;
}

} // namespace

TEST_CASE("cumulative mean of a constant series")
{
    GapSeries gs;
    for (std::size_t n = 0; n < 50; ++n)
        gs.entries.push_back({n, 2.5});
    for (const auto& [n, m] : cumulative_mean(gs))
        CHECK(m == doctest::Approx(2.5).epsilon(1e-15));
    GapSeries empty;
    CHECK_THROWS_AS(cumulative_mean(empty), std::domain_error);
}

TEST_CASE("two-squares classification")
{
    CHECK_FALSE(is_sum_two_squares(3));
    CHECK(is_sum_two_squares(25));
    CHECK(is_sum_two_squares(0));
    CHECK(is_sum_two_squares(2));
    CHECK_FALSE(is_sum_two_squares(21)); // 3 * 7

    for (std::int64_t m = 0; m <= 100000; ++m)
        if (is_sum_two_squares(m) != two_squares_brute(m)) {
            CAPTURE(m);
            CHECK(false);
        }

    // 25 = 0^2 + 5^2 = 3^2 + 4^2: two desymmetrized representations
    int reps = 0;
    for (int a = 0; a * a <= 25; ++a)
        for (int b = a; a * a + b * b <= 25; ++b)
            if (a * a + b * b == 25)
                ++reps;
    CHECK(reps == 2);
}

TEST_CASE("s-value list and thinning density")
{
    const auto s = list_s_values(1000000);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
    CHECK(s[2] == 2);
    CHECK(s[3] == 4);
    CHECK(s[4] == 5);
    CHECK(s[13] == 25); // s_14 in 1-based counting

    for (std::int64_t v : {3, 6, 7, 12, 21})
        CHECK(!std::binary_search(s.begin(), s.end(), v));

    const auto count_below = [&](std::int64_t lim) {
        return double(std::upper_bound(s.begin(), s.end(), lim) - s.begin());
    };
    CHECK(count_below(1000000) / 1e6 < count_below(10000) / 1e4);
}

TEST_CASE("spacing of an arithmetic progression is a unit step")
{
    std::vector<double> vals;
    for (int i = 0; i <= 100; ++i)
        vals.push_back(3.0 + 0.5 * i);
    const double ys[] = {0.5, 0.99, 1.0, 1.5};
    const SpacingStats st = spacing_cdf(vals, ys);
    CHECK(st.normalization == doctest::Approx(0.5));
    CHECK(st.cdf_samples[0].second == 0.0);
    CHECK(st.cdf_samples[1].second == 0.0);
    CHECK(st.cdf_samples[2].second == 1.0);
    CHECK(st.cdf_samples[3].second == 1.0);
}

TEST_CASE("spacing CDF is monotone with mass at the origin for the square")
{
    const Spectrum sp = rectangle::desym_square_spectrum(0.0, 20001);
    const auto vals = sp.expanded();
    std::vector<double> ys;
    for (int i = 0; i <= 40; ++i)
        ys.push_back(0.05 * i);
    const SpacingStats st = spacing_cdf(std::span(vals.data(), 20001), ys);
    double prev = -1.0;
    for (const auto& [y, f] : st.cdf_samples) {
        CHECK(f >= prev);
        CHECK(f <= 1.0);
        prev = f;
    }
    // Neumann square: arithmetic multiplicities concentrate mass at the
    // origin, 0.372 of it by N = 2e4 and growing like 1/sqrt(log N)
    CHECK(st.cdf_samples[2].second >= 0.35);
    const SpacingStats small_win = spacing_cdf(std::span(vals.data(), 2001), ys);
    CHECK(st.cdf_samples[2].second > small_win.cdf_samples[2].second);

    // normalization stable under window doubling
    const SpacingStats half = spacing_cdf(std::span(vals.data(), 10001), ys);
    CHECK(std::fabs(half.normalization / st.normalization - 1.0) < 0.02);
}

TEST_CASE("clusters of the desymmetrized robin square")
{
    const ClusterDecomposition cd0 = cluster_analysis(0.0, 4000);
    for (double d : cd0.diameters)
        CHECK(d == 0.0);

    const ClusterDecomposition cd = cluster_analysis(1.0, 4000);
    REQUIRE(cd.s_values.size() == cd.diameters.size());
    REQUIRE(cd.s_values.size() == cd.cluster_sizes.size());

    // index sets partition consecutive ranks in increasing s order
    for (std::size_t i = 1; i < cd.s_values.size(); ++i)
        CHECK(cd.s_values[i] > cd.s_values[i - 1]);
    for (std::int64_t s : cd.s_values)
        CHECK(is_sum_two_squares(s));

    // sizes match the desymmetrized representation counts
    for (std::size_t i = 0; i < cd.s_values.size(); ++i) {
        const std::int64_t s = cd.s_values[i];
        int reps = 0;
        for (std::int64_t a = 0; a * a <= s; ++a)
            for (std::int64_t b = a; a * a + b * b <= s; ++b)
                if (a * a + b * b == s)
                    ++reps;
        CHECK(reps == cd.cluster_sizes[i]);
    }

    // diameters bounded by the largest desymmetrized RN gap over the window
    const Spectrum rob = rectangle::desym_square_spectrum(1.0, 4000);
    const Spectrum neu = rectangle::desym_square_spectrum(0.0, 4000);
    double dmax = 0.0;
    for (std::size_t n = 0; n < 4000; ++n)
        dmax = std::max(dmax, rob.levels[n].value - neu.levels[n].value);
    for (double d : cd.diameters)
        CHECK(d <= dmax + 1e-9);
}

TEST_CASE("cluster diameters do not grow with rank")
{
    const ClusterDecomposition cd = cluster_analysis(1.0, 100000);
    double early = 0.0, late = 0.0;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < cd.s_values.size(); ++i) {
        if (rank >= 1000 && rank < 10000)
            early = std::max(early, cd.diameters[i]);
        else if (rank >= 10000 && rank < 100000)
            late = std::max(late, cd.diameters[i]);
        rank += std::size_t(cd.cluster_sizes[i]);
    }
    CHECK(late <= early + 0.05); // reference run: 2.29287 vs 2.29294
    CHECK(early < 3.0);
}
