#include <doctest.h>

#include <cmath>
#include <vector>

#include "bgo/schedule.hpp"

using namespace bgo;

TEST_CASE("phase plan examples")
{
    auto p16 = phase_plan(16);
    CHECK(p16.levels == 4);
    CHECK(p16.boundaries == std::vector<std::int64_t>{0, 8, 12, 14, 15, 16});
    auto p1 = phase_plan(1);
    CHECK(p1.levels == 0);
    CHECK(p1.boundaries == std::vector<std::int64_t>{0, 1});
    auto p4 = phase_plan(4);
    CHECK(p4.levels == 2);
    CHECK(p4.boundaries == std::vector<std::int64_t>{0, 2, 3, 4});
    CHECK_THROWS_AS(phase_plan(0), std::invalid_argument);
}

TEST_CASE("phase plan invariants for every N up to 1e5")
{
    for (std::int64_t n = 1; n <= 100000; ++n) {
        auto p = phase_plan(n);
        bool ok = p.boundaries.front() == 0 && p.boundaries.back() == n &&
                  p.boundaries.size() == static_cast<std::size_t>(p.levels) + 2;
        for (std::size_t i = 1; ok && i < p.boundaries.size(); ++i) {
            ok = p.boundaries[i] >= p.boundaries[i - 1];
        }
        // l is the first i with N / 2^i <= 1.
        ok = ok && (std::int64_t{1} << p.levels) >= n && (p.levels == 0 || (std::int64_t{1} << (p.levels - 1)) < n);
        if (!ok) {
            FAIL("phase plan invariant broken at N=" << n);
        }
    }
}

TEST_CASE("phase_of")
{
    auto p16 = phase_plan(16);
    CHECK(phase_of(p16, 1) == 0);
    CHECK(phase_of(p16, 9) == 1);
    CHECK(phase_of(p16, 16) == 4);
    CHECK_THROWS_AS(phase_of(p16, 0), std::out_of_range);
    CHECK_THROWS_AS(phase_of(p16, 17), std::out_of_range);

    for (std::int64_t n = 1; n <= 1024; ++n) {
        auto p = phase_plan(n);
        for (std::int64_t k = 1; k <= n; ++k) {
            int i = phase_of(p, k);
            if (!(p.boundaries[static_cast<std::size_t>(i)] < k && k <= p.boundaries[static_cast<std::size_t>(i) + 1])) {
                FAIL("phase_of wrong at N=" << n << " k=" << k);
            }
        }
    }
}

TEST_CASE("rsg o1 schedules")
{
    auto s = rsg_schedule_o1_const(64, 1, 1, 1, 1);
    CHECK(s.size() == 64);
    CHECK(s.gammas[0] == doctest::Approx(1.0 / 16));
    CHECK(s.etas[0] == doctest::Approx(0.5));
    CHECK(s.batches[0] == 64);
    CHECK(rsg_schedule_o1_const(64, 1, 1, 1, 1000).gammas[5] == doctest::Approx(1e-3));
    auto one = rsg_schedule_o1_const(1, 0.3, 0.7, 2.5, 2);
    CHECK(one.gammas[0] == doctest::Approx(0.3));
    CHECK(one.etas[0] == doctest::Approx(0.7));
    CHECK(one.batches[0] == 3);

    auto poly = rsg_schedule_o1_poly(9, 1, 1, 1, 1, 0.5);
    CHECK(poly.batches[0] == 1);
    CHECK(poly.batches[3] == 2);
    CHECK(poly.batches[8] == 3);
    auto p4 = rsg_schedule_o1_poly(4, 1, 1, 1, 1, 0.5);
    CHECK(p4.gammas[0] == doctest::Approx(std::pow(4.0, -2.0 / 3)));
    CHECK(p4.etas[0] == doctest::Approx(std::pow(4.0, -1.0 / 6)));
    CHECK(p4.batches == std::vector<SampleCount>{1, 2, 2, 2});
    CHECK_THROWS_AS(rsg_schedule_o1_poly(4, 1, 1, 1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rsg_schedule_o1_poly(4, 1, 1, 1, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rsg_schedule_o1_const(4, -1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("rsg o2 schedule")
{
    auto s = rsg_schedule_o2(16, 1, 1, 1, 1);
    CHECK(s.gammas[3] == doctest::Approx(0.25));
    CHECK(s.etas[3] == doctest::Approx(0.25));
    CHECK(s.batches[3] == 256);
    auto one = rsg_schedule_o2(1, 0.4, 2, 1, 1);
    CHECK(one.gammas[0] == doctest::Approx(0.4));
    CHECK(one.etas[0] == doctest::Approx(2));
    CHECK(one.batches[0] == 1);
    for (std::int64_t n : {2, 7, 30}) {
        CHECK(total_samples(rsg_schedule_o2(n, 1, 1, 1, 1)) == double(n * n * n));
        CHECK(total_samples(rsg_schedule_o1_const(n, 1, 1, 1, 1)) == double(n * n));
    }
}

TEST_CASE("sgd o1 schedule")
{
    auto s = sgd_schedule_o1(16, 1, 1);
    CHECK(s.gammas[0] == doctest::Approx(std::pow(16.0, -2.0 / 3)));
    CHECK(s.etas[0] == doctest::Approx(std::pow(16.0, -1.0 / 6)));
    CHECK(s.batches[0] == 16);
    CHECK(s.gammas[8] == doctest::Approx(std::pow(16.0, -2.0 / 3) / 2));
    CHECK(s.etas[8] == doctest::Approx(std::pow(2.0, -0.25) * std::pow(16.0, -1.0 / 6)));
    CHECK(s.batches[8] == 32);
    CHECK(total_samples(s) == 768);
}

TEST_CASE("sgd o2 schedule")
{
    auto s = sgd_schedule_o2(4, 1, 1);
    CHECK(s.gammas[0] == doctest::Approx(0.5));
    CHECK(s.etas[0] == doctest::Approx(0.25));
    CHECK(s.batches[0] == 64);
    CHECK(s.gammas[2] == doctest::Approx(0.25));
    CHECK(s.etas[2] == doctest::Approx(0.125));
    CHECK(s.batches[2] == 512);
    CHECK(s.gammas[3] == doctest::Approx(0.125));
    CHECK(s.etas[3] == doctest::Approx(1.0 / 16));
    CHECK(s.batches[3] == 4096);
}

TEST_CASE("sgd schedules decay monotonically")
{
    for (std::int64_t n : {1, 2, 3, 17, 100, 1000}) {
        for (const auto& s : {sgd_schedule_o1(n, 1, 1), sgd_schedule_o2(n, 1, 1)}) {
            s.validate();
            for (std::size_t k = 1; k < s.size(); ++k) {
                CHECK(s.gammas[k] <= s.gammas[k - 1]);
                CHECK(s.etas[k] <= s.etas[k - 1]);
                CHECK(s.batches[k] >= s.batches[k - 1]);
            }
        }
        // eta halves between consecutive phases under the o2 schedule
        auto s2 = sgd_schedule_o2(n, 1, 1);
        auto plan = phase_plan(n);
        for (std::int64_t k = 2; k <= n; ++k) {
            int a = phase_of(plan, k - 1), b = phase_of(plan, k);
            if (b != a) {
                CHECK(s2.etas[static_cast<std::size_t>(k - 1)] ==
                      doctest::Approx(s2.etas[static_cast<std::size_t>(k - 2)] * std::ldexp(1.0, a - b)));
            }
        }
    }
}

TEST_CASE("sgd o2 sample growth")
{
    std::vector<double> lx, ly;
    for (std::int64_t n : {4, 8, 16, 32}) {
        lx.push_back(std::log(double(n)));
        ly.push_back(std::log(total_samples(sgd_schedule_o2(n, 1, 1))));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        mx += lx[i] / 4;
        my += ly[i] / 4;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    CHECK(std::abs(sxy / sxx - 6.0) <= 0.3);
    CHECK(total_samples(IterationSchedule{{1.0}, {1.0}, {7}}) == 7);
}

TEST_CASE("schedule validation")
{
    CHECK_THROWS_AS((IterationSchedule{{}, {}, {}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IterationSchedule{{1.0}, {1.0, 2.0}, {1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IterationSchedule{{0.0}, {1.0}, {1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IterationSchedule{{1.0}, {1.0}, {0.5}}.validate()), std::invalid_argument);
    CHECK_NOTHROW((IterationSchedule{{1.0}, {1.0}, {1}}.validate()));
}

TEST_CASE("random iterate selection")
{
    Rng rng(1);
    CHECK(select_random_iterate({5.0}, rng) == 1);
    int first = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        first += select_random_iterate({3.0, 1.0}, rng) == 1;
    }
    CHECK(std::abs(first / double(n) - 0.75) <= 0.01);

    std::vector<int> counts(4, 0);
    for (int i = 0; i < n; ++i) {
        ++counts[select_random_iterate({1, 1, 1, 1}, rng) - 1];
    }
    double chi2 = 0;
    for (int c : counts) {
        chi2 += (c - n / 4.0) * (c - n / 4.0) / (n / 4.0);
    }
    CHECK(chi2 < 16.266);  // chi-square, 3 dof, 0.001 upper quantile

    CHECK_THROWS_AS(select_random_iterate({}, rng), std::invalid_argument);
    CHECK_THROWS_AS(select_random_iterate({1.0, 0.0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(select_random_iterate({1.0, -2.0}, rng), std::invalid_argument);
}
