#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "core/errors.hpp"
#include "core/hypergraph.hpp"
#include "core/model.hpp"
#include "core/rng.hpp"

using namespace hokm;

namespace {

constexpr double PI = 3.14159265358979323846;

// Brute-force reference: literal double/triple sums over the adjacency
// tensors, sines evaluated one by one. Independent of the phasor kernel.
std::vector<double> rhs_oracle(const Hypergraph& g, const ModelParams& p,
                               const std::vector<double>& th) {
    const int n = g.n();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double pair = 0.0;
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) pair += std::sin(th[j] - th[i]);
        double tri = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.has_triangle(i, j, k))
                    tri += std::sin(th[j] + th[k] - 2.0 * th[i]) +
                           p.triadic_sign * std::sin(2.0 * th[j] - th[k] - th[i]);
        out[i] = p.omega[i] + p.k1 / n * pair + p.k2 / (n * n) * tri;
    }
    return out;
}

std::vector<double> d3_oracle(int n, const ModelParams& p, const std::vector<double>& th,
                              QuarticVariant variant) {
    std::vector<double> out(p.omega);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j == i || k == i || l == i || j == k || j == l || k == l) continue;
                    if (variant == QuarticVariant::type1)
                        acc += std::sin(th[j] + th[k] + th[l] - 3.0 * th[i]) +
                               std::sin(3.0 * th[j] - th[k] - th[l] - th[i]);
                    else
                        acc += std::sin(th[k] + th[l] - th[j] - th[i]);
                }
        const double pref = variant == QuarticVariant::type1 ? 1.5 : 2.0;
        out[i] += pref * p.k3 / (static_cast<double>(n) * n * n) * acc;
    }
    return out;
}

}  // namespace

TEST_CASE("rhs trivial cases") {
    Hypergraph g = Hypergraph::all_to_all(5);
    ModelParams p;
    p.omega = {0.1, 0.25, 0.47, 0.62, 0.9};
    std::vector<double> th = {0.3, 1.1, 2.9, 4.0, 5.5};
    SUBCASE("zero couplings return omega") {
        auto r = hokm_rhs(g, p, th);
        for (int i = 0; i < 5; ++i) CHECK(r[i] == doctest::Approx(p.omega[i]).epsilon(1e-15));
    }
    SUBCASE("synchronized phases return omega") {
        p.k1 = 1.3;
        p.k2 = 0.7;
        std::vector<double> sync(5, 1.234);
        auto r = hokm_rhs(g, p, sync);
        for (int i = 0; i < 5; ++i) CHECK(r[i] == doctest::Approx(p.omega[i]).epsilon(1e-13));
    }
    SUBCASE("dimension mismatch") {
        std::vector<double> bad = {0.0, 1.0};
        CHECK_THROWS_AS(hokm_rhs(g, p, bad), Error);
    }
}

TEST_CASE("rhs matches the brute-force oracle") {
    // frozen value computed from the direct-summation oracle:
    // all_to_all(3), omega=0, K1=K2=1, theta=(0, pi/2, pi) -> (0, 0, 0)
    Hypergraph g3 = Hypergraph::all_to_all(3);
    ModelParams p;
    p.k1 = 1.0;
    p.k2 = 1.0;
    p.omega = {0.0, 0.0, 0.0};
    std::vector<double> th = {0.0, PI / 2.0, PI};
    auto frozen = hokm_rhs(g3, p, th);
    for (int i = 0; i < 3; ++i) CHECK(frozen[i] == doctest::Approx(0.0).epsilon(1e-14));
    auto oracle3 = rhs_oracle(g3, p, th);
    for (int i = 0; i < 3; ++i) CHECK(frozen[i] == doctest::Approx(oracle3[i]).epsilon(1e-13));

    // random structures and phases, both triadic signs
    rng::SplitMix64 gen(77);
    for (int rep = 0; rep < 4; ++rep) {
        Hypergraph g = rep % 2 == 0 ? Hypergraph::all_to_all(6)
                                    : Hypergraph::random_simplicial_complex(9, 5.0, 1.5, 11 + rep);
        ModelParams q;
        q.k1 = gen.uniform(0.0, 2.0);
        q.k2 = gen.uniform(0.0, 2.0);
        q.triadic_sign = rep < 2 ? 1.0 : -1.0;
        q.omega.resize(g.n());
        std::vector<double> phases(g.n());
        for (auto& w : q.omega) w = gen.uniform(0.0, 1.0);
        for (auto& x : phases) x = gen.uniform(0.0, 2.0 * PI);
        auto got = hokm_rhs(g, q, phases);
        auto want = rhs_oracle(g, q, phases);
        for (int i = 0; i < g.n(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
}

TEST_CASE("rhs invariances") {
    Hypergraph g = Hypergraph::all_to_all(7);
    ModelParams p;
    p.k1 = 0.8;
    p.k2 = 1.4;
    rng::SplitMix64 gen(5);
    p.omega.resize(7);
    std::vector<double> th(7);
    for (auto& w : p.omega) w = gen.uniform(0.0, 1.0);
    for (auto& x : th) x = gen.uniform(0.0, 2.0 * PI);

    SUBCASE("rotational invariance") {
        auto base = hokm_rhs(g, p, th);
        std::vector<double> shifted = th;
        for (auto& x : shifted) x += 1.7182818;
        auto moved = hokm_rhs(g, p, shifted);
        for (int i = 0; i < 7; ++i) CHECK(moved[i] == doctest::Approx(base[i]).epsilon(1e-12));
    }
    SUBCASE("frequency-shift covariance") {
        auto base = hokm_rhs(g, p, th);
        ModelParams q = p;
        for (auto& w : q.omega) w += 2.5;
        auto moved = hokm_rhs(g, q, th);
        for (int i = 0; i < 7; ++i)
            CHECK(moved[i] - base[i] == doctest::Approx(2.5).epsilon(1e-13));
    }
}

TEST_CASE("order parameters") {
    std::vector<double> sync(9, 0.77);
    CHECK(order_parameter(sync) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> anti = {0.0, PI};
    CHECK(order_parameter(anti) == doctest::Approx(0.0).epsilon(1e-15));
    // equally spaced phases sum to zero
    std::vector<double> spread(12);
    for (int i = 0; i < 12; ++i) spread[i] = 2.0 * PI * i / 12.0;
    CHECK(order_parameter(spread) < 1e-12);

    // m=1 reduces to the plain order parameter
    rng::SplitMix64 gen(3);
    std::vector<double> th(8);
    for (auto& x : th) x = gen.uniform(0.0, 2.0 * PI);
    CHECK(cluster_order_parameter(th, 1) == doctest::Approx(order_parameter(th)).epsilon(1e-15));

    // balanced antipodal clusters: R2 = 1
    std::vector<double> cl(10, 0.4);
    for (int i = 5; i < 10; ++i) cl[i] = 0.4 + PI;
    CHECK(cluster_order_parameter(cl, 2) == doctest::Approx(1.0).epsilon(1e-13));

    // 90/10 split at (0, pi): R = |2p-1| = 0.8
    std::vector<double> unbal(10, 0.0);
    unbal[9] = PI;
    CHECK(order_parameter(unbal) == doctest::Approx(0.8).epsilon(1e-13));

    SUBCASE("permutation and shift invariance") {
        std::vector<double> shifted = th;
        for (auto& x : shifted) x += 0.9;
        CHECK(order_parameter(shifted) == doctest::Approx(order_parameter(th)).epsilon(1e-13));
        std::vector<double> perm = th;
        std::swap(perm[0], perm[5]);
        std::swap(perm[2], perm[7]);
        CHECK(order_parameter(perm) == doctest::Approx(order_parameter(th)).epsilon(1e-15));
    }
}

TEST_CASE("averaged order parameter window") {
    std::vector<std::pair<double, double>> flat;
    for (int k = 0; k <= 400; ++k) flat.emplace_back(0.1 * k, 0.5);
    CHECK(averaged_order_parameter(flat, 30.0, 40.0) == doctest::Approx(0.5).epsilon(1e-15));

    std::vector<std::pair<double, double>> alt;
    for (int k = 0; k <= 100; ++k) alt.emplace_back(k, k % 2 ? 1.0 : 0.0);
    CHECK(averaged_order_parameter(alt, 0.0, 100.0) == doctest::Approx(0.5).epsilon(0.011));

    CHECK_THROWS_AS(averaged_order_parameter(flat, 50.0, 60.0), Error);
    CHECK_THROWS_AS(averaged_order_parameter(flat, 40.0, 30.0), Error);

    // boundary semantics: (t0, t1], grid times included as written
    std::vector<std::pair<double, double>> edge = {{30.0, 9.0}, {35.0, 1.0}, {40.0, 3.0}};
    CHECK(averaged_order_parameter(edge, 30.0, 40.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("multiorder laplacian") {
    ModelParams p;
    p.k1 = 1.0;
    p.k2 = 1.0;
    SUBCASE("all_to_all(3) closed form") {
        Hypergraph g = Hypergraph::all_to_all(3);
        auto L = multiorder_laplacian(g, p);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(L[i * 3 + j] ==
                      doctest::Approx(i == j ? 8.0 / 3.0 : -4.0 / 3.0).epsilon(1e-14));
        auto evals = symmetric_eigenvalues(L, 3);
        CHECK(evals[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(evals[1] == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(evals[2] == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("zero couplings give the zero matrix") {
        ModelParams z;
        Hypergraph g = Hypergraph::all_to_all(4);
        for (double x : multiorder_laplacian(g, z)) CHECK(x == 0.0);
    }
    SUBCASE("row sums vanish") {
        Hypergraph g = Hypergraph::random_simplicial_complex(16, 7.0, 2.0, 4);
        ModelParams q;
        q.k1 = 0.37;
        q.k2 = 1.21;
        auto L = multiorder_laplacian(g, q);
        for (int i = 0; i < 16; ++i) {
            double row = 0.0;
            for (int j = 0; j < 16; ++j) row += L[i * 16 + j];
            CHECK(std::abs(row) < 1e-12);
        }
    }
}

TEST_CASE("sync jacobian spectrum") {
    ModelParams p;
    SUBCASE("zero couplings") {
        Hypergraph g = Hypergraph::all_to_all(5);
        for (double lam : sync_jacobian_spectrum(g, p)) CHECK(lam == 0.0);
    }
    SUBCASE("all_to_all(3) frozen eigenvalues") {
        p.k1 = 1.0;
        p.k2 = 1.0;
        Hypergraph g = Hypergraph::all_to_all(3);
        auto spec = sync_jacobian_spectrum(g, p);
        const double want[6] = {-4.0, -4.0, 0.0, 0.0, 4.0, 4.0};
        REQUIRE(spec.size() == 6);
        for (int i = 0; i < 6; ++i) CHECK(spec[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
    SUBCASE("negation symmetry and double zero") {
        p.k1 = 0.6;
        p.k2 = 1.7;
        Hypergraph g = Hypergraph::random_simplicial_complex(12, 6.0, 1.5, 8);
        auto spec = sync_jacobian_spectrum(g, p);
        const std::size_t m = spec.size();
        for (std::size_t i = 0; i < m; ++i)
            CHECK(spec[i] == doctest::Approx(-spec[m - 1 - i]).epsilon(1e-9));
        int zeros = 0;
        for (double lam : spec)
            if (std::abs(lam) < 1e-9) ++zeros;
        CHECK(zeros >= 2);
    }
}

TEST_CASE("linearization of the phase dynamics at synchronization") {
    // Finite differences of hokm_rhs around a synchronized state with omega=0
    // reproduce minus one half of the multiorder Laplacian. (The Laplacian
    // combination 2L1+6L2 is the conventional spectral object; the dynamics
    // linearize to L1+3L2.)
    Hypergraph g = Hypergraph::random_simplicial_complex(10, 6.0, 2.0, 21);
    ModelParams p;
    p.k1 = 0.9;
    p.k2 = 1.1;
    p.omega.assign(10, 0.0);
    auto L = multiorder_laplacian(g, p);
    std::vector<double> th(10, 0.3);
    const double h = 1e-6;
    double worst = 0.0, scale = 0.0;
    for (int j = 0; j < 10; ++j) {
        std::vector<double> plus = th, minus = th;
        plus[j] += h;
        minus[j] -= h;
        auto rp = hokm_rhs(g, p, plus);
        auto rm = hokm_rhs(g, p, minus);
        for (int i = 0; i < 10; ++i) {
            const double jac = (rp[i] - rm[i]) / (2.0 * h);
            worst = std::max(worst, std::abs(jac - (-0.5) * L[i * 10 + j]));
            scale = std::max(scale, std::abs(L[i * 10 + j]));
        }
    }
    CHECK(worst <= 1e-6 * scale);
}

TEST_CASE("quartic embedded dynamics") {
    ModelParams p;
    p.k3 = 1.0;
    p.omega = {0.0, 0.0, 0.0, 0.0};
    std::vector<double> th = {0.0, PI / 4.0, PI / 2.0, PI};

    SUBCASE("k3=0 returns omega") {
        ModelParams z;
        z.omega = p.omega;
        auto r = d3_rhs(4, z, th, QuarticVariant::type1);
        for (double x : r) CHECK(x == 0.0);
    }
    SUBCASE("synchronized phases return omega") {
        std::vector<double> sync(4, 0.9);
        for (auto v : {QuarticVariant::type1, QuarticVariant::type2}) {
            auto r = d3_rhs(4, p, sync, v);
            for (double x : r) CHECK(x == doctest::Approx(0.0).epsilon(1e-13));
        }
    }
    SUBCASE("n < 4 leaves omega") {
        ModelParams q;
        q.k3 = 2.0;
        q.omega = {0.4, 0.5, 0.6};
        std::vector<double> t3 = {0.1, 0.2, 0.3};
        auto r = d3_rhs(3, q, t3, QuarticVariant::type1);
        for (int i = 0; i < 3; ++i) CHECK(r[i] == q.omega[i]);
    }
    SUBCASE("matches the ordered-quadruple oracle") {
        for (auto v : {QuarticVariant::type1, QuarticVariant::type2}) {
            auto got = d3_rhs(4, p, th, v);
            auto want = d3_oracle(4, p, th, v);
            for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
        }
        // larger n, random phases
        rng::SplitMix64 gen(13);
        ModelParams q;
        q.k3 = 0.7;
        q.omega.assign(6, 0.0);
        std::vector<double> t6(6);
        for (auto& x : t6) x = gen.uniform(0.0, 2.0 * PI);
        for (auto v : {QuarticVariant::type1, QuarticVariant::type2}) {
            auto got = d3_rhs(6, q, t6, v);
            auto want = d3_oracle(6, q, t6, v);
            for (int i = 0; i < 6; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
        }
    }
    SUBCASE("type2 pair-exchange symmetry") {
        // swapping theta values between the (k,l) slots leaves summands fixed;
        // check the full rhs is invariant under relabeling nodes 2 and 3 with
        // their phases swapped (a symmetry the type1 first harmonic shares).
        std::vector<double> swapped = th;
        std::swap(swapped[2], swapped[3]);
        auto a = d3_rhs(4, p, th, QuarticVariant::type2);
        auto b = d3_rhs(4, p, swapped, QuarticVariant::type2);
        CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-13));
        CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-13));
        CHECK(a[2] == doctest::Approx(b[3]).epsilon(1e-13));
        CHECK(a[3] == doctest::Approx(b[2]).epsilon(1e-13));
    }
}

TEST_CASE("resonance guard") {
    Hypergraph g = Hypergraph::all_to_all(4);
    std::vector<double> ok = {0.11, 0.32, 0.58, 0.91};
    CHECK(!resonance_violation(g, ok));
    std::vector<double> pair_res = {0.2, 0.2 + 1e-9, 0.5, 0.9};
    CHECK(resonance_violation(g, pair_res).has_value());
    // w_j + w_k - 2 w_i = 0 without equal pairs
    std::vector<double> tri_res = {0.2, 0.3, 0.4, 0.75};
    CHECK(resonance_violation(g, tri_res).has_value());
    // pinned restriction: violation outside the pinned set is ignored
    std::vector<int> pinned = {0, 3};
    CHECK(!resonance_violation(g, tri_res, 1e-6, &pinned));
}
