#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "core/errors.hpp"
#include "core/hypergraph.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"

using namespace hokm;

TEST_CASE("all_to_all counts") {
    Hypergraph g3 = Hypergraph::all_to_all(3);
    CHECK(g3.edges().size() == 3);
    CHECK(g3.triangles().size() == 1);

    Hypergraph g2 = Hypergraph::all_to_all(2);
    CHECK(g2.edges().size() == 1);
    CHECK(g2.triangles().size() == 0);

    Hypergraph g50 = Hypergraph::all_to_all(50);
    for (int i : {0, 17, 49}) {
        CHECK(g50.degree(i) == 49);
        CHECK(g50.hyperdegree(i) == 1176);  // C(49,2)
    }
    CHECK_THROWS_AS(Hypergraph::all_to_all(1), Error);
}

TEST_CASE("degree and hyperdegree on small structures") {
    Hypergraph g4 = Hypergraph::all_to_all(4);
    for (int i = 0; i < 4; ++i) {
        CHECK(g4.degree(i) == 3);
        CHECK(g4.hyperdegree(i) == 3);
    }
    Hypergraph empty(3, {}, {});
    CHECK(empty.degree(0) == 0);
    CHECK(empty.hyperdegree(0) == 0);
    CHECK(empty.isolated_count() == 3);

    // single closed triangle
    Hypergraph tri(4, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
    CHECK(tri.degree(0) == 2);
    CHECK(tri.hyperdegree(0) == 1);
    CHECK(tri.isolated_count() == 1);
    CHECK_THROWS_AS(tri.degree(4), Error);
}

TEST_CASE("membership is permutation invariant") {
    Hypergraph g(5, {{1, 3}}, {{0, 2, 4}});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK(!g.has_edge(1, 2));
    int perms[6][3] = {{0, 2, 4}, {0, 4, 2}, {2, 0, 4}, {2, 4, 0}, {4, 0, 2}, {4, 2, 0}};
    for (auto& t : perms) CHECK(g.has_triangle(t[0], t[1], t[2]));
    CHECK(!g.has_triangle(0, 1, 2));
}

TEST_CASE("constructor rejects malformed simplices") {
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}, {}), Error);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}, {}), Error);
    CHECK_THROWS_AS(Hypergraph(3, {}, {{0, 1, 1}}), Error);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}, {}), Error);  // duplicate across order
    CHECK_THROWS_AS(Hypergraph(4, {}, {{0, 1, 2}, {2, 1, 0}}), Error);
}

TEST_CASE("random simplicial complex: degenerate probabilities") {
    // k2 = 0, k1 = n-1 -> no triangles, complete graph
    Hypergraph g = Hypergraph::random_simplicial_complex(12, 11.0, 0.0, 7);
    CHECK(g.triangles().empty());
    CHECK(g.edges().size() == 12 * 11 / 2);
}

TEST_CASE("random simplicial complex: closure and determinism") {
    Hypergraph a = Hypergraph::random_simplicial_complex(30, 12.0, 4.0, 99);
    Hypergraph b = Hypergraph::random_simplicial_complex(30, 12.0, 4.0, 99);
    CHECK(a.edges() == b.edges());
    CHECK(a.triangles() == b.triangles());
    Hypergraph c = Hypergraph::random_simplicial_complex(30, 12.0, 4.0, 100);
    CHECK(a.edges() != c.edges());
    // every face of every triangle is an edge
    for (const auto& t : a.triangles()) {
        CHECK(a.has_edge(t[0], t[1]));
        CHECK(a.has_edge(t[0], t[2]));
        CHECK(a.has_edge(t[1], t[2]));
    }
}

TEST_CASE("random simplicial complex: hits the target means") {
    // Monte-Carlo oracle: empirical mean degree and hyperdegree over 200 seeds
    // against the requested targets, 5% relative.
    const int n = 50;
    const double k1 = 40.0, k2 = 20.0;
    double deg_sum = 0.0, hdeg_sum = 0.0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        Hypergraph g = Hypergraph::random_simplicial_complex(n, k1, k2, 1000 + s);
        long d = 0, hd = 0;
        for (int i = 0; i < n; ++i) {
            d += g.degree(i);
            hd += g.hyperdegree(i);
        }
        deg_sum += static_cast<double>(d) / n;
        hdeg_sum += static_cast<double>(hd) / n;
    }
    const double mean_deg = deg_sum / seeds, mean_hdeg = hdeg_sum / seeds;
    CHECK(mean_deg == doctest::Approx(k1).epsilon(0.05));
    CHECK(mean_hdeg == doctest::Approx(k2).epsilon(0.05));
}

TEST_CASE("random simplicial complex: infeasible parameters") {
    CHECK_THROWS_AS(Hypergraph::random_simplicial_complex(10, 2.0, 40.0, 1), Error);  // p2 > 1
    CHECK_THROWS_AS(Hypergraph::random_simplicial_complex(50, 1.0, 20.0, 1), Error);  // p1 < 0
    CHECK_THROWS_AS(Hypergraph::random_simplicial_complex(2, 1.0, 0.0, 1), Error);    // n < 3
}

TEST_CASE("hypergraph file round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hokm_hg_test";
    fs::create_directories(dir);
    const std::string path = (dir / "g.hg").string();
    Hypergraph g = Hypergraph::random_simplicial_complex(20, 8.0, 2.0, 5);
    save_hypergraph(g, path);
    Hypergraph r = load_hypergraph(path);
    CHECK(r.n() == g.n());
    CHECK(r.edges() == g.edges());
    CHECK(r.triangles() == g.triangles());

    auto write_and_try = [&](const char* body) {
        const std::string bad = (dir / "bad.hg").string();
        std::ofstream out(bad);
        out << body;
        out.close();
        CHECK_THROWS_AS(load_hypergraph(bad), Error);
    };
    write_and_try("e 0 1\n");                       // missing header
    write_and_try("n 3\ne 0 0\n");                  // self-pair
    write_and_try("n 3\ne 0 1\ne 1 0\n");           // duplicate
    write_and_try("n 3\nt 0 1 1\n");                // degenerate triple
    write_and_try("n 3\nq 0 1\n");                  // unknown record
    write_and_try("n 3\ne 0 7\n");                  // out of range
    CHECK_THROWS_AS(load_hypergraph((dir / "missing.hg").string()), Error);
}

TEST_CASE("frequency file loading") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hokm_omega_test";
    fs::create_directories(dir);
    const std::string path = (dir / "omega.txt").string();
    {
        std::ofstream out(path);
        out << "# spread\n0.1\n0.35\n\n0.72\n";
    }
    auto omega = load_omega(path);
    REQUIRE(omega.size() == 3);
    CHECK(omega[1] == 0.35);

    {
        std::ofstream out(path);
        out << "0.1\nnot_a_number\n";
    }
    CHECK_THROWS_AS(load_omega(path), Error);
    {
        std::ofstream out(path);
        out << "# only comments\n";
    }
    CHECK_THROWS_AS(load_omega(path), Error);
    CHECK_THROWS_AS(load_omega((dir / "missing.txt").string()), Error);
}

TEST_CASE("seed derivation is stable and spread out") {
    const std::uint64_t a = rng::derive_seed(1, 2, 3, 4);
    CHECK(a == rng::derive_seed(1, 2, 3, 4));
    CHECK(a != rng::derive_seed(1, 2, 3, 5));
    CHECK(a != rng::derive_seed(1, 2, 4, 4));
    CHECK(a != rng::derive_seed(2, 2, 3, 4));
}
