#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rootlab/basins.hpp"
#include "rootlab/precision.hpp"

using namespace rootlab;

namespace {

BasinConfig config_for(const std::string& poly, MethodId method, int size) {
    BasinConfig cfg;
    cfg.problem = polynomial_by_name(poly);
    cfg.method = method;
    cfg.width = cfg.height = size;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

// Index of the conjugate of root j in the problem's own root list.
int conj_index(const ComplexProblem& prob, int j) {
    if (j == kNoRoot) return kNoRoot;
    auto roots = prob.roots_double();
    Cplx<double> want = conj(roots[static_cast<size_t>(j)]);
    for (size_t k = 0; k < roots.size(); ++k)
        if (magnitude(want - roots[k]) < 1e-12) return static_cast<int>(k);
    return -2;  // no conjugate partner: the root list is not closed under conjugation
}

}  // namespace

TEST_CASE("pixel centers follow the grid mapping, row 0 on top") {
    BasinConfig cfg = config_for("p1", MethodKind::newton, 256);
    // 6/256 is exactly representable, so the expected centers are exact.
    CHECK(pixel_re(cfg, 0) == -3.0 + 0.5 * (6.0 / 256));
    CHECK(pixel_re(cfg, 255) == -3.0 + 255.5 * (6.0 / 256));
    CHECK(pixel_im(cfg, 0) == 3.0 - 0.5 * (6.0 / 256));
    CHECK(pixel_im(cfg, 255) == 3.0 - 255.5 * (6.0 / 256));
    // top-left quadrant has negative re, positive im
    CHECK(pixel_re(cfg, 10) < 0.0);
    CHECK(pixel_im(cfg, 10) > 0.0);
    // symmetric bounds make the grid symmetric about both axes
    for (int i : {0, 17, 100}) {
        CHECK(pixel_re(cfg, i) == -pixel_re(cfg, 255 - i));
        CHECK(pixel_im(cfg, i) == -pixel_im(cfg, 255 - i));
    }

    cfg.x_min = -1.0;
    cfg.x_max = 2.0;
    cfg.width = 3;
    CHECK(pixel_re(cfg, 0) == -0.5);
    CHECK(pixel_re(cfg, 1) == 0.5);
    CHECK(pixel_re(cfg, 2) == 1.5);
}

TEST_CASE("classify_orbit proximity rules") {
    const ComplexProblem& p1 = polynomial_by_name("p1");
    auto tgt = target_of<Cplx<double>>(p1);
    auto roots = p1.roots_double();

    SUBCASE("a start at a root takes zero iterations") {
        for (size_t j = 0; j < roots.size(); ++j) {
            OrbitResult r = classify_orbit(MethodId(MethodKind::four_point_W1), tgt, roots,
                                           roots[j], 100, 1e-3);
            CHECK(r.root_index == static_cast<int>(j));
            CHECK(r.iterations == 0);
        }
    }

    SUBCASE("a start within tolerance reports zero iterations") {
        Cplx<double> z0{0.0004, 1.0003};
        OrbitResult r =
            classify_orbit(MethodId(MethodKind::kung_traub16), tgt, roots, z0, 100, 1e-3);
        CHECK(r.root_index == 0);
        CHECK(r.iterations == 0);
    }

    SUBCASE("equidistant ties resolve to the lowest root index") {
        // z = 0 is exactly 1.0 from both +-i; a generous tolerance makes the
        // initial proximity check fire on the tie itself.
        OrbitResult r = classify_orbit(MethodId(MethodKind::newton), tgt, roots,
                                       Cplx<double>{0.0, 0.0}, 100, 1.5);
        CHECK(r.root_index == 0);
        CHECK(r.iterations == 0);
    }

    SUBCASE("an orbit that never converges reports NONE after the full budget") {
        // Real starts stay real under every scheme here, and p1 has no real
        // roots, so the orbit can never get within tolerance.
        OrbitResult r = classify_orbit(MethodId(MethodKind::newton), tgt, roots,
                                       Cplx<double>{1.0, 0.0}, 25, 1e-3);
        CHECK(r.root_index == kNoRoot);
        CHECK(r.iterations == 25);
    }

    SUBCASE("a failing step classifies as NONE") {
        // f'(0) = 0 for p1, so the very first step throws.
        OrbitResult r = classify_orbit(MethodId(MethodKind::newton), tgt, roots,
                                       Cplx<double>{0.0, 0.0}, 40, 1e-3);
        CHECK(r.root_index == kNoRoot);
        CHECK(r.iterations == 40);
    }

    SUBCASE("iteration counts are the first hit, not the budget") {
        OrbitResult tight = classify_orbit(MethodId(MethodKind::four_point_W1), tgt, roots,
                                           Cplx<double>{0.3, 0.8}, 100, 1e-3);
        REQUIRE(tight.root_index == 0);
        REQUIRE(tight.iterations > 0);
        // rerunning with the budget cut to exactly that count still converges
        OrbitResult exact = classify_orbit(MethodId(MethodKind::four_point_W1), tgt, roots,
                                           Cplx<double>{0.3, 0.8}, tight.iterations, 1e-3);
        CHECK(exact.root_index == 0);
        CHECK(exact.iterations == tight.iterations);
        // one step less and the proximity check never fires
        OrbitResult starved = classify_orbit(MethodId(MethodKind::four_point_W1), tgt, roots,
                                             Cplx<double>{0.3, 0.8}, tight.iterations - 1, 1e-3);
        CHECK(starved.root_index == kNoRoot);
    }
}

TEST_CASE("render_basin covers the plane and is deterministic") {
    BasinConfig cfg = config_for("p1", MethodKind::four_point_W1, 64);
    BasinImage img = render_basin(cfg);
    REQUIRE(img.width == 64);
    REQUIRE(img.height == 64);
    REQUIRE(img.assignment.size() == 64u * 64u);
    REQUIRE(img.iterations_used.size() == img.assignment.size());

    std::map<int, int> counts;
    for (size_t i = 0; i < img.assignment.size(); ++i) {
        int a = img.assignment[i];
        CHECK(a >= kNoRoot);
        CHECK(a < static_cast<int>(cfg.problem.root_literals.size()));
        counts[a]++;
        int it = img.iterations_used[i];
        CHECK(it >= 0);
        CHECK(it <= cfg.max_iterations);
        if (a == kNoRoot) CHECK(it == cfg.max_iterations);
    }
    // both basins show up and dominate; the unconverged sliver stays small
    CHECK(counts[0] > 1000);
    CHECK(counts[1] > 1000);
    CHECK(counts[kNoRoot] < static_cast<int>(img.assignment.size() / 20));

    BasinImage again = render_basin(cfg);
    CHECK(again.assignment == img.assignment);
    CHECK(again.iterations_used == img.iterations_used);
}

TEST_CASE("assignments are sound: replaying the recorded steps lands on the root") {
    BasinConfig cfg = config_for("p3", MethodKind::geum_kim2, 32);
    BasinImage img = render_basin(cfg);
    auto tgt = target_of<Cplx<double>>(cfg.problem);
    auto roots = cfg.problem.roots_double();

    int converged = 0;
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            int claimed = img.at(row, col);
            if (claimed == kNoRoot) continue;
            ++converged;
            Cplx<double> z{pixel_re(cfg, col), pixel_im(cfg, row)};
            for (int k = 0; k < img.iters(row, col); ++k)
                z = method_step(cfg.method, tgt, z).next;
            CHECK(magnitude(z - roots[static_cast<size_t>(claimed)]) < cfg.tolerance);
        }
    }
    CHECK(converged > 900);  // out of 1024
}

TEST_CASE("conjugate starts produce conjugate assignments") {
    // Every scheme is built from field operations with real constants, and
    // complex division branches on component magnitudes only, so conjugating
    // the start conjugates every iterate bit for bit.
    std::mt19937 rng(20240815);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);

    for (const std::string& poly : {"p1", "p2", "p3"}) {
        const ComplexProblem& prob = polynomial_by_name(poly);
        auto tgt = target_of<Cplx<double>>(prob);
        auto roots = prob.roots_double();
        for (MethodId method : {MethodId(MethodKind::four_point_W2),
                                MethodId(MethodKind::kung_traub16),
                                MethodId(MethodKind::geum_kim2)}) {
            for (int i = 0; i < 350; ++i) {
                Cplx<double> z0{coord(rng), coord(rng)};
                OrbitResult up = classify_orbit(method, tgt, roots, z0, 100, 1e-3);
                OrbitResult down = classify_orbit(method, tgt, roots, conj(z0), 100, 1e-3);
                REQUIRE(down.root_index == conj_index(prob, up.root_index));
                REQUIRE(down.iterations == up.iterations);
            }
        }
    }
}

TEST_CASE("rendered grids have pixel-exact mirror symmetry") {
    // Symmetric im-bounds map row <-> height-1-row onto z <-> conj(z) exactly.
    for (const std::string& poly : {"p1", "p2", "p3"}) {
        BasinConfig cfg = config_for(poly, MethodKind::four_point_W1, 32);
        BasinImage img = render_basin(cfg);
        for (int row = 0; row < img.height; ++row) {
            for (int col = 0; col < img.width; ++col) {
                REQUIRE(img.at(img.height - 1 - row, col) ==
                        conj_index(cfg.problem, img.at(row, col)));
                REQUIRE(img.iters(img.height - 1 - row, col) == img.iters(row, col));
            }
        }
    }
}

TEST_CASE("machine and 50-digit renders agree on small grids") {
    for (const std::string& poly : {"p1", "p3"}) {
        BasinConfig cfg = config_for(poly, MethodKind::kung_traub16, 8);
        BasinImage fast = render_basin(cfg);
        BasinImage slow = render_basin_hp(cfg, 50);
        CHECK(fast.assignment == slow.assignment);
        CHECK(fast.iterations_used == slow.iterations_used);
    }
}

TEST_CASE("P6 output is byte-exact") {
    SUBCASE("1x1 red pixel is a 14-byte file") {
        BasinImage img;
        img.width = img.height = 1;
        img.assignment = {0};
        img.iterations_used = {3};
        img.config = config_for("p1", MethodKind::newton, 1);
        std::string path = temp_path("rootlab_tiny.ppm");
        write_ppm(img, path);
        std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 14);
        CHECK(bytes.substr(0, 11) == "P6\n1 1\n255\n");
        CHECK(static_cast<unsigned char>(bytes[11]) == 255);
        CHECK(static_cast<unsigned char>(bytes[12]) == 0);
        CHECK(static_cast<unsigned char>(bytes[13]) == 0);
    }

    SUBCASE("256x256 default render: 15-byte header plus 196608 payload bytes") {
        BasinConfig cfg = config_for("p1", MethodKind::four_point_W1, 256);
        BasinImage img = render_basin(cfg);
        std::string path = temp_path("rootlab_full.ppm");
        write_ppm(img, path);
        std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 15u + 196608u);
        CHECK(bytes.substr(0, 15) == "P6\n256 256\n255\n");

        // unconverged pixels are black, converged ones take palette colors
        size_t black = 0, red = 0, green = 0;
        for (size_t i = 15; i + 2 < bytes.size(); i += 3) {
            unsigned char r = bytes[i], g = bytes[i + 1], b = bytes[i + 2];
            if (r == 0 && g == 0 && b == 0) ++black;
            if (r == 255 && g == 0 && b == 0) ++red;
            if (r == 0 && g == 255 && b == 0) ++green;
        }
        CHECK(black + red + green == 65536u);
        CHECK(red > 20000u);
        CHECK(green > 20000u);

        // black count matches the assignment grid
        size_t none = 0;
        for (int a : img.assignment) none += a == kNoRoot;
        CHECK(black == none);

        SUBCASE("rewriting produces identical bytes") {
            std::string path2 = temp_path("rootlab_full2.ppm");
            write_ppm(render_basin(cfg), path2);
            CHECK(slurp(path2) == bytes);
        }
    }

    SUBCASE("shading darkens converged colors, leaves black alone") {
        BasinImage img;
        img.width = 2;
        img.height = 1;
        img.assignment = {0, kNoRoot};
        img.iterations_used = {50, 100};
        img.config = config_for("p1", MethodKind::newton, 2);
        std::string path = temp_path("rootlab_shade.ppm");
        write_ppm(img, path, true);
        std::string bytes = slurp(path);
        REQUIRE(bytes.size() == 11u + 6u);
        CHECK(static_cast<unsigned char>(bytes[11]) == 191);  // 255 * (1 - 0.5 * 50/100)
        CHECK(static_cast<unsigned char>(bytes[14]) == 0);
    }
}

TEST_CASE("CSV dump lists every pixel with its center and verdict") {
    BasinConfig cfg = config_for("p2", MethodKind::four_point_W3, 8);
    BasinImage img = render_basin(cfg);
    std::string path = temp_path("rootlab_basin.csv");
    write_basin_csv(img, path);

    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "col,row,re,im,root_index,iterations");
    size_t rows = 0;
    while (std::getline(in, line)) {
        if (rows == 0) {
            char expect[128];
            std::snprintf(expect, sizeof(expect), "0,0,%.17g,%.17g,%d,%d", pixel_re(cfg, 0),
                          pixel_im(cfg, 0), img.at(0, 0), img.iters(0, 0));
            CHECK(line == expect);
        }
        ++rows;
    }
    CHECK(rows == 64u);
}

TEST_CASE("sidecar echoes the configuration") {
    BasinConfig cfg = config_for("p3", MethodKind::neta16, 16);
    BasinImage img = render_basin(cfg);
    std::string path = temp_path("rootlab_basin.txt");
    write_basin_sidecar(img, path);
    std::string text = slurp(path);
    CHECK(text.find("method: NNNN (A=0)") != std::string::npos);
    CHECK(text.find("problem: p3") != std::string::npos);
    CHECK(text.find("bounds: re [-3, 3], im [-3, 3]") != std::string::npos);
    CHECK(text.find("resolution: 16x16") != std::string::npos);
    CHECK(text.find("max_iterations: 100") != std::string::npos);
    CHECK(text.find("tolerance: 0.001") != std::string::npos);
}

TEST_CASE("default palette starts red/green/blue and stays distinct") {
    auto three = default_palette(3);
    REQUIRE(three.size() == 3);
    CHECK((three[0].r == 255 && three[0].g == 0 && three[0].b == 0));
    CHECK((three[1].r == 0 && three[1].g == 255 && three[1].b == 0));
    CHECK((three[2].r == 0 && three[2].g == 0 && three[2].b == 255));

    auto six = default_palette(6);
    REQUIRE(six.size() == 6);
    for (size_t i = 0; i < six.size(); ++i)
        for (size_t j = i + 1; j < six.size(); ++j) {
            bool same = six[i].r == six[j].r && six[i].g == six[j].g && six[i].b == six[j].b;
            CHECK(!same);
        }
}

TEST_CASE("invalid configurations are rejected") {
    BasinConfig good = config_for("p1", MethodKind::newton, 4);
    CHECK_NOTHROW(render_basin(good));

    BasinConfig bad = good;
    bad.width = 0;
    CHECK_THROWS_AS(render_basin(bad), std::invalid_argument);

    bad = good;
    bad.max_iterations = 0;
    CHECK_THROWS_AS(render_basin(bad), std::invalid_argument);

    bad = good;
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(render_basin(bad), std::invalid_argument);

    bad = good;
    bad.x_min = bad.x_max;
    CHECK_THROWS_AS(render_basin(bad), std::invalid_argument);

    bad = config_for("p3", MethodKind::newton, 4);
    bad.palette = {{255, 0, 0}};  // p3 has three roots
    CHECK_THROWS_AS(render_basin(bad), std::invalid_argument);
}
