#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "multibrot/render.hpp"

using multibrot::Complex;
using multibrot::Degree;
using multibrot::EscapeGrid;
using multibrot::IterationBudget;
using multibrot::Window;

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

EscapeGrid grid_with_counts(int px_w, int px_h, int max_iters, std::vector<int> counts) {
    Window w{{0.0, 0.0}, 1.0, 1.0, px_w, px_h};
    return {w, IterationBudget{max_iters, 1e-9}, std::move(counts)};
}

}  // namespace

TEST_CASE("window validation") {
    CHECK_THROWS_AS((Window{{0, 0}, 1.0, 1.0, 0, 4}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Window{{0, 0}, -1.0, 1.0, 4, 4}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Window{{std::nan(""), 0}, 1.0, 1.0, 4, 4}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((Window{{0, 0}, 1.0, 1.0, 4, 4}.validate()));
}

TEST_CASE("pixel centers map exactly") {
    const Window w{{0.0, 0.0}, 4.0, 4.0, 2, 2};
    CHECK(w.pixel_center(0, 0) == Complex{-1.0, -1.0});
    CHECK(w.pixel_center(1, 1) == Complex{1.0, 1.0});

    const Window odd{{0.0, 0.0}, 4.0, 4.0, 3, 3};
    CHECK(odd.pixel_center(1, 1) == Complex{0.0, 0.0});
}

TEST_CASE("grid counts: inside pixels are 0, escapes are small positive") {
    const EscapeGrid g =
        multibrot::compute_grid(Degree{2}, Window{{0, 0}, 4.0, 4.0, 3, 3}, {200, 1e-9});
    CHECK(g.counts.size() == 9);
    CHECK(g.at(1, 1) == 0);  // c = 0 never escapes

    const EscapeGrid far =
        multibrot::compute_grid(Degree{3}, Window{{2.0, 0.0}, 0.01, 0.01, 1, 1}, {200, 1e-9});
    CHECK(far.at(0, 0) >= 1);
    CHECK(far.at(0, 0) <= 5);
}

TEST_CASE("180-degree pixel symmetry for d=3 is exact") {
    const int n = 64;
    const EscapeGrid g =
        multibrot::compute_grid(Degree{3}, Window{{0, 0}, 3.0, 3.0, n, n}, {300, 1e-9});
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(g.at(i, j) == g.at(n - 1 - i, n - 1 - j));
        }
}

TEST_CASE("raising the budget never un-escapes a pixel") {
    const Window w{{0, 0}, 3.0, 3.0, 32, 32};
    const EscapeGrid low = multibrot::compute_grid(Degree{3}, w, {60, 1e-9});
    const EscapeGrid high = multibrot::compute_grid(Degree{3}, w, {240, 1e-9});
    for (std::size_t k = 0; k < low.counts.size(); ++k) {
        if (low.counts[k] != 0) CHECK(high.counts[k] == low.counts[k]);
    }
}

TEST_CASE("pgm golden bytes") {
    const std::string header = "P5\n1 1\n255\n";
    {
        const auto bytes = multibrot::encode_pgm(grid_with_counts(1, 1, 500, {0}));
        REQUIRE(bytes.size() == header.size() + 1);
        CHECK(std::string(bytes.begin(), bytes.end() - 1) == header);
        CHECK(bytes.back() == 0x00);
    }
    {
        const auto bytes = multibrot::encode_pgm(grid_with_counts(1, 1, 500, {500}));
        CHECK(bytes.back() == 0xFF);
    }
    {
        const auto bytes = multibrot::encode_pgm(grid_with_counts(1, 1, 500, {1}));
        CHECK(bytes.back() == 0x01);  // 1 + floor(254/500)
    }
    {
        const auto bytes = multibrot::encode_pgm(grid_with_counts(1, 1, 500, {250}));
        CHECK(bytes.back() == 0x80);  // 1 + floor(254*250/500)
    }
}

TEST_CASE("rows are emitted top (largest Im) first") {
    // Pixels at c = -0.625i (inside M_2) and c = +1.875i (escapes): the
    // first payload byte must belong to the +Im pixel.
    const Window w{{0.0, 0.625}, 0.1, 5.0, 1, 2};
    CHECK(w.pixel_center(0, 0) == Complex{0.0, -0.625});
    CHECK(w.pixel_center(0, 1) == Complex{0.0, 1.875});

    const EscapeGrid g = multibrot::compute_grid(Degree{2}, w, {2000, 1e-9});
    REQUIRE(g.at(0, 0) == 0);
    REQUIRE(g.at(0, 1) > 0);

    const auto bytes = multibrot::encode_pgm(g);
    REQUIRE(bytes.size() >= 2);
    CHECK(bytes[bytes.size() - 2] > 0);  // top row: escaped
    CHECK(bytes[bytes.size() - 1] == 0);  // bottom row: inside
}

TEST_CASE("write_pgm writes encode_pgm bytes and reports failures") {
    const EscapeGrid g =
        multibrot::compute_grid(Degree{3}, Window{{0, 0}, 3.0, 3.0, 8, 8}, {100, 1e-9});
    const auto path =
        (std::filesystem::temp_directory_path() / "multibrot_render_test.pgm").string();
    multibrot::write_pgm(g, path);
    CHECK(read_file(path) == multibrot::encode_pgm(g));
    std::remove(path.c_str());

    const std::string bad = "/nonexistent-dir/out.pgm";
    CHECK_THROWS_WITH_AS(multibrot::write_pgm(g, bad),
                         doctest::Contains("/nonexistent-dir/out.pgm"), std::runtime_error);
}

TEST_CASE("identical inputs give identical grids and bytes") {
    const Window w{{0, 0}, 3.0, 3.0, 48, 48};
    const EscapeGrid a = multibrot::compute_grid(Degree{3}, w, {150, 1e-9});
    const EscapeGrid b = multibrot::compute_grid(Degree{3}, w, {150, 1e-9});
    CHECK(a.counts == b.counts);
    CHECK(multibrot::encode_pgm(a) == multibrot::encode_pgm(b));
}
