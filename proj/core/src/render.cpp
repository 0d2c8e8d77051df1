#include "multibrot/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace multibrot {

Complex Window::pixel_center(int i, int j) const {
    const double re = center.real() + width * ((i + 0.5) / px_w - 0.5);
    const double im = center.imag() + height * ((j + 0.5) / px_h - 0.5);
    return {re, im};
}

void Window::validate() const {
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw std::invalid_argument("window center must be finite");
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("window extents must be positive");
    if (px_w < 1 || px_h < 1)
        throw std::invalid_argument("window resolution must be >= 1 pixel");
}

EscapeGrid compute_grid(Degree d, const Window& window, const IterationBudget& budget) {
    window.validate();
    EscapeGrid grid{window, budget, {}};
    grid.counts.assign(static_cast<std::size_t>(window.px_w) * window.px_h, 0);

    const auto fill_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            for (int i = 0; i < window.px_w; ++i) {
                const OrbitVerdict v = iterate_p(d, window.pixel_center(i, j), budget);
                grid.counts[static_cast<std::size_t>(j) * window.px_w + i] =
                    v.escaped() ? v.steps : 0;
            }
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const int workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (workers <= 1 || window.px_h < 2 * workers) {
        fill_rows(0, window.px_h);
        return grid;
    }

    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int rows_per = (window.px_h + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * rows_per;
        const int end = std::min(window.px_h, begin + rows_per);
        if (begin >= end) break;
        pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& t : pool) t.join();
    return grid;
}

std::vector<std::uint8_t> encode_pgm(const EscapeGrid& grid) {
    const int w = grid.window.px_w;
    const int h = grid.window.px_h;
    const int max_iters = grid.budget.max_iters;

    char header[64];
    const int header_len = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", w, h);

    std::vector<std::uint8_t> bytes;
    bytes.reserve(static_cast<std::size_t>(header_len) + static_cast<std::size_t>(w) * h);
    bytes.insert(bytes.end(), header, header + header_len);

    // Top image row is the largest Im(c), so rows are emitted j = h-1 .. 0.
    for (int j = h - 1; j >= 0; --j) {
        for (int i = 0; i < w; ++i) {
            const int count = grid.at(i, j);
            std::uint8_t shade = 0;
            if (count != 0) {
                const long long clamped = std::min<long long>(count, max_iters);
                shade = static_cast<std::uint8_t>(1 + (254 * clamped) / max_iters);
            }
            bytes.push_back(shade);
        }
    }
    return bytes;
}

void write_pgm(const EscapeGrid& grid, const std::string& path) {
    const std::vector<std::uint8_t> bytes = encode_pgm(grid);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

}  // namespace multibrot
