#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multibrot/dynamics.hpp"

namespace multibrot {

// Rectangular window in the c-plane sampled on a px_w x px_h lattice.
// Pixel (i, j) samples the cell center
//
//   c = center + width*((i + 0.5)/px_w - 0.5) + I*height*((j + 0.5)/px_h - 0.5)
//
// so j grows with Im(c). The offsets are computed symmetrically: for a
// window centered at 0 the lattice is exactly invariant under c -> -c,
// which makes the 180-degree symmetry of M_3 hold pixel-for-pixel.
// write_pgm emits row j = px_h - 1 first, putting +Im at the top of the
// image.
struct Window {
    Complex center{0.0, 0.0};
    double width = 3.0;
    double height = 3.0;
    int px_w = 512;
    int px_h = 512;

    Complex pixel_center(int i, int j) const;
    void validate() const;  // finite center, positive extents and dimensions
};

// Escape counts per pixel, row-major; 0 is reserved for not-escaped.
struct EscapeGrid {
    Window window;
    IterationBudget budget;
    std::vector<int> counts;

    int at(int i, int j) const { return counts[static_cast<std::size_t>(j) * window.px_w + i]; }
};

// Per-pixel iterate_p: Escaped(n) stores n, Undetermined stores 0.
// Pixels are independent; rows are distributed over hardware threads and
// the result does not depend on the execution order.
EscapeGrid compute_grid(Degree d, const Window& window, const IterationBudget& budget);

// Binary PGM (P5, maxval 255). Shade 0 for count 0, otherwise
// 1 + floor(254 * min(count, max_iters) / max_iters). Byte-exact across
// platforms for identical grids.
std::vector<std::uint8_t> encode_pgm(const EscapeGrid& grid);

// encode_pgm to a file; I/O failures throw with the path in the message.
void write_pgm(const EscapeGrid& grid, const std::string& path);

}  // namespace multibrot
