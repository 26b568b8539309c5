#pragma once

#include <string>
#include <vector>

#include "rootlab/complex.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/problems.hpp"
#include "rootlab/schemes.hpp"

namespace rootlab {

struct Rgb {
    unsigned char r = 0, g = 0, b = 0;
};

// Protocol for rendering a basin-of-attraction picture: iterate the method
// from every pixel center of a complex-plane grid and color by the root the
// orbit approaches, black when it approaches none.
struct BasinConfig {
    ComplexProblem problem;
    MethodId method;
    double x_min = -3.0, x_max = 3.0;
    double y_min = -3.0, y_max = 3.0;
    int width = 256, height = 256;
    int max_iterations = 100;
    double tolerance = 1e-3;
    std::vector<Rgb> palette;  // empty = default_palette(root count)
};

constexpr int kNoRoot = -1;

struct BasinImage {
    int width = 0, height = 0;
    std::vector<int> assignment;       // row-major; kNoRoot when unconverged
    std::vector<int> iterations_used;  // row-major
    BasinConfig config;

    int at(int row, int col) const { return assignment[static_cast<size_t>(row) * width + col]; }
    int iters(int row, int col) const {
        return iterations_used[static_cast<size_t>(row) * width + col];
    }
};

struct OrbitResult {
    int root_index = kNoRoot;
    int iterations = 0;
};

// Iterates from z0, checking proximity to the root list before every step
// (so a start within tolerance of a root reports zero iterations). Returns
// the nearest root's index once within tolerance — ties break toward the
// lowest index — or kNoRoot with iterations = max_iterations when the orbit
// never gets there, a step fails, or a value stops being finite.
template <typename S>
OrbitResult classify_orbit(const MethodId& method, const Target<S>& tgt,
                           const std::vector<S>& roots, const S& z0, int max_iterations,
                           double tolerance) {
    Mag<S> tol{tolerance};
    S z = z0;
    for (int k = 0;; ++k) {
        int best = kNoRoot;
        Mag<S> best_dist{};
        for (size_t j = 0; j < roots.size(); ++j) {
            Mag<S> d = magnitude(z - roots[j]);
            if (best == kNoRoot || d < best_dist) {
                best = static_cast<int>(j);
                best_dist = d;
            }
        }
        if (best != kNoRoot && best_dist < tol) return {best, k};
        if (k == max_iterations) break;
        try {
            z = method_step(method, tgt, z).next;
        } catch (const NumericError&) {
            return {kNoRoot, max_iterations};
        }
        if (!is_finite(z)) return {kNoRoot, max_iterations};
    }
    return {kNoRoot, max_iterations};
}

// Pixel-center coordinates of the grid cell (col, row), row 0 at the top.
double pixel_re(const BasinConfig& config, int col);
double pixel_im(const BasinConfig& config, int row);

// Classifies every pixel center at machine precision. Deterministic for a
// fixed config. Throws std::invalid_argument on an invalid config (empty
// grid, nonpositive tolerance or iteration budget, short palette).
BasinImage render_basin(const BasinConfig& config);

// Same protocol over arbitrary-precision complex arithmetic; used to
// validate the machine-precision pictures.
BasinImage render_basin_hp(const BasinConfig& config, int digits);

// Red/green/blue for up to three roots, then evenly spaced hues.
std::vector<Rgb> default_palette(size_t roots);

// Binary P6 file: "P6\n<width> <height>\n255\n" then RGB triples, top row
// first. Unconverged pixels are black. With shade_by_iterations, converged
// colors darken with the iteration count.
void write_ppm(const BasinImage& image, const std::string& path,
               bool shade_by_iterations = false);

// One line per pixel: col,row,re,im,root_index,iterations (root_index -1
// when unconverged). re/im are the pixel-center coordinates.
void write_basin_csv(const BasinImage& image, const std::string& path);

// Small text file echoing the configuration that produced the image.
void write_basin_sidecar(const BasinImage& image, const std::string& path);

}  // namespace rootlab
