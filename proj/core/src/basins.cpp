#include "rootlab/basins.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "rootlab/precision.hpp"

namespace rootlab {

namespace {

void validate(const BasinConfig& config) {
    if (config.width < 1 || config.height < 1)
        throw std::invalid_argument("basin resolution must be at least 1x1");
    if (config.max_iterations < 1)
        throw std::invalid_argument("basin iteration budget must be positive");
    if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
        throw std::invalid_argument("basin tolerance must be a positive finite number");
    if (!(config.x_min < config.x_max) || !(config.y_min < config.y_max))
        throw std::invalid_argument("basin bounds must span a nonempty rectangle");
    size_t roots = config.problem.root_literals.size();
    if (!config.palette.empty() && config.palette.size() < roots)
        throw std::invalid_argument("basin palette has fewer colors than the problem has roots");
}

template <typename S>
BasinImage render_with(const BasinConfig& config, const std::vector<S>& roots) {
    Target<S> tgt = target_of<S>(config.problem);
    BasinImage image;
    image.width = config.width;
    image.height = config.height;
    image.config = config;
    image.assignment.resize(static_cast<size_t>(config.width) * config.height);
    image.iterations_used.resize(image.assignment.size());
    size_t idx = 0;
    for (int row = 0; row < config.height; ++row) {
        for (int col = 0; col < config.width; ++col, ++idx) {
            S z0{typename S::value_type(pixel_re(config, col)),
                 typename S::value_type(pixel_im(config, row))};
            OrbitResult r = classify_orbit(config.method, tgt, roots, z0,
                                           config.max_iterations, config.tolerance);
            image.assignment[idx] = r.root_index;
            image.iterations_used[idx] = r.iterations;
        }
    }
    return image;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string describe_method(const MethodId& id) {
    std::string text = method_label(id.kind);
    switch (id.kind) {
        case MethodKind::neta8:
        case MethodKind::neta16: text += " (A=" + format_double(id.neta_a) + ")"; break;
        case MethodKind::khattri:
            text += " (alpha=" + format_double(id.khattri_alpha) + ")";
            break;
        case MethodKind::two_point:
            if (id.two_point_family != WeightFamily::W1)
                text += id.two_point_family == WeightFamily::W2 ? " (W2)" : " (W3)";
            break;
        default: break;
    }
    return text;
}

Rgb hsv_color(double hue) {  // full saturation and value, hue in degrees
    double h = hue / 60.0;
    int sector = static_cast<int>(h) % 6;
    double f = h - static_cast<int>(h);
    auto byte = [](double x) { return static_cast<unsigned char>(std::lround(255.0 * x)); };
    switch (sector) {
        case 0: return {255, byte(f), 0};
        case 1: return {byte(1 - f), 255, 0};
        case 2: return {0, 255, byte(f)};
        case 3: return {0, byte(1 - f), 255};
        case 4: return {byte(f), 0, 255};
        default: return {255, 0, byte(1 - f)};
    }
}

std::ofstream open_for_write(const std::string& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

}  // namespace

double pixel_re(const BasinConfig& config, int col) {
    double dx = (config.x_max - config.x_min) / config.width;
    return config.x_min + (col + 0.5) * dx;
}

double pixel_im(const BasinConfig& config, int row) {
    double dy = (config.y_max - config.y_min) / config.height;
    return config.y_max - (row + 0.5) * dy;
}

BasinImage render_basin(const BasinConfig& config) {
    validate(config);
    return render_with<Cplx<double>>(config, config.problem.roots_double());
}

BasinImage render_basin_hp(const BasinConfig& config, int digits) {
    validate(config);
    PrecisionContext ctx(digits);
    return render_with<Cplx<Real>>(config, config.problem.roots_real());
}

std::vector<Rgb> default_palette(size_t roots) {
    static const Rgb primary[3] = {{255, 0, 0}, {0, 255, 0}, {0, 0, 255}};
    std::vector<Rgb> palette;
    palette.reserve(roots);
    if (roots <= 3) {
        palette.assign(primary, primary + roots);
    } else {
        for (size_t i = 0; i < roots; ++i) palette.push_back(hsv_color(360.0 * i / roots));
    }
    return palette;
}

void write_ppm(const BasinImage& image, const std::string& path, bool shade_by_iterations) {
    size_t roots = image.config.problem.root_literals.size();
    std::vector<Rgb> palette =
        image.config.palette.empty() ? default_palette(roots) : image.config.palette;
    if (palette.size() < roots)
        throw std::invalid_argument("basin palette has fewer colors than the problem has roots");

    std::ofstream out = open_for_write(path, std::ios::binary);
    out << "P6\n" << image.width << ' ' << image.height << "\n255\n";
    std::vector<unsigned char> row_bytes(static_cast<size_t>(image.width) * 3);
    for (int row = 0; row < image.height; ++row) {
        for (int col = 0; col < image.width; ++col) {
            Rgb color{0, 0, 0};
            int root = image.at(row, col);
            if (root != kNoRoot) {
                color = palette[static_cast<size_t>(root)];
                if (shade_by_iterations) {
                    double frac = static_cast<double>(image.iters(row, col)) /
                                  image.config.max_iterations;
                    double scale = 1.0 - 0.5 * frac;
                    color.r = static_cast<unsigned char>(std::lround(color.r * scale));
                    color.g = static_cast<unsigned char>(std::lround(color.g * scale));
                    color.b = static_cast<unsigned char>(std::lround(color.b * scale));
                }
            }
            size_t at = static_cast<size_t>(col) * 3;
            row_bytes[at] = color.r;
            row_bytes[at + 1] = color.g;
            row_bytes[at + 2] = color.b;
        }
        out.write(reinterpret_cast<const char*>(row_bytes.data()),
                  static_cast<std::streamsize>(row_bytes.size()));
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

void write_basin_csv(const BasinImage& image, const std::string& path) {
    std::ofstream out = open_for_write(path, std::ios::out);
    out << "col,row,re,im,root_index,iterations\n";
    char buf[128];
    for (int row = 0; row < image.height; ++row) {
        for (int col = 0; col < image.width; ++col) {
            std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%d,%d\n", col, row,
                          pixel_re(image.config, col), pixel_im(image.config, row),
                          image.at(row, col), image.iters(row, col));
            out << buf;
        }
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

void write_basin_sidecar(const BasinImage& image, const std::string& path) {
    const BasinConfig& c = image.config;
    std::ofstream out = open_for_write(path, std::ios::out);
    out << "method: " << describe_method(c.method) << '\n'
        << "problem: " << c.problem.name << " (" << c.problem.expression << ")\n"
        << "bounds: re [" << format_double(c.x_min) << ", " << format_double(c.x_max)
        << "], im [" << format_double(c.y_min) << ", " << format_double(c.y_max) << "]\n"
        << "resolution: " << c.width << "x" << c.height << '\n'
        << "max_iterations: " << c.max_iterations << '\n'
        << "tolerance: " << format_double(c.tolerance) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace rootlab
