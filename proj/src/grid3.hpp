#ifndef KTCY_GRID3_HPP
#define KTCY_GRID3_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ktcy {

/// Uniform periodic grid on the unit 3-torus R^3/Z^3 with coordinates
/// (x, y, t).  All periods are normalized to 1; point counts per axis must
/// be even and at least 8.
struct Grid3 {
    std::uint32_t nx = 0;
    std::uint32_t ny = 0;
    std::uint32_t nt = 0;

    Grid3() = default;
    Grid3(std::uint32_t nx_, std::uint32_t ny_, std::uint32_t nt_);
    static Grid3 cubic(std::uint32_t n) { return {n, n, n}; }

    std::size_t size() const { return std::size_t(nx) * ny * nt; }
    double hx() const { return 1.0 / nx; }
    double hy() const { return 1.0 / ny; }
    double ht() const { return 1.0 / nt; }

    // x-major, y middle, t minor
    std::size_t index(std::uint32_t ix, std::uint32_t iy, std::uint32_t it) const {
        return (std::size_t(ix) * ny + iy) * nt + it;
    }

    bool operator==(const Grid3&) const = default;
};

/// Real scalar field sampled on a Grid3.  Values are stored x-major,
/// y middle, t minor.
class ScalarField3 {
  public:
    ScalarField3() = default;
    explicit ScalarField3(Grid3 grid, double fill = 0.0);
    ScalarField3(Grid3 grid, std::vector<double> values);

    const Grid3& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double& at(std::uint32_t ix, std::uint32_t iy, std::uint32_t it) {
        return values_[grid_.index(ix, iy, it)];
    }
    double at(std::uint32_t ix, std::uint32_t iy, std::uint32_t it) const {
        return values_[grid_.index(ix, iy, it)];
    }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    /// Evaluates fn(x, y, t) at every grid point.
    template <class Fn>
    static ScalarField3 from_function(Grid3 grid, Fn&& fn) {
        ScalarField3 f(grid);
        for (std::uint32_t ix = 0; ix < grid.nx; ++ix)
            for (std::uint32_t iy = 0; iy < grid.ny; ++iy)
                for (std::uint32_t it = 0; it < grid.nt; ++it)
                    f.at(ix, iy, it) = fn(double(ix) / grid.nx, double(iy) / grid.ny,
                                          double(it) / grid.nt);
        return f;
    }

    /// Throws kt error naming the first non-finite entry, if any.
    void require_finite(const char* what) const;

  private:
    Grid3 grid_;
    std::vector<double> values_;
};

/// Unit directions X = cos(theta) dx - sin(theta) dy and
/// Y = sin(theta) dx + cos(theta) dy expressed in (dx, dy, dt) components.
struct ThetaDirections {
    double theta = 0.0;
    std::array<double, 3> X{1.0, 0.0, 0.0};
    std::array<double, 3> Y{0.0, 1.0, 0.0};

    static ThetaDirections from_angle(double theta);
};

enum class Backend { spectral, fd };

Backend backend_from_string(const std::string& name);
std::string to_string(Backend b);

/// Arithmetic mean with deterministic pairwise summation; on the unit torus
/// this is also the quadrature of the field.
double mean(const ScalarField3& f);
double mean(std::span<const double> v);

double min_value(const ScalarField3& f);
double max_value(const ScalarField3& f);
std::size_t argmin_index(const ScalarField3& f);
double sup_norm(const ScalarField3& f);

/// In-place y += a*x.
void axpy(double a, const ScalarField3& x, ScalarField3& y);
void shift(ScalarField3& f, double c);
void scale(ScalarField3& f, double a);
double dot(const ScalarField3& a, const ScalarField3& b);

/// Binary (.f64) and CSV serialization.  Both carry the (n_x, n_y, n_t)
/// header followed by values in storage order.
void save_field(const ScalarField3& f, const std::string& path);
ScalarField3 load_field(const std::string& path);

}  // namespace ktcy

#endif
