#include "grid3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace ktcy {

Grid3::Grid3(std::uint32_t nx_, std::uint32_t ny_, std::uint32_t nt_)
    : nx(nx_), ny(ny_), nt(nt_) {
    for (std::uint32_t n : {nx, ny, nt}) {
        if (n < 8 || n % 2 != 0)
            throw ArgumentError("grid axis count must be even and >= 8, got " +
                                std::to_string(n));
    }
}

ScalarField3::ScalarField3(Grid3 grid, double fill)
    : grid_(grid), values_(grid.size(), fill) {}

ScalarField3::ScalarField3(Grid3 grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw ArgumentError("field value count does not match grid size");
}

void ScalarField3::require_finite(const char* what) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            const std::uint32_t it = std::uint32_t(i % grid_.nt);
            const std::uint32_t iy = std::uint32_t((i / grid_.nt) % grid_.ny);
            const std::uint32_t ix = std::uint32_t(i / (std::size_t(grid_.nt) * grid_.ny));
            std::ostringstream msg;
            msg << what << ": non-finite value at index (" << ix << ", " << iy << ", "
                << it << ")";
            throw DomainError(msg.str());
        }
    }
}

ThetaDirections ThetaDirections::from_angle(double theta) {
    ThetaDirections d;
    d.theta = theta;
    const double c = std::cos(theta), s = std::sin(theta);
    d.X = {c, -s, 0.0};
    d.Y = {s, c, 0.0};
    return d;
}

Backend backend_from_string(const std::string& name) {
    if (name == "spectral") return Backend::spectral;
    if (name == "fd") return Backend::fd;
    throw ArgumentError("unknown backend '" + name + "' (expected spectral|fd)");
}

std::string to_string(Backend b) {
    return b == Backend::spectral ? "spectral" : "fd";
}

namespace {

// Pairwise recursive sum: deterministic and accurate for long arrays.
double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

}  // namespace

double mean(std::span<const double> v) {
    if (v.empty()) throw ArgumentError("mean of empty span");
    return pairwise_sum(v.data(), v.size()) / double(v.size());
}

double mean(const ScalarField3& f) {
    f.require_finite("mean");
    return mean(f.values());
}

double min_value(const ScalarField3& f) {
    return *std::min_element(f.values().begin(), f.values().end());
}

double max_value(const ScalarField3& f) {
    return *std::max_element(f.values().begin(), f.values().end());
}

std::size_t argmin_index(const ScalarField3& f) {
    return std::size_t(std::min_element(f.values().begin(), f.values().end()) -
                       f.values().begin());
}

double sup_norm(const ScalarField3& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

void axpy(double a, const ScalarField3& x, ScalarField3& y) {
    if (!(x.grid() == y.grid())) throw ArgumentError("axpy: grid mismatch");
    auto xv = x.values();
    auto yv = y.values();
    for (std::size_t i = 0; i < xv.size(); ++i) yv[i] += a * xv[i];
}

void shift(ScalarField3& f, double c) {
    for (double& v : f.values()) v += c;
}

void scale(ScalarField3& f, double a) {
    for (double& v : f.values()) v *= a;
}

double dot(const ScalarField3& a, const ScalarField3& b) {
    if (!(a.grid() == b.grid())) throw ArgumentError("dot: grid mismatch");
    auto av = a.values();
    auto bv = b.values();
    std::vector<double> prod(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) prod[i] = av[i] * bv[i];
    return pairwise_sum(prod.data(), prod.size());
}

namespace {
constexpr char kMagic[4] = {'K', 'T', 'F', '1'};
}

void save_field(const ScalarField3& f, const std::string& path) {
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    std::ofstream out(path, csv ? std::ios::out : (std::ios::out | std::ios::binary));
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const Grid3& g = f.grid();
    if (csv) {
        out << g.nx << "," << g.ny << "," << g.nt << "\n";
        char buf[32];
        for (double v : f.values()) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf << "\n";
        }
    } else {
        out.write(kMagic, 4);
        const std::uint32_t dims[3] = {g.nx, g.ny, g.nt};
        out.write(reinterpret_cast<const char*>(dims), sizeof dims);
        out.write(reinterpret_cast<const char*>(f.values().data()),
                  std::streamsize(f.size() * sizeof(double)));
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

ScalarField3 load_field(const std::string& path) {
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    std::ifstream in(path, csv ? std::ios::in : (std::ios::in | std::ios::binary));
    if (!in) throw IoError("cannot open '" + path + "'");
    if (csv) {
        std::string header;
        if (!std::getline(in, header)) throw IoError("empty field file '" + path + "'");
        std::uint32_t nx = 0, ny = 0, nt = 0;
        if (std::sscanf(header.c_str(), "%u,%u,%u", &nx, &ny, &nt) != 3)
            throw IoError("bad CSV field header in '" + path + "'");
        Grid3 g(nx, ny, nt);
        std::vector<double> vals;
        vals.reserve(g.size());
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            vals.push_back(std::stod(line));
        }
        if (vals.size() != g.size())
            throw IoError("CSV field in '" + path + "' has " + std::to_string(vals.size()) +
                          " values, expected " + std::to_string(g.size()));
        return {g, std::move(vals)};
    }
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("'" + path + "' is not a field file");
    std::uint32_t dims[3];
    in.read(reinterpret_cast<char*>(dims), sizeof dims);
    if (!in) throw IoError("truncated field file '" + path + "'");
    Grid3 g(dims[0], dims[1], dims[2]);
    std::vector<double> vals(g.size());
    in.read(reinterpret_cast<char*>(vals.data()), std::streamsize(vals.size() * sizeof(double)));
    if (!in) throw IoError("truncated field file '" + path + "'");
    return {g, std::move(vals)};
}

}  // namespace ktcy
