#include "levelrect/domain.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace levelrect {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInsideSlack = 1e-9;
}  // namespace

double point_segment_dist(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len_sq = norm_sq(ab);
    if (len_sq == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
    return dist(p, lerp(a, b, t));
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    double d1 = cross(b - a, c - a);
    double d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c);
    double d4 = cross(d - c, b - c);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return true;
    if (tol <= 0.0) return false;
    return point_segment_dist(c, a, b) < tol || point_segment_dist(d, a, b) < tol ||
           point_segment_dist(a, c, d) < tol || point_segment_dist(b, c, d) < tol;
}

// ---------------------------------------------------------------------------
// DomainShape

DomainShape DomainShape::from_name(const std::string& name) {
    if (name == "square") return square();
    if (name == "half_disk") return half_disk();
    if (name == "disk") return disk();
    throw std::runtime_error("unknown shape name: " + name);
}

const char* DomainShape::name() const {
    switch (kind_) {
        case ShapeKind::square: return "square";
        case ShapeKind::half_disk: return "half_disk";
        case ShapeKind::disk: return "disk";
    }
    return "?";
}

double DomainShape::perimeter() const {
    switch (kind_) {
        case ShapeKind::square: return 4.0;
        case ShapeKind::half_disk: return kPi + 2.0;
        case ShapeKind::disk: return 2.0 * kPi;
    }
    return 0.0;
}

Vec2 DomainShape::bbox_min() const {
    switch (kind_) {
        case ShapeKind::square: return {0.0, 0.0};
        case ShapeKind::half_disk: return {-1.0, 0.0};
        case ShapeKind::disk: return {-1.0, -1.0};
    }
    return {};
}

Vec2 DomainShape::bbox_max() const {
    return {1.0, 1.0};
}

Vec2 DomainShape::boundary_point(double s) const {
    s -= std::floor(s);
    double L = s * perimeter();
    switch (kind_) {
        case ShapeKind::square: {
            if (L < 1.0) return {1.0, L};
            if (L < 2.0) return {2.0 - L, 1.0};
            if (L < 3.0) return {0.0, 3.0 - L};
            return {L - 3.0, 0.0};
        }
        case ShapeKind::half_disk: {
            if (L < kPi) return {std::cos(L), std::sin(L)};
            return {-1.0 + (L - kPi), 0.0};
        }
        case ShapeKind::disk: {
            double theta = -kPi / 2.0 + L;
            return {std::cos(theta), std::sin(theta)};
        }
    }
    return {};
}

double DomainShape::boundary_param(Vec2 p) const {
    switch (kind_) {
        case ShapeKind::square: {
            double x = std::clamp(p.x, 0.0, 1.0);
            double y = std::clamp(p.y, 0.0, 1.0);
            // Nearest of the four edges wins.
            double best = 1.0 - x;  // right
            double L = y;
            if (1.0 - y < best) { best = 1.0 - y; L = 2.0 - x; }  // top
            if (x < best) { best = x; L = 3.0 - y; }              // left
            if (y < best) { best = y; L = 3.0 + x; }              // bottom
            double s = L / 4.0;
            return s - std::floor(s);
        }
        case ShapeKind::half_disk: {
            double r = norm(p);
            double d_arc = std::abs(1.0 - r);
            double d_diam = std::abs(p.y);
            double L;
            if (d_diam <= d_arc || r < 1e-12) {
                L = kPi + std::clamp(p.x, -1.0, 1.0) + 1.0;
            } else {
                double theta = std::atan2(p.y, p.x);
                theta = std::clamp(theta, 0.0, kPi);
                L = theta;
            }
            double s = L / perimeter();
            return s - std::floor(s);
        }
        case ShapeKind::disk: {
            double theta = std::atan2(p.y, p.x);
            double L = theta + kPi / 2.0;
            if (L < 0.0) L += 2.0 * kPi;
            double s = L / (2.0 * kPi);
            return s - std::floor(s);
        }
    }
    return 0.0;
}

double DomainShape::boundary_defect(Vec2 p) const {
    switch (kind_) {
        case ShapeKind::square:
            return std::max({-p.x, p.x - 1.0, -p.y, p.y - 1.0});
        case ShapeKind::half_disk:
            return std::max(norm(p) - 1.0, -p.y);
        case ShapeKind::disk:
            return norm(p) - 1.0;
    }
    return 0.0;
}

bool DomainShape::contains(Vec2 p, double slack) const {
    return boundary_defect(p) <= slack;
}

Vec2 DomainShape::clip_to_boundary(Vec2 inside, Vec2 outside) const {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (boundary_defect(lerp(inside, outside, mid)) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lerp(inside, outside, lo);
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(DomainShape shape, int nx, int ny, std::vector<double> values,
                         std::optional<std::vector<std::uint8_t>> mask)
    : shape_(shape), nx_(nx), ny_(ny), values_(std::move(values)) {
    if (nx_ < 2 || ny_ < 2)
        throw std::runtime_error("grid must be at least 2x2");
    if (values_.size() != static_cast<std::size_t>(nx_) * ny_)
        throw std::runtime_error("values size does not match nx*ny");

    Vec2 lo = shape_.bbox_min(), hi = shape_.bbox_max();
    origin_ = lo;
    double hx = (hi.x - lo.x) / (nx_ - 1);
    double hy = (hi.y - lo.y) / (ny_ - 1);
    if (std::abs(hx - hy) > 1e-9 * std::max(hx, hy))
        throw std::runtime_error("grid cells must be square: adjust nx/ny for this shape");
    h_ = hx;

    if (mask) {
        mask_ = std::move(*mask);
        if (mask_.size() != values_.size())
            throw std::runtime_error("mask size does not match nx*ny");
    } else {
        mask_.resize(values_.size());
        for (int j = 0; j < ny_; ++j)
            for (int i = 0; i < nx_; ++i)
                mask_[idx(i, j)] = shape_.contains(node_pos(i, j), kInsideSlack) ? 1 : 0;
    }
    validate_and_finish();
}

void ScalarField::validate_and_finish() {
    long n_in = 0;
    min_v_ = std::numeric_limits<double>::infinity();
    max_v_ = -min_v_;
    int seed_i = -1, seed_j = -1;
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            if (!in_mask(i, j)) continue;
            double v = value(i, j);
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite sample inside mask at node (" << i << ", " << j << ")";
                throw std::runtime_error(os.str());
            }
            ++n_in;
            min_v_ = std::min(min_v_, v);
            max_v_ = std::max(max_v_, v);
            if (seed_i < 0) { seed_i = i; seed_j = j; }
        }
    }
    if (n_in == 0) throw std::runtime_error("empty mask");

    // 4-connectivity of the masked-in region.
    std::vector<std::uint8_t> seen(values_.size(), 0);
    std::queue<std::pair<int, int>> q;
    q.push({seed_i, seed_j});
    seen[idx(seed_i, seed_j)] = 1;
    long reached = 0;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop();
        ++reached;
        for (int d = 0; d < 4; ++d) {
            int ii = i + dx[d], jj = j + dy[d];
            if (ii < 0 || jj < 0 || ii >= nx_ || jj >= ny_) continue;
            if (!in_mask(ii, jj) || seen[idx(ii, jj)]) continue;
            seen[idx(ii, jj)] = 1;
            q.push({ii, jj});
        }
    }
    if (reached != n_in) throw std::runtime_error("disconnected mask");

    // Simply connected: every masked-out node must reach the grid border.
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            if (j != 0 && j != ny_ - 1 && i != 0 && i != nx_ - 1) continue;
            if (in_mask(i, j) || seen[idx(i, j)]) continue;
            seen[idx(i, j)] = 1;
            q.push({i, j});
        }
    }
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop();
        for (int d = 0; d < 4; ++d) {
            int ii = i + dx[d], jj = j + dy[d];
            if (ii < 0 || jj < 0 || ii >= nx_ || jj >= ny_) continue;
            if (in_mask(ii, jj) || seen[idx(ii, jj)]) continue;
            seen[idx(ii, jj)] = 1;
            q.push({ii, jj});
        }
    }
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (!in_mask(i, j) && !seen[idx(i, j)])
                throw std::runtime_error("mask has a hole (region not simply connected)");

    fill_ghosts();

    max_grad_ = 0.0;
    for (int j = 0; j < ny_; ++j)
        for (int i = 0; i < nx_; ++i)
            if (in_mask(i, j)) max_grad_ = std::max(max_grad_, norm(node_gradient(i, j)));
}

void ScalarField::fill_ghosts() {
    ext_ = values_;
    usable_ = mask_;
    const int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    const int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            if (in_mask(i, j)) continue;
            double sum = 0.0;
            int cnt = 0;
            for (int d = 0; d < 8; ++d) {
                int i1 = i + dx[d], j1 = j + dy[d];
                if (i1 < 0 || j1 < 0 || i1 >= nx_ || j1 >= ny_ || !in_mask(i1, j1)) continue;
                int i2 = i + 2 * dx[d], j2 = j + 2 * dy[d];
                if (i2 >= 0 && j2 >= 0 && i2 < nx_ && j2 < ny_ && in_mask(i2, j2)) {
                    sum += 2.0 * value(i1, j1) - value(i2, j2);
                } else {
                    sum += value(i1, j1);
                }
                ++cnt;
            }
            if (cnt > 0) {
                ext_[idx(i, j)] = sum / cnt;
                usable_[idx(i, j)] = 1;
            }
        }
    }
}

double ScalarField::eval(Vec2 p) const {
    if (!shape_.contains(p, 0.5 * h_ + 1e-12))
        throw std::runtime_error("evaluation point outside domain");
    double fx = (p.x - origin_.x) / h_;
    double fy = (p.y - origin_.y) / h_;
    int i = std::clamp(static_cast<int>(std::floor(fx)), 0, nx_ - 2);
    int j = std::clamp(static_cast<int>(std::floor(fy)), 0, ny_ - 2);
    double tx = std::clamp(fx - i, 0.0, 1.0);
    double ty = std::clamp(fy - j, 0.0, 1.0);
    if (!usable(i, j) || !usable(i + 1, j) || !usable(i, j + 1) || !usable(i + 1, j + 1))
        throw std::runtime_error("evaluation point outside domain");
    double v00 = ext_value(i, j), v10 = ext_value(i + 1, j);
    double v01 = ext_value(i, j + 1), v11 = ext_value(i + 1, j + 1);
    return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 +
           tx * ty * v11;
}

Vec2 ScalarField::node_gradient(int i, int j) const {
    auto diff = [&](int i0, int j0, int i1, int j1, int i2, int j2) -> double {
        // Central when both neighbours carry real samples, one-sided otherwise.
        bool lo = i1 >= 0 && j1 >= 0 && i1 < nx_ && j1 < ny_ && in_mask(i1, j1);
        bool hi = i2 >= 0 && j2 >= 0 && i2 < nx_ && j2 < ny_ && in_mask(i2, j2);
        if (lo && hi) return (value(i2, j2) - value(i1, j1)) / (2.0 * h_);
        if (hi) return (value(i2, j2) - value(i0, j0)) / h_;
        if (lo) return (value(i0, j0) - value(i1, j1)) / h_;
        return 0.0;
    };
    return {diff(i, j, i - 1, j, i + 1, j), diff(i, j, i, j - 1, i, j + 1)};
}

Vec2 ScalarField::gradient(Vec2 p) const {
    if (!shape_.contains(p, 0.5 * h_ + 1e-12))
        throw std::runtime_error("gradient point outside domain");
    double fx = (p.x - origin_.x) / h_;
    double fy = (p.y - origin_.y) / h_;
    int i = std::clamp(static_cast<int>(std::floor(fx)), 0, nx_ - 2);
    int j = std::clamp(static_cast<int>(std::floor(fy)), 0, ny_ - 2);
    double tx = std::clamp(fx - i, 0.0, 1.0);
    double ty = std::clamp(fy - j, 0.0, 1.0);
    Vec2 g00 = node_gradient(i, j), g10 = node_gradient(i + 1, j);
    Vec2 g01 = node_gradient(i, j + 1), g11 = node_gradient(i + 1, j + 1);
    Vec2 g0 = lerp(g00, g10, tx);
    Vec2 g1 = lerp(g01, g11, tx);
    return lerp(g0, g1, ty);
}

// ---------------------------------------------------------------------------
// Manifest loading

namespace {

std::vector<std::vector<double>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            // strtod accepts "nan" and "inf" spellings.
            row.push_back(std::strtod(cell.c_str(), nullptr));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ScalarField load_field(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed manifest: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("nx") ||
        !doc.contains("ny") || !doc.contains("values"))
        throw std::runtime_error("malformed manifest: shape/nx/ny/values required");

    DomainShape shape = DomainShape::from_name(doc["shape"].get<std::string>());
    int nx = doc["nx"].get<int>();
    int ny = doc["ny"].get<int>();

    auto dir = std::filesystem::path(manifest_path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (dir / fp).string();
    };

    auto rows = read_csv(resolve(doc["values"].get<std::string>()));
    if (static_cast<int>(rows.size()) != ny)
        throw std::runtime_error("values CSV row count does not match ny");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(nx) * ny);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nx)
            throw std::runtime_error("values CSV column count does not match nx");
        values.insert(values.end(), row.begin(), row.end());
    }

    std::optional<std::vector<std::uint8_t>> mask;
    if (doc.contains("mask") && !doc["mask"].is_null()) {
        auto mrows = read_csv(resolve(doc["mask"].get<std::string>()));
        if (static_cast<int>(mrows.size()) != ny)
            throw std::runtime_error("mask CSV row count does not match ny");
        std::vector<std::uint8_t> m;
        m.reserve(values.size());
        for (const auto& row : mrows) {
            if (static_cast<int>(row.size()) != nx)
                throw std::runtime_error("mask CSV column count does not match nx");
            for (double v : row) m.push_back(v != 0.0 ? 1 : 0);
        }
        mask = std::move(m);
    }
    return ScalarField(shape, nx, ny, std::move(values), std::move(mask));
}

ScalarField sample_field(DomainShape shape, int n,
                         const std::function<double(double, double)>& fn) {
    if (n < 2) throw std::invalid_argument("sample_field: n must be >= 2");
    int nx = n, ny = n;
    if (shape.kind() == ShapeKind::half_disk) {
        if (n % 2 == 0)
            throw std::invalid_argument("sample_field: half-disk needs odd n");
        ny = (n + 1) / 2;
    }
    Vec2 lo = shape.bbox_min(), hi = shape.bbox_max();
    double hx = (hi.x - lo.x) / (nx - 1);
    std::vector<double> values(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            values[static_cast<std::size_t>(j) * nx + i] = fn(lo.x + i * hx, lo.y + j * hx);
    return ScalarField(shape, nx, ny, std::move(values));
}

std::vector<BoundarySample> boundary_samples(const ScalarField& field, int m) {
    if (m < 4) throw std::invalid_argument("boundary_samples: m must be >= 4");
    std::vector<BoundarySample> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        double s = static_cast<double>(i) / m;
        Vec2 p = field.shape().boundary_point(s);
        out.push_back({s, p, field.eval(p)});
    }
    return out;
}

}  // namespace levelrect
