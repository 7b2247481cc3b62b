// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#include "spectral/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

#include "spectral/error.hpp"

namespace spectral {

Region Region::rectangle(const ParamRect& r) {
  Region out;
  out.kind = Kind::Rectangle;
  out.rect = r;
  return out;
}

Region Region::disk(const ParamPoint& center, double radius) {
  Region out;
  out.kind = Kind::Disk;
  out.center = center;
  out.radius = radius;
  out.rect = out.bounding_box();
  return out;
}

ParamRect Region::bounding_box() const {
  if (kind == Kind::Rectangle) {
    return rect;
  }
  return {center.x() - radius, center.x() + radius, center.y() - radius, center.y() + radius};
}

double Region::area() const {
  if (kind == Kind::Rectangle) {
    return rect.width() * rect.height();
  }
  return std::numbers::pi * radius * radius;
}

ParamPoint Region::project_to_boundary(const ParamPoint& p) const {
  if (kind == Kind::Disk) {
    const ParamPoint d = p - center;
    const double r = d.norm();
    if (r == 0.0) {
      return center + ParamPoint(radius, 0.0);
    }
    return center + d * (radius / r);
  }
  // Snap to the nearest side.
  const double du0 = std::abs(p.x() - rect.u_min), du1 = std::abs(p.x() - rect.u_max);
  const double dv0 = std::abs(p.y() - rect.v_min), dv1 = std::abs(p.y() - rect.v_max);
  const double m = std::min({du0, du1, dv0, dv1});
  ParamPoint q(std::clamp(p.x(), rect.u_min, rect.u_max), std::clamp(p.y(), rect.v_min, rect.v_max));
  if (m == du0) q.x() = rect.u_min;
  else if (m == du1) q.x() = rect.u_max;
  else if (m == dv0) q.y() = rect.v_min;
  else q.y() = rect.v_max;
  return q;
}

bool Region::operator==(const Region& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Rectangle) return rect == o.rect;
  return center == o.center && radius == o.radius;
}

int TriMesh::boundary_count() const {
  return static_cast<int>(std::count(boundary.begin(), boundary.end(), 1));
}

ParamPoint TriMesh::centroid(int t) const {
  const auto& tri = triangles[t];
  return (params[tri[0]] + params[tri[1]] + params[tri[2]]) / 3.0;
}

double TriMesh::param_area(int t) const {
  const auto& tri = triangles[t];
  const ParamPoint e1 = params[tri[1]] - params[tri[0]];
  const ParamPoint e2 = params[tri[2]] - params[tri[0]];
  return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
}

double TriMesh::total_param_area() const {
  double a = 0.0;
  for (int t = 0; t < triangle_count(); ++t) a += param_area(t);
  return a;
}

namespace {

std::map<std::array<int, 2>, int> edge_use_counts(const TriMesh& mesh) {
  std::map<std::array<int, 2>, int> counts;
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      ++counts[{a, b}];
    }
  }
  return counts;
}

void flag_boundary(TriMesh& mesh) {
  mesh.boundary.assign(mesh.params.size(), 0);
  for (const auto& [edge, count] : edge_use_counts(mesh)) {
    if (count == 1) {
      mesh.boundary[edge[0]] = 1;
      mesh.boundary[edge[1]] = 1;
    }
  }
}

void embed_all(TriMesh& mesh) {
  mesh.embedded.resize(mesh.vertex_count(), mesh.chart.ambient_dim());
  for (int i = 0; i < mesh.vertex_count(); ++i) {
    mesh.embedded.row(i) = mesh.chart.embed(mesh.params[i]).transpose();
  }
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ArgumentError(std::string(what) + " must be positive and finite");
  }
}

// Structured grid with every cell split along its (u_min,v_min)-(u_max,v_max)
// diagonal. Each interior vertex then sees six triangles of equal total area,
// which keeps the lumped-mass Laplacian consistent on uniform grids.
void fill_grid(TriMesh& mesh, const ParamRect& rect, double h) {
  const int nx = std::max(1, static_cast<int>(std::ceil(rect.width() / h - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil(rect.height() / h - 1e-9)));
  const double dx = rect.width() / nx;
  const double dy = rect.height() / ny;
  mesh.params.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double u = (i == nx) ? rect.u_max : rect.u_min + i * dx;
      const double v = (j == ny) ? rect.v_max : rect.v_min + j * dy;
      mesh.params.emplace_back(u, v);
    }
  }
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      mesh.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
}

// Concentric rings: ring k (1..K) carries 6k equally spaced vertices, so each
// of the six sectors is a triangular lattice.
void fill_rings(TriMesh& mesh, const ParamPoint& center, double radius, double h) {
  const int K = std::max(1, static_cast<int>(std::ceil(radius / h - 1e-9)));
  mesh.params.push_back(center);
  std::vector<int> ring_start(K + 1, 0);
  for (int k = 1; k <= K; ++k) {
    ring_start[k] = static_cast<int>(mesh.params.size());
    const double r = (k == K) ? radius : radius * k / K;
    for (int i = 0; i < 6 * k; ++i) {
      const double phi = 2.0 * std::numbers::pi * i / (6.0 * k);
      mesh.params.emplace_back(center.x() + r * std::cos(phi), center.y() + r * std::sin(phi));
    }
  }
  auto ring_vertex = [&](int k, int idx) {
    if (k == 0) return 0;
    const int count = 6 * k;
    return ring_start[k] + ((idx % count) + count) % count;
  };
  for (int k = 1; k <= K; ++k) {
    for (int s = 0; s < 6; ++s) {
      for (int m = 0; m < k; ++m) {
        const int inner = ring_vertex(k - 1, s * (k - 1) + m);
        mesh.triangles.push_back(
            {inner, ring_vertex(k, s * k + m), ring_vertex(k, s * k + m + 1)});
        if (m < k - 1) {
          mesh.triangles.push_back(
              {inner, ring_vertex(k, s * k + m + 1), ring_vertex(k - 1, s * (k - 1) + m + 1)});
        }
      }
    }
  }
}

void finish(TriMesh& mesh, double h) {
  mesh.h = h;
  mesh.chart_id = mesh.chart.name();
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    if (!(mesh.param_area(t) > 0.0)) {
      throw ArgumentError("mesh generator produced a non-positive triangle");
    }
  }
  flag_boundary(mesh);
  embed_all(mesh);
}

} // namespace

std::vector<std::array<int, 2>> TriMesh::edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& [edge, count] : edge_use_counts(*this)) out.push_back(edge);
  return out;
}

std::vector<std::array<int, 2>> TriMesh::boundary_edges() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& [edge, count] : edge_use_counts(*this)) {
    if (count == 1) out.push_back(edge);
  }
  return out;
}

int TriMesh::boundary_loop_count() const {
  // Union-find over boundary edges; each connected component is one loop.
  std::vector<int> parent(params.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<int> touched;
  for (const auto& e : boundary_edges()) {
    parent[find(e[0])] = find(e[1]);
    touched.insert(e[0]);
    touched.insert(e[1]);
  }
  std::set<int> roots;
  for (int v : touched) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

int TriMesh::euler_characteristic() const {
  return vertex_count() - static_cast<int>(edges().size()) + triangle_count();
}

double TriMesh::max_edge_length() const {
  double best = 0.0;
  for (const auto& e : edges()) best = std::max(best, (params[e[0]] - params[e[1]]).norm());
  return best;
}

double TriMesh::min_angle_degrees() const {
  double best = 180.0;
  for (const auto& tri : triangles) {
    for (int c = 0; c < 3; ++c) {
      const ParamPoint a = params[tri[(c + 1) % 3]] - params[tri[c]];
      const ParamPoint b = params[tri[(c + 2) % 3]] - params[tri[c]];
      const double cosang = a.dot(b) / (a.norm() * b.norm());
      best = std::min(best, std::acos(std::clamp(cosang, -1.0, 1.0)) * 180.0 / std::numbers::pi);
    }
  }
  return best;
}

TriMesh mesh_rectangle(double width, double height, double h) {
  require_positive(width, "width");
  require_positive(height, "height");
  require_positive(h, "h");
  if (h > 0.5 * std::min(width, height) * (1.0 + 1e-12)) {
    throw ArgumentError("mesh_rectangle needs h <= min(width, height) / 2");
  }
  const ParamRect rect{0.0, width, 0.0, height};
  TriMesh mesh;
  mesh.chart = ImmersedChart::flat("flat", rect);
  mesh.region = Region::rectangle(rect);
  fill_grid(mesh, rect, h);
  finish(mesh, h);
  return mesh;
}

TriMesh mesh_disk(double radius, double h) {
  require_positive(radius, "radius");
  require_positive(h, "h");
  const ParamRect box{-radius, radius, -radius, radius};
  TriMesh mesh;
  mesh.chart = ImmersedChart::flat("flat", box);
  mesh.region = Region::disk(ParamPoint::Zero(), radius);
  fill_rings(mesh, ParamPoint::Zero(), radius, h);
  finish(mesh, h);
  return mesh;
}

TriMesh mesh_chart(const ImmersedChart& chart, const Region& region, double h) {
  require_positive(h, "h");
  if (region.kind == Region::Kind::Disk) {
    require_positive(region.radius, "region radius");
  } else if (!(region.rect.width() > 0.0) || !(region.rect.height() > 0.0)) {
    throw ArgumentError("region rectangle must have positive extent");
  }
  const ParamRect box = region.bounding_box();
  const ParamRect& dom = chart.param_domain();
  if (!dom.contains({box.u_min, box.v_min}) || !dom.contains({box.u_max, box.v_max})) {
    throw DomainError("region escapes the parameter domain of chart '" + chart.name() + "'");
  }
  TriMesh mesh;
  mesh.chart = chart;
  mesh.region = region;
  if (region.kind == Region::Kind::Rectangle) {
    if (h > 0.5 * std::min(box.width(), box.height()) * (1.0 + 1e-12)) {
      throw ArgumentError("rectangle region needs h <= min(width, height) / 2");
    }
    fill_grid(mesh, region.rect, h);
  } else {
    fill_rings(mesh, region.center, region.radius, h);
  }
  finish(mesh, h);
  return mesh;
}

TriMesh refine(const TriMesh& mesh) {
  TriMesh out;
  out.chart = mesh.chart;
  out.region = mesh.region;
  out.params = mesh.params;

  std::map<std::array<int, 2>, int> use = edge_use_counts(mesh);
  std::map<std::array<int, 2>, int> midpoint;
  auto mid = [&](int a, int b) {
    std::array<int, 2> key{std::min(a, b), std::max(a, b)};
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    ParamPoint p = 0.5 * (mesh.params[a] + mesh.params[b]);
    if (use[key] == 1) {
      p = mesh.region.project_to_boundary(p);
    }
    const int id = static_cast<int>(out.params.size());
    out.params.push_back(p);
    midpoint.emplace(key, id);
    return id;
  };

  out.triangles.reserve(mesh.triangles.size() * 4);
  for (const auto& tri : mesh.triangles) {
    const int a = tri[0], b = tri[1], c = tri[2];
    const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    out.triangles.push_back({a, ab, ca});
    out.triangles.push_back({ab, b, bc});
    out.triangles.push_back({ca, bc, c});
    out.triangles.push_back({ab, bc, ca});
  }
  finish(out, 0.5 * mesh.h);
  return out;
}

void write_mesh(std::ostream& out, const TriMesh& mesh) {
  char buf[64];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, " %.17g", x);
    out << buf;
  };
  for (int i = 0; i < mesh.vertex_count(); ++i) {
    out << 'v';
    put(mesh.params[i].x());
    put(mesh.params[i].y());
    for (int a = 0; a < mesh.ambient_dim(); ++a) put(mesh.embedded(i, a));
    out << ' ' << static_cast<int>(mesh.boundary[i]) << '\n';
  }
  for (const auto& tri : mesh.triangles) {
    out << "t " << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
  }
}

} // namespace spectral
