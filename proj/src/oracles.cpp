#include "pinchkit/oracles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pinchkit/error.hpp"

namespace pinchkit::oracles {

namespace {

using Vec3 = std::array<double, 3>;

struct Samples {
  std::vector<Vec3> pos;
  std::vector<Vec3> vel;
};

Samples sample_curve(const ParamCurve& c, int n) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double R = c.major_radius;
  const double r = c.minor_radius;
  const double dphi = two_pi * static_cast<double>(c.p);
  const double dpsi = two_pi * static_cast<double>(c.q);

  Samples s;
  s.pos.resize(n);
  s.vel.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;
    const double phi = two_pi * (static_cast<double>(c.p) * t + c.longitude_phase);
    const double psi = two_pi * (static_cast<double>(c.q) * t + c.phase);
    const double rho = R + r * std::cos(psi);
    s.pos[i] = {rho * std::cos(phi), rho * std::sin(phi), -r * std::sin(psi)};
    s.vel[i] = {-r * std::sin(psi) * dpsi * std::cos(phi) - rho * std::sin(phi) * dphi,
                -r * std::sin(psi) * dpsi * std::sin(phi) + rho * std::cos(phi) * dphi,
                -r * std::cos(psi) * dpsi};
  }
  return s;
}

}  // namespace

ParamCurve torus_pushoff(const ParamCurve& c) {
  ParamCurve shifted = c;
  // Parallel copies are indexed by q*longitude_phase - p*phase mod 1; move it
  // by one half.
  if (c.p != 0) {
    shifted.phase += 0.5 / static_cast<double>(c.p);
  } else {
    shifted.longitude_phase += 0.5 / static_cast<double>(c.q == 0 ? 1 : c.q);
  }
  return shifted;
}

double gauss_linking(const ParamCurve& c1, const ParamCurve& c2, int samples) {
  if (samples < 64) {
    throw Error(ErrorCode::kInvalidConfig, "gauss_linking needs at least 64 samples");
  }
  if (!(c1.major_radius > c1.minor_radius && c1.minor_radius > 0.0) ||
      !(c2.major_radius > c2.minor_radius && c2.minor_radius > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "torus radii must satisfy R > r > 0");
  }
  const Samples a = sample_curve(c1, samples);
  const Samples b = sample_curve(c2, samples);
  const double min_dist = 1e-6 * std::min(c1.major_radius, c2.major_radius);

  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec3& x = a.pos[i];
    const Vec3& dx = a.vel[i];
    double row = 0.0;
    for (int j = 0; j < samples; ++j) {
      const Vec3& y = b.pos[j];
      const Vec3& dy = b.vel[j];
      const double d0 = x[0] - y[0];
      const double d1 = x[1] - y[1];
      const double d2 = x[2] - y[2];
      const double dist2 = d0 * d0 + d1 * d1 + d2 * d2;
      const double dist = std::sqrt(dist2);
      if (dist < min_dist) {
        throw Error(ErrorCode::kCurvesTooClose,
                    "sample points " + std::to_string(i) + " and " + std::to_string(j) +
                        " are " + std::to_string(dist) + " apart");
      }
      const double c0 = dx[1] * dy[2] - dx[2] * dy[1];
      const double c1x = dx[2] * dy[0] - dx[0] * dy[2];
      const double c2x = dx[0] * dy[1] - dx[1] * dy[0];
      row += (c0 * d0 + c1x * d1 + c2x * d2) / (dist2 * dist);
    }
    total += row;
  }
  const double n = static_cast<double>(samples);
  return total / (n * n) / (4.0 * std::numbers::pi);
}

double pushoff_linking(std::int64_t p, std::int64_t q, int samples) {
  const ParamCurve curve{.p = p, .q = q};
  return gauss_linking(curve, torus_pushoff(curve), samples);
}

bool verify_step_euler(const PinchStep& step, int samples) {
  if (step.source.p() * step.source.q() > 100) {
    throw Error(ErrorCode::kTooLarge,
                to_string(step.source) + " is too large for stable quadrature (pq > 100)");
  }
  const double source_lk = pushoff_linking(step.source.p(), step.source.q(), samples);
  const double target_lk = pushoff_linking(step.target.p(), step.target.q(), samples);
  const auto diff = std::llround(target_lk) - std::llround(source_lk);
  return diff == step.step_euler;
}

IntMatrix seifert_matrix(const TorusKnot& k) {
  if (k.is_unknot() || k.p() < 2) return {};
  const std::int64_t columns = k.p() - 1;
  const std::int64_t twists = k.q();

  // Position of each band along the braid word, grouped by column.
  struct Loop {
    std::int64_t column;
    std::int64_t first;
    std::int64_t second;
  };
  std::vector<Loop> loops;
  for (std::int64_t col = 0; col < columns; ++col) {
    for (std::int64_t rep = 0; rep + 1 < twists; ++rep) {
      loops.push_back({col, rep * columns + col, (rep + 1) * columns + col});
    }
  }

  const std::size_t n = loops.size();
  IntMatrix v(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const Loop& a = loops[x];
    v[x][x] = -1;
    for (std::size_t y = 0; y < n; ++y) {
      const Loop& b = loops[y];
      if (x == y) continue;
      if (b.column == a.column && a.second == b.first) {
        v[x][y] = 1;
      } else if (b.column == a.column + 1) {
        if (a.first < b.first && b.first < a.second && a.second < b.second) {
          v[x][y] = -1;
        } else if (b.first < a.first && a.first < b.second && b.second < a.second) {
          v[y][x] = 1;
        }
      }
    }
  }
  return v;
}

std::int64_t symmetric_signature(const IntMatrix& m) {
  using boost::multiprecision::cpp_rational;
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("symmetric_signature: matrix is not square");
  }
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
      }
      a[i][j] = m[i][j];
    }
  }

  // Congruence A -> E A E^T keeps the signature. Each pass fixes a nonzero
  // pivot at position k and clears row and column k.
  std::int64_t sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // Zero diagonal: look for a hyperbolic pair a[k'][j] != 0 and fold row j
      // into row k', which makes a[k'][k'] = 2 a[k'][j].
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t c = k; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = k; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const cpp_rational pivot = a[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const cpp_rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    // The matching column operation only clears row k; the trailing block is
    // already symmetric.
    for (std::size_t i = k + 1; i < n; ++i) a[k][i] = 0;
  }
  return sig;
}

std::int64_t seifert_signature_oracle(const TorusKnot& k) {
  if (k.is_unknot()) return 0;
  if ((k.p() - 1) * (k.q() - 1) > 64) {
    throw Error(ErrorCode::kTooLarge,
                "Seifert matrix for " + to_string(k) + " exceeds 64 x 64");
  }
  const IntMatrix v = seifert_matrix(k);
  IntMatrix sym = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) sym[i][j] = v[i][j] + v[j][i];
  }
  return symmetric_signature(sym);
}

}  // namespace pinchkit::oracles
