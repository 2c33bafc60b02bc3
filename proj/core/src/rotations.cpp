#include "plumbing/rotations.hpp"

#include <vector>

#include "plumbing/errors.hpp"
#include "plumbing/lattice.hpp"

namespace plumbing {

namespace {

void require_minimal(const PlumbingGraph& g) {
  if (!is_minimal(g))
    throw MathError(MathError::Code::not_minimal,
                    "rotation vectors need a minimal graph (all weights <= -2)");
}

}  // namespace

Integer rotation_count(const PlumbingGraph& g, bool parity) {
  require_minimal(g);
  Integer count(1);
  for (int v = 0; v < g.size(); ++v) {
    const Integer a = -g.weight(v);
    count *= parity ? Integer(a - 1) : Integer(2 * a - 3);
  }
  return count;
}

void enumerate_rotations(const PlumbingGraph& g, bool parity, std::uint64_t cap,
                         const std::function<void(const IntVector&)>& visit) {
  const Integer count = rotation_count(g, parity);
  if (count > cap)
    throw CapError("rotation enumeration needs " + count.str() + " vectors, cap is " +
                   std::to_string(cap));
  const int n = g.size();
  const int step = parity ? 2 : 1;
  IntVector z(n);
  std::vector<Integer> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    hi[v] = -g.weight(v) - 2;
    lo[v] = -hi[v];
    z[v] = lo[v];
  }
  for (;;) {
    visit(z);
    int v = n - 1;
    while (v >= 0) {
      z[v] += step;
      if (z[v] <= hi[v]) break;
      z[v] = lo[v];
      --v;
    }
    if (v < 0) return;
  }
}

Rational theta_of_rotation(const PlumbingGraph& g, const IntVector& z) {
  if (static_cast<int>(z.size()) != g.size())
    throw MathError(MathError::Code::invalid_rotation, "rotation vector has wrong length");
  for (int v = 0; v < g.size(); ++v) {
    const Integer bound = -g.weight(v) - 2;
    if (z[v] > bound || z[v] < -bound)
      throw MathError(MathError::Code::invalid_rotation,
                      "rotation entry at \"" + g.id(v) + "\" outside |z| <= a - 2",
                      g.id(v));
  }
  return quad_form_inv(intersection_matrix(g), z) + g.size() - 2;
}

DiagramClass classify(const PlumbingGraph& g, const IntVector& z) {
  const IntVector c = canonical_vector(g);
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    plus = plus && z[i] == c[i];
    minus = minus && z[i] == -c[i];
  }
  return (plus || minus) ? DiagramClass::consistent : DiagramClass::inconsistent;
}

bool rhb_obstructed(const PlumbingGraph& g, const IntVector& z) {
  return theta_of_rotation(g, z) != -2;
}

MinimizationReport verify_minimization(const PlumbingGraph& g, bool parity,
                                       std::uint64_t cap) {
  require_minimal(g);
  if (!is_negative_definite(g))
    throw MathError(MathError::Code::not_negative_definite,
                    "verify_minimization requires a negative-definite graph");
  const Integer total = rotation_count(g, parity);
  if (total > cap)
    throw CapError("rotation enumeration needs " + total.str() + " vectors, cap is " +
                   std::to_string(cap));
  const int n = g.size();
  const RatMatrix inv = invert(to_rational(intersection_matrix(g)));
  const IntVector c = canonical_vector(g);

  MinimizationReport report;
  report.theta_canonical = theta_of_rotation(g, c);

  // Depth-first sweep in lexicographic order with per-level partial sums:
  // t[level][j] = sum_{i<level} inv(i,j) z_i, quad accumulated on the way
  // down, so each full vector costs O(N) rational work.
  std::vector<RatVector> t(n + 1, RatVector(n, Rational(0)));
  std::vector<long long> z(n);
  std::vector<long long> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    hi[v] = (-g.weight(v) - 2).convert_to<long long>();
    lo[v] = -hi[v];
  }
  const int step = parity ? 2 : 1;

  auto consider = [&](const Rational& quad) {
    ++report.enumerated;
    bool plus = true, minus = true;
    for (int v = 0; v < n; ++v) {
      plus = plus && Integer(z[v]) == c[v];
      minus = minus && Integer(z[v]) == -c[v];
    }
    if (plus || minus) return;
    const Rational theta = quad + n - 2;
    if (!report.min_other_theta || theta < *report.min_other_theta)
      report.min_other_theta = theta;
    if (theta <= report.theta_canonical && !report.witness) {
      IntVector w(n);
      for (int v = 0; v < n; ++v) w[v] = z[v];
      report.witness = w;  // lexicographic order makes the first hit smallest
    }
  };

  auto descend = [&](auto&& self, int level, const Rational& quad) -> void {
    if (level == n) {
      consider(quad);
      return;
    }
    for (long long x = lo[level]; x <= hi[level]; x += step) {
      z[level] = x;
      const Rational xr(x);
      const Rational quad_next =
          quad + 2 * xr * t[level][level] + Rational(inv(level, level)) * xr * xr;
      for (int j = level + 1; j < n; ++j)
        t[level + 1][j] = t[level][j] + Rational(inv(level, j)) * xr;
      self(self, level + 1, quad_next);
    }
  };
  descend(descend, 0, Rational(0));

  if (report.min_other_theta) {
    report.gap = *report.min_other_theta - report.theta_canonical;
    report.holds = *report.gap > 0;
  } else {
    report.holds = true;  // nothing besides +-c in the box
  }
  return report;
}

}  // namespace plumbing
