#include "lamina/flag.hpp"

#include <algorithm>

#include "lamina/rng.hpp"

namespace lamina {

std::vector<std::array<int, 3>> chart_index_triples(int m) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= m - 1; ++i) {
    for (int j = 0; j <= m - 1; ++j) {
      const int k = m - i - j;
      if (k >= 0 && k <= m - 1) out.push_back({i, j, k});
    }
  }
  return out;
}

LaurentSeries f_ijk(const AffineFlag& a, const AffineFlag& b, const AffineFlag& c, int i, int j,
                    int k) {
  const int m = a.columns.rows();
  if (i + j + k != m || i < 0 || j < 0 || k < 0)
    throw IndexOutOfRange("f_ijk indices must be nonnegative and sum to m");
  SeriesMatrix mat = from_column_blocks({&a.columns, &b.columns, &c.columns}, {i, j, k});
  return det(mat);
}

LaurentSeries f_edge(const AffineFlag& a, const AffineFlag& b, int i, int j) {
  const int m = a.columns.rows();
  if (i + j != m || i < 1 || j < 1) throw IndexOutOfRange("edge function needs i+j = m, i,j >= 1");
  SeriesMatrix mat = from_column_blocks({&a.columns, &b.columns}, {i, j});
  return det(mat);
}

namespace {

void check_chart_value(const LaurentSeries& v, const std::string& where) {
  if (v.is_exact_zero()) throw DegenerateConfiguration("chart value vanishes at " + where);
  if (v.window_empty())
    throw PrecisionExhausted("chart value not certified at " + where);
}

}  // namespace

AChart a_chart(const FlagConfig& config, const Triangulation& tri) {
  if (tri.n != config.n) throw KindMismatch("triangulation size does not match configuration");
  if (config.n < 3) throw Unsupported("charts need n >= 3");
  AChart chart;
  for (const auto& t : tri.triangles) {
    const AffineFlag& fa = config.flag(t[0]);
    const AffineFlag& fb = config.flag(t[1]);
    const AffineFlag& fc = config.flag(t[2]);
    for (const auto& [i, j, k] : chart_index_triples(config.m)) {
      if (k == 0) {
        const EdgeKey key{{t[0], t[1]}, {i, j}};
        if (!chart.edges.count(key)) {
          LaurentSeries v = f_edge(fa, fb, i, j);
          check_chart_value(v, to_string(key));
          chart.edges.emplace(key, std::move(v));
        }
      } else if (j == 0) {
        const EdgeKey key{{t[0], t[2]}, {i, k}};
        if (!chart.edges.count(key)) {
          LaurentSeries v = f_edge(fa, fc, i, k);
          check_chart_value(v, to_string(key));
          chart.edges.emplace(key, std::move(v));
        }
      } else if (i == 0) {
        const EdgeKey key{{t[1], t[2]}, {j, k}};
        if (!chart.edges.count(key)) {
          LaurentSeries v = f_edge(fb, fc, j, k);
          check_chart_value(v, to_string(key));
          chart.edges.emplace(key, std::move(v));
        }
      } else {
        const FaceKey key{t, {i, j, k}};
        LaurentSeries v = f_ijk(fa, fb, fc, i, j, k);
        check_chart_value(v, to_string(key));
        chart.faces.emplace(key, std::move(v));
      }
    }
  }
  return chart;
}

bool is_positive_chart(const AChart& chart) {
  for (const auto& [k, v] : chart.edges)
    if (!v.is_positive()) return false;
  for (const auto& [k, v] : chart.faces)
    if (!v.is_positive()) return false;
  return true;
}

AffineFlag torus_act(const AffineFlag& flag, const Coweight& lambda) {
  const int m = flag.columns.rows();
  if (lambda.size() != m) throw KindMismatch("coweight length does not match rank");
  AffineFlag out = flag;
  long long total = 0;
  for (int c = 0; c < m; ++c) {
    out.columns.scale_col(c, LaurentSeries::t_power(-lambda[c]));
    total += lambda[c];
  }
  out.unimodular = flag.unimodular && total == 0;
  return out;
}

FlagConfig torus_act(const FlagConfig& config, const std::vector<Coweight>& lambdas) {
  if (static_cast<int>(lambdas.size()) != config.n)
    throw KindMismatch("need one coweight per vertex");
  FlagConfig out = config;
  for (int v = 1; v <= config.n; ++v)
    out.flag(v) = torus_act(config.flag(v), lambdas[static_cast<std::size_t>(v - 1)]);
  return out;
}

PositiveAChart certify_chart(const AChart& chart) {
  PositiveAChart out;
  for (const auto& [k, v] : chart.edges) out.edges.emplace(k, certify_positive(v));
  for (const auto& [k, v] : chart.faces) out.faces.emplace(k, certify_positive(v));
  return out;
}

namespace {

const LaurentSeries& chart_edge(const PositiveAChart& values, int a, int b, int i, int j) {
  const EdgeKey key{{a, b}, {i, j}};
  auto it = values.edges.find(key);
  if (it == values.edges.end()) throw ParseError("missing chart value " + to_string(key));
  return it->second.series;
}

const LaurentSeries& chart_face(const PositiveAChart& values, std::array<int, 3> tri,
                                std::array<int, 3> ijk) {
  const FaceKey key{tri, ijk};
  auto it = values.faces.find(key);
  if (it == values.faces.end()) throw ParseError("missing chart value " + to_string(key));
  return it->second.series;
}

AffineFlag flag_from_columns(std::vector<std::vector<LaurentSeries>> cols) {
  const int m = static_cast<int>(cols.size());
  AffineFlag f;
  f.columns = SeriesMatrix(m, m);
  for (int c = 0; c < m; ++c) f.columns.set_col(c, cols[static_cast<std::size_t>(c)]);
  return f;
}

FlagConfig reconstruct_m2(int n, const PositiveAChart& values) {
  const LaurentSeries one = LaurentSeries::from_int(1);
  const LaurentSeries zero;
  std::vector<LaurentSeries> a(static_cast<std::size_t>(n + 1));
  std::vector<LaurentSeries> b(static_cast<std::size_t>(n + 1));
  a[1] = one;
  b[1] = zero;
  a[2] = zero;
  b[2] = chart_edge(values, 1, 2, 1, 1);
  for (int k = 3; k <= n; ++k) {
    const LaurentSeries& f1k = chart_edge(values, 1, k, 1, 1);
    const LaurentSeries& fprev = chart_edge(values, k - 1, k, 1, 1);
    b[static_cast<std::size_t>(k)] = f1k;
    a[static_cast<std::size_t>(k)] =
        (a[static_cast<std::size_t>(k - 1)] * f1k - fprev) / b[static_cast<std::size_t>(k - 1)];
  }
  FlagConfig config;
  config.m = 2;
  config.n = n;
  for (int k = 1; k <= n; ++k) {
    const LaurentSeries& ak = a[static_cast<std::size_t>(k)];
    const LaurentSeries& bk = b[static_cast<std::size_t>(k)];
    std::vector<LaurentSeries> second(2);
    if (ak.is_certified_nonzero()) {
      second[0] = zero;
      second[1] = one / ak;
    } else if (bk.is_certified_nonzero()) {
      second[0] = -(one / bk);
      second[1] = zero;
    } else {
      throw DegenerateSystem("reconstructed decoration vanished at vertex " + std::to_string(k));
    }
    config.flags.push_back(flag_from_columns({{ak, bk}, second}));
  }
  return config;
}

// Cofactor row of u |-> det(c1, c2, u) as a length-3 coefficient vector.
std::vector<LaurentSeries> det_coefficients(const std::vector<LaurentSeries>& c1,
                                            const std::vector<LaurentSeries>& c2) {
  std::vector<LaurentSeries> coef(3);
  coef[0] = c1[1] * c2[2] - c1[2] * c2[1];
  coef[1] = -(c1[0] * c2[2] - c1[2] * c2[0]);
  coef[2] = c1[0] * c2[1] - c1[1] * c2[0];
  return coef;
}

// Solves a square system assembled from coefficient rows by Cramer's rule.
std::vector<LaurentSeries> solve_square(const std::vector<std::vector<LaurentSeries>>& rows,
                                        const std::vector<LaurentSeries>& rhs) {
  const int n = static_cast<int>(rows.size());
  SeriesMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  const LaurentSeries d = det(m);
  if (d.is_exact_zero()) throw DegenerateSystem("singular solve in reconstruction");
  if (d.window_empty()) throw PrecisionExhausted("solve pivot not certified in reconstruction");
  std::vector<LaurentSeries> x(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    SeriesMatrix mc = m;
    for (int r = 0; r < n; ++r) mc.at(r, c) = rhs[static_cast<std::size_t>(r)];
    x[static_cast<std::size_t>(c)] = det(mc) / d;
  }
  return x;
}

FlagConfig reconstruct_m3(int n, const PositiveAChart& values) {
  const LaurentSeries one = LaurentSeries::from_int(1);
  const LaurentSeries zero;
  FlagConfig config;
  config.m = 3;
  config.n = n;

  AffineFlag f1;
  f1.columns = SeriesMatrix::identity(3);
  config.flags.push_back(f1);

  {
    const LaurentSeries& f21 = chart_edge(values, 1, 2, 2, 1);
    const LaurentSeries& f12 = chart_edge(values, 1, 2, 1, 2);
    std::vector<LaurentSeries> w1{zero, zero, f21};
    std::vector<LaurentSeries> w2{zero, -(f12 / f21), zero};
    std::vector<LaurentSeries> w3{one / f12, zero, zero};
    config.flags.push_back(flag_from_columns({w1, w2, w3}));
  }

  const std::vector<LaurentSeries> e1{one, zero, zero};
  const std::vector<LaurentSeries> e2{zero, one, zero};

  for (int k = 3; k <= n; ++k) {
    const auto& prev = config.flag(k - 1).columns;
    const std::vector<LaurentSeries> w1 = prev.col(0);
    const std::vector<LaurentSeries> w2 = prev.col(1);

    // u1 from the three conditions linear in the first column.
    std::vector<std::vector<LaurentSeries>> rows{det_coefficients(e1, e2),
                                                 det_coefficients(w1, w2),
                                                 det_coefficients(e1, w1)};
    std::vector<LaurentSeries> rhs{chart_edge(values, 1, k, 2, 1),
                                   chart_edge(values, k - 1, k, 2, 1),
                                   chart_face(values, {1, k - 1, k}, {1, 1, 1})};
    std::vector<LaurentSeries> u1 = solve_square(rows, rhs);

    // u2 from the two remaining conditions plus a vanishing-coordinate gauge.
    std::vector<LaurentSeries> u2;
    for (int g = 0; g < 3; ++g) {
      std::vector<std::vector<LaurentSeries>> rows2{det_coefficients(e1, u1),
                                                    det_coefficients(w1, u1)};
      std::vector<LaurentSeries> gauge(3);
      gauge[static_cast<std::size_t>(g)] = one;
      rows2.push_back(gauge);
      std::vector<LaurentSeries> rhs2{chart_edge(values, 1, k, 1, 2),
                                      chart_edge(values, k - 1, k, 1, 2), zero};
      try {
        u2 = solve_square(rows2, rhs2);
        break;
      } catch (const DegenerateSystem&) {
        if (g == 2) throw;
      }
    }

    // u3 from det(u1, u2, u3) = 1, zeroing two coordinates.
    const std::vector<LaurentSeries> cof = det_coefficients(u1, u2);
    std::vector<LaurentSeries> u3{zero, zero, zero};
    int g = 0;
    while (g < 3 && !cof[static_cast<std::size_t>(g)].is_certified_nonzero()) ++g;
    if (g == 3) throw DegenerateSystem("reconstructed flag is singular at vertex " + std::to_string(k));
    u3[static_cast<std::size_t>(g)] = one / cof[static_cast<std::size_t>(g)];

    config.flags.push_back(flag_from_columns({u1, u2, u3}));
  }
  return config;
}

void audit_reconstruction(const FlagConfig& config, int n, const PositiveAChart& values) {
  const AChart chart = a_chart(config, fan_triangulation(n));
  for (const auto& [key, witness] : values.edges) {
    auto it = chart.edges.find(key);
    if (it == chart.edges.end() || !agrees(it->second, witness.series))
      throw DegenerateSystem("reconstruction did not reproduce " + to_string(key));
  }
  for (const auto& [key, witness] : values.faces) {
    auto it = chart.faces.find(key);
    if (it == chart.faces.end() || !agrees(it->second, witness.series))
      throw DegenerateSystem("reconstruction did not reproduce " + to_string(key));
  }
}

}  // namespace

FlagConfig reconstruct_from_coords(int m, int n, const PositiveAChart& values) {
  if (n < 3) throw Unsupported("reconstruction needs n >= 3");
  FlagConfig config;
  if (m == 2) {
    config = reconstruct_m2(n, values);
  } else if (m == 3) {
    config = reconstruct_m3(n, values);
  } else {
    throw Unsupported("reconstruction is implemented for m = 2 and m = 3");
  }
  audit_reconstruction(config, n, values);
  return config;
}

namespace {

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

FlagConfig generate_vandermonde(int m, int n, std::uint64_t seed) {
  if (m > 4) throw Unsupported("Vandermonde recipe is implemented for m <= 4");
  Rng rng(seed);
  std::vector<Rational> xs(static_cast<std::size_t>(n));
  xs[0] = 0;
  long long gap = 1;
  for (int i = 1; i < n; ++i) {
    if (seed == 0) {
      xs[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i - 1)] + gap;
      gap *= 2;
    } else {
      xs[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i - 1)] + rng.uniform(1, 9);
    }
  }
  FlagConfig config;
  config.m = m;
  config.n = n;
  for (int v = 0; v < n; ++v) {
    AffineFlag flag;
    flag.columns = SeriesMatrix(m, m);
    // Osculating flag of the moment curve at x_v: column k holds the
    // (k-1)-st scaled derivative of (1, x, x^2, ...).
    for (int c = 0; c < m; ++c) {
      for (int r = 0; r < m; ++r) {
        if (r < c) continue;
        Rational value = binomial(r, c);
        Rational power(1);
        for (int p = 0; p < r - c; ++p) power *= xs[static_cast<std::size_t>(v)];
        flag.columns.at(r, c) = LaurentSeries::from_rational(value * power);
      }
    }
    config.flags.push_back(std::move(flag));
  }
  return config;
}

FlagConfig generate_reconstructed(int m, int n, std::uint64_t seed) {
  if (m > 3) throw Unsupported("reconstruction recipe is implemented for m <= 3");
  Rng rng(seed);
  const Triangulation fan = fan_triangulation(n);
  PositiveAChart values;
  auto monomial = [&rng]() {
    return certify_positive(
        LaurentSeries::monomial(rng.positive_rational(9), -rng.uniform(-3, 3)));
  };
  for (const auto& t : fan.triangles) {
    for (const auto& [i, j, k] : chart_index_triples(m)) {
      if (k == 0) {
        values.edges.emplace(EdgeKey{{t[0], t[1]}, {i, j}}, monomial());
      } else if (j == 0) {
        values.edges.emplace(EdgeKey{{t[0], t[2]}, {i, k}}, monomial());
      } else if (i == 0) {
        values.edges.emplace(EdgeKey{{t[1], t[2]}, {j, k}}, monomial());
      } else {
        values.faces.emplace(FaceKey{t, {i, j, k}}, monomial());
      }
    }
  }
  return reconstruct_from_coords(m, n, values);
}

}  // namespace

FlagConfig generate_positive(int m, int n, std::uint64_t seed,
                             const std::vector<Coweight>* valuation_targets, GenRecipe recipe) {
  if (n < 3) throw Unsupported("configurations need n >= 3");
  FlagConfig config = (recipe == GenRecipe::Vandermonde) ? generate_vandermonde(m, n, seed)
                                                         : generate_reconstructed(m, n, seed);
  if (valuation_targets) config = torus_act(config, *valuation_targets);
  if (!is_positive_chart(a_chart(config, fan_triangulation(n))))
    throw DegenerateConfiguration("generator produced a non-positive chart");
  return config;
}

}  // namespace lamina
