#include "graphon/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace graphon {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt_pair(double x, double y) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// ScalarFunc
// ---------------------------------------------------------------------------

ScalarFunc ScalarFunc::poly(std::vector<double> c) {
  ScalarFunc f;
  f.kind = Kind::poly;
  f.coeffs = std::move(c);
  if (f.coeffs.empty()) f.coeffs.push_back(0.0);
  return f;
}

ScalarFunc ScalarFunc::sine(double amplitude, int frequency) {
  if (frequency < 1) throw DomainError("sine frequency must be >= 1");
  ScalarFunc f;
  f.kind = Kind::sine;
  f.amplitude = amplitude;
  f.frequency = frequency;
  return f;
}

double ScalarFunc::evaluate(double x) const {
  if (kind == Kind::poly) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }
  return amplitude * std::sin(frequency * kPi * x);
}

namespace {

// Exact integrals over [0, 1] used by the closed-form product rules.
// int_0^1 x^k sin(c x) dx for k = 0, 1, 2, ... via the recurrence
//   int x^k sin(cx) = -x^k cos(cx)/c + (k/c) int x^{k-1} cos(cx)
//   int x^k cos(cx) =  x^k sin(cx)/c - (k/c) int x^{k-1} sin(cx)
double integral_xk_sin(int k, double c);

double integral_xk_cos(int k, double c) {
  if (c == 0.0) return 1.0 / (k + 1);
  if (k == 0) return std::sin(c) / c;
  return std::sin(c) / c - (k / c) * integral_xk_sin(k - 1, c);
}

double integral_xk_sin(int k, double c) {
  if (c == 0.0) return 0.0;
  if (k == 0) return (1.0 - std::cos(c)) / c;
  return -std::cos(c) / c + (k / c) * integral_xk_cos(k - 1, c);
}

}  // namespace

double integrate_one(const ScalarFunc& f) {
  if (f.kind == ScalarFunc::Kind::poly) {
    double acc = 0.0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
      acc += f.coeffs[k] / static_cast<double>(k + 1);
    }
    return acc;
  }
  // int_0^1 a sin(n pi x) dx = a (1 - cos(n pi)) / (n pi) = a (1 - (-1)^n)/(n pi)
  const double npi = f.frequency * kPi;
  const double parity = (f.frequency % 2 == 0) ? 1.0 : -1.0;
  return f.amplitude * (1.0 - parity) / npi;
}

double integrate_product(const ScalarFunc& f, const ScalarFunc& g) {
  using K = ScalarFunc::Kind;
  if (f.kind == K::poly && g.kind == K::poly) {
    // Convolve coefficients, integrate exactly.
    std::vector<double> prod(f.coeffs.size() + g.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
        prod[i + j] += f.coeffs[i] * g.coeffs[j];
      }
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      acc += prod[k] / static_cast<double>(k + 1);
    }
    return acc;
  }
  if (f.kind == K::sine && g.kind == K::sine) {
    // Orthogonality: int sin(n pi x) sin(m pi x) = delta_nm / 2 on [0, 1].
    if (f.frequency == g.frequency) return 0.5 * f.amplitude * g.amplitude;
    return 0.0;
  }
  const ScalarFunc& p = (f.kind == K::poly) ? f : g;
  const ScalarFunc& s = (f.kind == K::poly) ? g : f;
  const double c = s.frequency * kPi;
  double acc = 0.0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] != 0.0) {
      acc += p.coeffs[k] * integral_xk_sin(static_cast<int>(k), c);
    }
  }
  return s.amplitude * acc;
}

// ---------------------------------------------------------------------------
// KernelExpr
// ---------------------------------------------------------------------------

double KernelExpr::evaluate(double x, double y) const {
  switch (op) {
    case Op::constant:
      return value;
    case Op::x:
      return x;
    case Op::y:
      return y;
    case Op::x2:
      return x * x;
    case Op::y2:
      return y * y;
    case Op::add: {
      double acc = 0.0;
      for (const auto& a : args) acc += a.evaluate(x, y);
      return acc;
    }
    case Op::sub:
      return args[0].evaluate(x, y) - args[1].evaluate(x, y);
    case Op::mul: {
      double acc = 1.0;
      for (const auto& a : args) acc *= a.evaluate(x, y);
      return acc;
    }
    case Op::min_: {
      double acc = args[0].evaluate(x, y);
      for (std::size_t i = 1; i < args.size(); ++i) {
        acc = std::min(acc, args[i].evaluate(x, y));
      }
      return acc;
    }
    case Op::max_: {
      double acc = args[0].evaluate(x, y);
      for (std::size_t i = 1; i < args.size(); ++i) {
        acc = std::max(acc, args[i].evaluate(x, y));
      }
      return acc;
    }
  }
  throw NumericError("kernel expression: unreachable op");
}

// ---------------------------------------------------------------------------
// Block lookup and evaluation
// ---------------------------------------------------------------------------

int sbm_block_of(const Sbm& s, double x) {
  const auto& b = s.boundaries;
  // First boundary strictly greater than x; block index is one less.
  auto it = std::upper_bound(b.begin(), b.end(), x);
  int idx = static_cast<int>(it - b.begin()) - 1;
  // x == 1 lands past the last block; the final block is closed.
  return std::clamp(idx, 0, s.blocks() - 1);
}

int sbm_block_left_limit(const Sbm& s, double x) {
  const auto& b = s.boundaries;
  auto it = std::lower_bound(b.begin(), b.end(), x);
  if (it != b.end() && *it == x) {
    // Exact boundary hit: take the block that ends here (left limit),
    // except at 0 where only the first block exists.
    int idx = static_cast<int>(it - b.begin());
    return std::clamp(idx - 1, 0, s.blocks() - 1);
  }
  return sbm_block_of(s, x);
}

double evaluate(const Graphon& W, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw DomainError("evaluate: arguments must lie in [0,1]^2, got " +
                      fmt_pair(x, y));
  }
  if (W.is_sbm()) {
    const Sbm& s = W.sbm();
    return s.P(sbm_block_of(s, x), sbm_block_of(s, y));
  }
  if (W.is_finite_rank()) {
    const FiniteRank& fr = W.finite_rank();
    double acc = 0.0;
    for (int i = 0; i < fr.rank(); ++i) {
      acc += fr.g[i].evaluate(x) * fr.h[i].evaluate(y);
    }
    return acc;
  }
  return W.analytic().w.evaluate(x, y);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport validate(const Graphon& W, int grid) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& why) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_violation = why;
    }
  };

  // Structural checks per variant.
  if (W.is_sbm()) {
    const Sbm& s = W.sbm();
    const auto& b = s.boundaries;
    if (b.size() < 2 || b.front() != 0.0 || b.back() != 1.0) {
      fail("boundaries must start at 0 and end at 1");
      return rep;
    }
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (!(b[i] > b[i - 1])) {
        std::ostringstream os;
        os << "boundaries not strictly increasing at index " << i;
        fail(os.str());
        return rep;
      }
    }
    const int m = s.blocks();
    if (s.P.rows() != m || s.P.cols() != m) {
      fail("P dimensions do not match the block count");
      return rep;
    }
    for (int i = 0; i < m && rep.pass; ++i) {
      for (int j = 0; j < m; ++j) {
        if (s.P(i, j) != s.P(j, i)) {
          std::ostringstream os;
          os << "P asymmetric at (" << i + 1 << "," << j + 1 << ")";
          fail(os.str());
          break;
        }
        if (s.P(i, j) < 0.0 || s.P(i, j) > 1.0) {
          std::ostringstream os;
          os << "P entry out of [0,1] at (" << i + 1 << "," << j + 1 << ")";
          fail(os.str());
          break;
        }
      }
    }
    if (!rep.pass) return rep;
  }
  if (W.is_finite_rank()) {
    const FiniteRank& fr = W.finite_rank();
    if (fr.g.empty() || fr.g.size() != fr.h.size()) {
      fail("finite-rank graphon requires matching nonempty g and h");
      return rep;
    }
  }

  // Metadata checks.
  const auto& meta = W.metadata;
  if (meta.lipschitz_L < 0) fail("lipschitz_L must be >= 0");
  for (std::size_t i = 0; i < meta.breakpoints.size() && rep.pass; ++i) {
    const double a = meta.breakpoints[i];
    if (!(a > 0.0 && a < 1.0)) fail("breakpoints must be strictly interior");
    if (i > 0 && !(a > meta.breakpoints[i - 1])) fail("breakpoints must be sorted");
  }
  if (meta.eta < 0) fail("eta must be >= 0");
  if (!rep.pass) return rep;

  // Grid checks: symmetry and range.  SBM and finite-rank graphons built
  // from symmetric data must be exactly symmetric; analytic kernels get a
  // 1e-12 allowance.
  grid = std::max(grid, 2);
  const double sym_tol = W.is_analytic() ? 1e-12 : 0.0;
  for (int i = 0; i < grid && rep.pass; ++i) {
    const double x = static_cast<double>(i) / (grid - 1);
    for (int j = i; j < grid; ++j) {
      const double y = static_cast<double>(j) / (grid - 1);
      const double wxy = evaluate(W, x, y);
      if (!(wxy >= 0.0 && wxy <= 1.0)) {
        std::ostringstream os;
        os << "range violation: W" << fmt_pair(x, y) << " = " << wxy;
        fail(os.str());
        break;
      }
      const double wyx = evaluate(W, y, x);
      if (std::abs(wxy - wyx) > sym_tol) {
        std::ostringstream os;
        os << "asymmetry at " << fmt_pair(x, y) << ": " << wxy << " vs " << wyx;
        fail(os.str());
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Effective matrices
// ---------------------------------------------------------------------------

namespace {

EffectiveMatrices effective_sbm(const Sbm& s, bool normalized) {
  const int m = s.blocks();
  EffectiveMatrices em;
  Vector lengths(m);
  for (int i = 0; i < m; ++i) {
    lengths[i] = s.boundaries[i + 1] - s.boundaries[i];
  }
  em.Q = lengths.asDiagonal();
  em.E = s.P * em.Q;
  em.g_bar = lengths;
  em.h_bar = em.E.rowwise().sum();  // int h = P * lengths = E * 1
  em.D_E = em.h_bar.asDiagonal();
  if (normalized) {
    // E_nor = E * D_E^dagger: zero-degree blocks contribute zero columns.
    Vector inv(m);
    for (int j = 0; j < m; ++j) {
      inv[j] = (em.h_bar[j] > 0.0) ? 1.0 / em.h_bar[j] : 0.0;
    }
    em.E_nor = em.E * inv.asDiagonal();
    em.h_nor = em.E_nor.rowwise().sum();
  }
  return em;
}

EffectiveMatrices effective_fr(const FiniteRank& fr, const GraphonMetadata& meta,
                               const num::QuadratureSpec& quad, bool normalized) {
  const int m = fr.rank();
  EffectiveMatrices em;
  em.Q.resize(m, m);
  em.E.resize(m, m);
  em.g_bar.resize(m);
  em.h_bar.resize(m);

  auto closed_form = [](const ScalarFunc& a, const ScalarFunc& b) {
    return integrate_product(a, b);
  };
  for (int i = 0; i < m; ++i) {
    em.g_bar[i] = integrate_one(fr.g[i]);
    em.h_bar[i] = integrate_one(fr.h[i]);
    for (int j = 0; j < m; ++j) {
      em.Q(i, j) = closed_form(fr.g[i], fr.g[j]);
      em.E(i, j) = closed_form(fr.h[i], fr.g[j]);
    }
  }

  if (normalized) {
    if (!(meta.eta > 0.0)) {
      throw DomainError(
          "normalized effective matrices require metadata eta > 0 (a positive "
          "lower bound on the degree function)");
    }
    auto degree_at = [&](double y) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        acc += em.g_bar[i] * fr.h[i].evaluate(y);
      }
      return acc;
    };
    auto guard_degree = [&](double y) {
      const double d = degree_at(y);
      if (d < meta.eta * (1.0 - 1e-9)) {
        std::ostringstream os;
        os << "degree function " << d << " at y=" << y
           << " falls below asserted eta=" << meta.eta;
        throw DomainError(os.str(), d);
      }
      return d;
    };
    em.h_nor.resize(m);
    em.E_nor.resize(m, m);
    for (int i = 0; i < m; ++i) {
      em.h_nor[i] = num::integrate(
          [&](double y) { return fr.h[i].evaluate(y) / guard_degree(y); }, 0.0,
          1.0, quad);
      for (int j = 0; j < m; ++j) {
        em.E_nor(i, j) = num::integrate(
            [&](double y) {
              return fr.h[i].evaluate(y) * fr.g[j].evaluate(y) / guard_degree(y);
            },
            0.0, 1.0, quad);
      }
    }
  }
  return em;
}

}  // namespace

EffectiveMatrices effective_matrices(const Graphon& W,
                                     const num::QuadratureSpec& quad,
                                     bool normalized) {
  if (W.is_sbm()) return effective_sbm(W.sbm(), normalized);
  if (W.is_finite_rank()) {
    return effective_fr(W.finite_rank(), W.metadata, quad, normalized);
  }
  throw DomainError(
      "effective_matrices is defined for SBM and finite-rank graphons; "
      "discretize analytic kernels first");
}

// ---------------------------------------------------------------------------
// Discretization
// ---------------------------------------------------------------------------

Graphon discretize_to_sbm(const Graphon& W, int n_blocks) {
  if (n_blocks < 1) throw DomainError("discretize_to_sbm: n_blocks must be >= 1");
  const int n = n_blocks;
  Sbm out;
  out.boundaries.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    out.boundaries[i] = static_cast<double>(i) / n;
  }
  out.P.resize(n, n);

  if (W.is_sbm()) {
    const Sbm& s = W.sbm();
    std::vector<int> blk(n);
    for (int i = 1; i <= n; ++i) {
      blk[i - 1] = sbm_block_left_limit(s, static_cast<double>(i) / n);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.P(i, j) = s.P(blk[i], blk[j]);
      }
    }
  } else {
    std::vector<double> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = static_cast<double>(i) / n;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double v = evaluate(W, u[i], u[j]);
        out.P(i, j) = v;
        out.P(j, i) = v;
      }
    }
  }

  Graphon g;
  g.variant = std::move(out);
  g.metadata.lipschitz_L = 0.0;  // piecewise constant
  g.metadata.eta = W.metadata.eta;
  g.metadata.breakpoints.reserve(n - 1);
  for (int i = 1; i < n; ++i) {
    g.metadata.breakpoints.push_back(static_cast<double>(i) / n);
  }
  g.id = W.id + ":disc" + std::to_string(n);
  return g;
}

// ---------------------------------------------------------------------------
// Degree helpers
// ---------------------------------------------------------------------------

double max_degree(const Graphon& W) {
  if (W.is_sbm()) {
    const EffectiveMatrices em = effective_sbm(W.sbm(), false);
    return em.h_bar.maxCoeff();
  }
  if (W.is_finite_rank()) {
    const FiniteRank& fr = W.finite_rank();
    Vector h_bar(fr.rank());
    for (int i = 0; i < fr.rank(); ++i) h_bar[i] = integrate_one(fr.h[i]);
    double best = 0.0;
    const int samples = 512;
    for (int k = 0; k <= samples; ++k) {
      const double x = static_cast<double>(k) / samples;
      double acc = 0.0;
      for (int i = 0; i < fr.rank(); ++i) acc += fr.g[i].evaluate(x) * h_bar[i];
      best = std::max(best, acc);
    }
    return best;
  }
  double best = 0.0;
  const int samples = 256;
  num::QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  for (int k = 0; k <= samples; ++k) {
    const double x = static_cast<double>(k) / samples;
    double v;
    if (x <= 0.0 || x >= 1.0) {
      v = num::integrate([&](double y) { return evaluate(W, x, y); }, 0.0, 1.0,
                         spec);
    } else {  // split at the potential diagonal kink
      v = num::integrate([&](double y) { return evaluate(W, x, y); }, 0.0, x,
                         spec) +
          num::integrate([&](double y) { return evaluate(W, x, y); }, x, 1.0,
                         spec);
    }
    best = std::max(best, v);
  }
  return best;
}

double min_breakpoint_spacing(const GraphonMetadata& meta) {
  double prev = 0.0;
  double best = 1.0;
  for (double a : meta.breakpoints) {
    best = std::min(best, a - prev);
    prev = a;
  }
  return std::min(best, 1.0 - prev);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

json scalar_func_to_json(const ScalarFunc& f) {
  if (f.kind == ScalarFunc::Kind::poly) {
    return json{{"kind", "poly"}, {"coeffs", f.coeffs}};
  }
  return json{{"kind", "builtin"},
              {"name", "sine"},
              {"scale", f.amplitude},
              {"n", f.frequency}};
}

ScalarFunc scalar_func_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("scalar function: expected object with a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "poly") {
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    if (coeffs.empty()) throw ConfigError("poly: coeffs must be nonempty");
    return ScalarFunc::poly(std::move(coeffs));
  }
  if (kind == "builtin") {
    const std::string name = j.at("name").get<std::string>();
    const double scale = j.value("scale", 1.0);
    if (name == "constant") {
      return ScalarFunc::poly({j.contains("value") ? j.at("value").get<double>()
                                                   : scale});
    }
    if (name == "monomial") {
      const int k = j.at("k").get<int>();
      if (k < 0 || k > 16) throw ConfigError("monomial: k must be in [0, 16]");
      std::vector<double> c(k + 1, 0.0);
      c[k] = scale;
      return ScalarFunc::poly(std::move(c));
    }
    if (name == "sine") {
      return ScalarFunc::sine(scale, j.value("n", 1));
    }
    throw ConfigError("unknown builtin scalar function \"" + name +
                      "\" (expected constant, monomial, or sine)");
  }
  throw ConfigError("scalar function kind must be \"poly\" or \"builtin\"");
}

KernelExpr make_wg_kernel() {
  // min(x, y) * (1 - max(x, y))
  KernelExpr x;
  x.op = KernelExpr::Op::x;
  KernelExpr y;
  y.op = KernelExpr::Op::y;
  KernelExpr one;
  one.op = KernelExpr::Op::constant;
  one.value = 1.0;
  KernelExpr mn;
  mn.op = KernelExpr::Op::min_;
  mn.args = {x, y};
  KernelExpr mx;
  mx.op = KernelExpr::Op::max_;
  mx.args = {x, y};
  KernelExpr sub;
  sub.op = KernelExpr::Op::sub;
  sub.args = {one, mx};
  KernelExpr mul;
  mul.op = KernelExpr::Op::mul;
  mul.args = {mn, sub};
  return mul;
}

namespace {

const char* op_name(KernelExpr::Op op) {
  switch (op) {
    case KernelExpr::Op::constant: return "const";
    case KernelExpr::Op::x: return "x";
    case KernelExpr::Op::y: return "y";
    case KernelExpr::Op::x2: return "x2";
    case KernelExpr::Op::y2: return "y2";
    case KernelExpr::Op::add: return "add";
    case KernelExpr::Op::sub: return "sub";
    case KernelExpr::Op::mul: return "mul";
    case KernelExpr::Op::min_: return "min";
    case KernelExpr::Op::max_: return "max";
  }
  return "?";
}

}  // namespace

json kernel_expr_to_json(const KernelExpr& e) {
  json j{{"op", op_name(e.op)}};
  if (e.op == KernelExpr::Op::constant) {
    j["value"] = e.value;
  }
  if (!e.args.empty()) {
    json args = json::array();
    for (const auto& a : e.args) args.push_back(kernel_expr_to_json(a));
    j["args"] = args;
  }
  return j;
}

KernelExpr kernel_expr_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("kernel expression: expected object");
  if (j.contains("builtin")) {
    const std::string name = j.at("builtin").get<std::string>();
    if (name == "wg") return make_wg_kernel();
    throw ConfigError("unknown builtin kernel \"" + name + "\"");
  }
  const std::string op = j.at("op").get<std::string>();
  KernelExpr e;
  auto parse_args = [&](std::size_t min_n, std::size_t max_n) {
    const auto& arr = j.at("args");
    if (!arr.is_array() || arr.size() < min_n || arr.size() > max_n) {
      throw ConfigError("kernel op \"" + op + "\": wrong number of args");
    }
    for (const auto& a : arr) e.args.push_back(kernel_expr_from_json(a));
  };
  if (op == "const") {
    e.op = KernelExpr::Op::constant;
    e.value = j.at("value").get<double>();
  } else if (op == "x") {
    e.op = KernelExpr::Op::x;
  } else if (op == "y") {
    e.op = KernelExpr::Op::y;
  } else if (op == "x2") {
    e.op = KernelExpr::Op::x2;
  } else if (op == "y2") {
    e.op = KernelExpr::Op::y2;
  } else if (op == "add") {
    e.op = KernelExpr::Op::add;
    parse_args(2, 16);
  } else if (op == "sub") {
    e.op = KernelExpr::Op::sub;
    parse_args(2, 2);
  } else if (op == "mul") {
    e.op = KernelExpr::Op::mul;
    parse_args(2, 16);
  } else if (op == "min") {
    e.op = KernelExpr::Op::min_;
    parse_args(2, 16);
  } else if (op == "max") {
    e.op = KernelExpr::Op::max_;
    parse_args(2, 16);
  } else {
    throw ConfigError("unknown kernel op \"" + op + "\"");
  }
  return e;
}

namespace {

GraphonMetadata metadata_from_json(const json& j) {
  GraphonMetadata meta;
  if (!j.contains("metadata")) return meta;
  const json& m = j.at("metadata");
  meta.lipschitz_L = m.value("lipschitz_L", 0.0);
  meta.eta = m.value("eta", 0.0);
  if (m.contains("breakpoints")) {
    meta.breakpoints = m.at("breakpoints").get<std::vector<double>>();
  }
  return meta;
}

json metadata_to_json(const GraphonMetadata& meta) {
  return json{{"lipschitz_L", meta.lipschitz_L},
              {"breakpoints", meta.breakpoints},
              {"eta", meta.eta}};
}

}  // namespace

Graphon graphon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variant")) {
    throw ConfigError("graphon: expected object with a \"variant\" field");
  }
  Graphon g;
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "sbm") {
    Sbm s;
    s.boundaries = j.at("boundaries").get<std::vector<double>>();
    const auto rows = j.at("P").get<std::vector<std::vector<double>>>();
    const int m = static_cast<int>(rows.size());
    if (m == 0 || static_cast<int>(s.boundaries.size()) != m + 1) {
      throw ConfigError("sbm: need m+1 boundaries for an m x m P matrix");
    }
    s.P.resize(m, m);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(rows[i].size()) != m) {
        throw ConfigError("sbm: P must be square (row " + std::to_string(i) +
                          ")");
      }
      for (int k = 0; k < m; ++k) s.P(i, k) = rows[i][k];
    }
    g.variant = std::move(s);
  } else if (variant == "finite_rank") {
    FiniteRank fr;
    for (const auto& f : j.at("g")) fr.g.push_back(scalar_func_from_json(f));
    for (const auto& f : j.at("h")) fr.h.push_back(scalar_func_from_json(f));
    if (fr.g.empty() || fr.g.size() != fr.h.size()) {
      throw ConfigError("finite_rank: g and h must be nonempty, equal length");
    }
    g.variant = std::move(fr);
  } else if (variant == "analytic") {
    AnalyticKernel ak;
    ak.w = kernel_expr_from_json(j.at("w"));
    g.variant = std::move(ak);
  } else {
    throw ConfigError("unknown graphon variant \"" + variant +
                      "\" (expected sbm, finite_rank, or analytic)");
  }
  g.metadata = metadata_from_json(j);
  g.id = j.value("id", std::string("custom"));
  return g;
}

json graphon_to_json(const Graphon& W) {
  json j;
  j["id"] = W.id;
  j["metadata"] = metadata_to_json(W.metadata);
  if (W.is_sbm()) {
    const Sbm& s = W.sbm();
    j["variant"] = "sbm";
    j["boundaries"] = s.boundaries;
    json rows = json::array();
    for (int i = 0; i < s.blocks(); ++i) {
      json row = json::array();
      for (int k = 0; k < s.blocks(); ++k) row.push_back(s.P(i, k));
      rows.push_back(row);
    }
    j["P"] = rows;
  } else if (W.is_finite_rank()) {
    const FiniteRank& fr = W.finite_rank();
    j["variant"] = "finite_rank";
    json gs = json::array(), hs = json::array();
    for (const auto& f : fr.g) gs.push_back(scalar_func_to_json(f));
    for (const auto& f : fr.h) hs.push_back(scalar_func_to_json(f));
    j["g"] = gs;
    j["h"] = hs;
  } else {
    j["variant"] = "analytic";
    j["w"] = kernel_expr_to_json(W.analytic().w);
  }
  return j;
}

}  // namespace graphon
