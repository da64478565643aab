#include "dcc/gorny.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "dcc/common.hpp"

namespace dcc {

double gorny_bound(const GornyQuery& q) {
  if (q.m < 2 || q.k < 1 || q.k > q.m - 1) {
    throw InvalidArgument("gorny_bound: need m >= 2 and 1 <= k <= m-1");
  }
  if (!(q.length > 0.0)) throw InvalidArgument("gorny_bound: interval length must be > 0");
  if (std::isnan(q.log_G0) || std::isnan(q.log_Gm) || q.log_G0 == kPosInf ||
      q.log_Gm == kPosInf) {
    throw InvalidArgument("gorny_bound: log sup-norms must be finite or -inf");
  }
  if (q.log_G0 == kNegInf) return kNegInf;

  const double m = q.m;
  const double k = q.k;
  const double ratio = k / m;
  const double scaled_G0 = log_factorial(q.m) + q.log_G0 + m * std::log(2.0 / q.length);
  const double top = std::max(scaled_G0, q.log_Gm);
  return std::log(2.0) + k * (2.0 + std::log(m) - std::log(k)) + (1.0 - ratio) * q.log_G0 +
         ratio * top;
}

InterpolationSplit interpolation_split(long dn, long dn1, long ell) {
  if (!(dn < ell && ell < dn1)) {
    throw InvalidArgument("interpolation_split: need dn < ell < dn1 (got " + std::to_string(dn) +
                          ", " + std::to_string(ell) + ", " + std::to_string(dn1) + ")");
  }
  const double width = static_cast<double>(dn1 - dn);
  return {.inv_p = static_cast<double>(dn1 - ell) / width,
          .inv_q = static_cast<double>(ell - dn) / width,
          .dn = dn,
          .dn1 = dn1,
          .ell = ell};
}

namespace {

// Fixed polynomial 2x^5 - 3x^3 + x^2 - 4x + 1, coefficients low to high.
constexpr std::array<double, 6> kPoly{1.0, -4.0, 1.0, -3.0, 0.0, 2.0};

double poly_derivative(int n, double x) {
  double acc = 0.0;
  for (int p = static_cast<int>(kPoly.size()) - 1; p >= n; --p) {
    double c = kPoly[static_cast<std::size_t>(p)];
    for (int t = 0; t < n; ++t) c *= p - t;
    acc = acc * x + c;
  }
  return acc;
}

// d^n/dx^n 1/(1+x^2) = (-1)^n n! Im[(x - i)^{-(n+1)}].
double runge_derivative(int n, double x) {
  const std::complex<double> w = std::pow(std::complex<double>(x, -1.0), -(n + 1));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_factorial(n)) * w.imag();
}

double shifted_sin(int n, double x) {
  switch (n % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

struct CorpusEntry {
  const char* id;
  double (*eval)(int, double);
};

constexpr std::array<CorpusEntry, 7> kCorpus{{
    {"sine", [](int n, double x) { return shifted_sin(n, x); }},
    {"cosine", [](int n, double x) { return shifted_sin(n + 1, x); }},
    {"exp", [](int, double x) { return std::exp(x); }},
    {"exp_neg2", [](int n, double x) { return std::pow(-2.0, n) * std::exp(-2.0 * x); }},
    {"polynomial", poly_derivative},
    {"constant", [](int n, double) { return n == 0 ? 1.0 : 0.0; }},
    {"runge", runge_derivative},
}};

const CorpusEntry& lookup(std::string_view id) {
  for (const auto& e : kCorpus) {
    if (id == e.id) return e;
  }
  throw InvalidArgument("unknown corpus function '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::string> corpus_ids() {
  std::vector<std::string> ids;
  for (const auto& e : kCorpus) ids.emplace_back(e.id);
  return ids;
}

double corpus_derivative(std::string_view fn_id, int n, double x) {
  if (n < 0) throw InvalidArgument("derivative order must be >= 0");
  return lookup(fn_id).eval(n, x);
}

double sampled_log_sup(std::string_view fn_id, int n, double a, double b, int grid) {
  if (!(b > a)) throw InvalidArgument("sampled_log_sup: need a < b");
  if (grid < 2) throw InvalidArgument("sampled_log_sup: grid must have >= 2 points");
  const auto& fn = lookup(fn_id);
  const double h = (b - a) / (grid - 1);
  double best = 0.0;
  int arg = 0;
  for (int t = 0; t < grid; ++t) {
    const double v = std::abs(fn.eval(n, a + t * h));
    if (v > best) {
      best = v;
      arg = t;
    }
  }
  // Refine inside the two cells adjacent to the grid argmax.
  constexpr int kRefine = 200;
  const double lo = std::max(a, a + (arg - 1) * h);
  const double hi = std::min(b, a + (arg + 1) * h);
  for (int t = 0; t <= kRefine; ++t) {
    best = std::max(best, std::abs(fn.eval(n, lo + (hi - lo) * t / kRefine)));
  }
  return best > 0.0 ? std::log(best) : kNegInf;
}

GornyCheck verify_gorny_empirical(std::string_view fn_id, double a, double b, int m, int k,
                                  int grid) {
  GornyQuery q{.log_G0 = sampled_log_sup(fn_id, 0, a, b, grid),
               .log_Gm = sampled_log_sup(fn_id, m, a, b, grid),
               .m = m,
               .k = k,
               .length = b - a};
  GornyCheck out;
  out.rhs = gorny_bound(q);
  out.lhs = sampled_log_sup(fn_id, k, a, b, grid);
  out.holds = out.lhs == kNegInf || out.lhs <= out.rhs + kCompareTolerance;
  return out;
}

}  // namespace dcc
