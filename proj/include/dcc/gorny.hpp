#pragma once

// Cartan-Gorny bound on intermediate derivatives and an empirical harness
// that checks it against functions with closed-form derivatives.

#include <string>
#include <string_view>
#include <vector>

namespace dcc {

/// Inputs to the Cartan-Gorny bound. log_G0 may be -inf (g identically 0);
/// log_Gm may be -inf (g^{(m)} vanishes).
struct GornyQuery {
  double log_G0 = 0.0;
  double log_Gm = 0.0;
  int m = 2;
  int k = 1;
  double length = 1.0;
};

/// ln of 2 (e^2 m/k)^k G0^{1-k/m} max{m! G0 (2/length)^m, Gm}^{k/m}.
double gorny_bound(const GornyQuery& q);

/// Hoelder weights splitting an intermediate order ell between two anchors:
/// inv_p + inv_q = 1 and dn*inv_p + dn1*inv_q = ell.
struct InterpolationSplit {
  double inv_p = 0.0;
  double inv_q = 0.0;
  long dn = 0;
  long dn1 = 0;
  long ell = 0;
};

InterpolationSplit interpolation_split(long dn, long dn1, long ell);

// Built-in corpus of functions with every derivative in closed form.

std::vector<std::string> corpus_ids();

/// n-th derivative of a corpus function at x.
double corpus_derivative(std::string_view fn_id, int n, double x);

/// ln of the sampled sup of |f^{(n)}| on [a, b]: uniform grid, then one
/// refinement pass around the grid argmax. Never exceeds the true sup.
double sampled_log_sup(std::string_view fn_id, int n, double a, double b, int grid = 10000);

struct GornyCheck {
  double lhs = 0.0;  ///< ln G_k (sampled)
  double rhs = 0.0;  ///< gorny_bound with sampled G_0, G_m
  bool holds = false;
};

GornyCheck verify_gorny_empirical(std::string_view fn_id, double a, double b, int m, int k,
                                  int grid = 10000);

}  // namespace dcc
