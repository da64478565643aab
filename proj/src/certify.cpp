#include "dcc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dcc/gorny.hpp"

namespace dcc {

GapSequence::GapSequence(std::vector<long> orders) : d_(std::move(orders)) {
  if (d_.empty()) throw InvalidArgument("gap sequence is empty");
  if (d_.front() < 1) throw InvalidArgument("gap sequence orders must be >= 1");
  for (std::size_t n = 1; n < d_.size(); ++n) {
    if (d_[n] <= d_[n - 1]) throw InvalidArgument("gap sequence must be strictly increasing");
  }
}

double gap_ratio(const GapSequence& d) {
  if (d.size() < 2) throw InvalidArgument("gap_ratio needs at least two orders");
  double best = 0.0;
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    best = std::max(best, static_cast<double>(d[n + 1]) / static_cast<double>(d[n]));
  }
  return best;
}

namespace {

void check_shapes(const LogSequence& M, const GapSequence& d, const SparseBounds& F) {
  if (d.back() > M.n_max()) {
    throw InvalidArgument("order " + std::to_string(d.back()) + " exceeds the weight prefix (n_max " +
                          std::to_string(M.n_max()) + ")");
  }
  if (F.entries.size() != d.size()) {
    throw InvalidArgument("sparse bounds must list exactly one entry per anchor order");
  }
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (F.entries[n].first != d[n]) {
      throw InvalidArgument("sparse bound orders do not match the gap sequence at position " +
                            std::to_string(n));
    }
    if (!std::isfinite(F.entries[n].second)) {
      throw InvalidArgument("non-finite bound at order " + std::to_string(d[n]));
    }
  }
}

}  // namespace

ConditionReport check_hypotheses(const LogSequence& M, const GapSequence& d,
                                 const SparseBounds& F, double m0) {
  check_shapes(M, d, F);

  if (auto rep = check_log_convex(M); !rep.holds) return rep;
  if (auto rep = check_condition_A(M, m0); !rep.holds) return rep;

  ConditionReport rep{.condition = "(B)"};
  const double c = fit_analytic_constant(M);
  rep.margin = std::log(c);
  if (!(c > 0.0)) {
    rep.holds = false;
    return rep;
  }

  rep.condition = "(C)";
  rep.margin = kPosInf;
  for (const auto& [order, log_F] : F.entries) {
    const double slack = M[static_cast<int>(order)] - log_F;
    rep.margin = std::min(rep.margin, slack);
    if (slack < -kCompareTolerance) {
      rep.holds = false;
      rep.first_violation = std::vector<long>{order};
      return rep;
    }
  }
  rep.condition = "hypotheses";
  return rep;
}

double log_c1(long c0, double c, double length, double log_M_c0) {
  if (c0 < 1) throw InvalidArgument("log_c1: c0 must be >= 1");
  if (!(c > 0.0) || !(length > 0.0)) throw InvalidArgument("log_c1: need c > 0 and length > 0");
  const double k = static_cast<double>(c0);
  return std::log(2.0) + (k - 1.0) +
         std::log(2.0 * (k - 1.0) / (c * length) + std::exp(log_M_c0 / k));
}

double intermediate_envelope(const LogSequence& M, long dn, long dn1, long ell, double log_F_dn,
                             double log_F_dn1, double length, std::optional<double> c0) {
  const InterpolationSplit split = interpolation_split(dn, dn1, ell);
  if (!(length > 0.0)) throw InvalidArgument("intermediate_envelope: length must be > 0");
  if (dn1 > M.n_max()) throw InvalidArgument("intermediate_envelope: order beyond weight prefix");

  const double local = static_cast<double>(dn1) / static_cast<double>(dn);
  const double gap = c0.value_or(std::max(2.0, local));
  if (gap < local || gap < 2.0) {
    throw InvalidArgument("intermediate_envelope: c0 must be >= max(2, dn1/dn)");
  }

  const double at_dn = std::min(log_F_dn, M[static_cast<int>(dn)]);
  const double at_dn1 = std::min(log_F_dn1, M[static_cast<int>(dn1)]);
  const double l = static_cast<double>(ell);
  const double lead = std::log(2.0) + l * (gap - 1.0);

  const double factorial_branch =
      lead + static_cast<double>(ell - dn) * std::log(2.0 * dn * (gap - 1.0) / length) + at_dn;
  const double holder_branch = lead + split.inv_p * at_dn + split.inv_q * at_dn1;
  return std::max(factorial_branch, holder_branch);
}

Certificate certify_membership(const LogSequence& M, const GapSequence& d, const SparseBounds& F,
                               double length, double m0,
                               std::span<const double> small_order_log_bounds) {
  if (!(length > 0.0)) throw InvalidArgument("certify_membership: length must be > 0");
  if (d.size() < 2) throw InvalidArgument("certify_membership: need at least two anchor orders");
  if (!small_order_log_bounds.empty() &&
      small_order_log_bounds.size() != static_cast<std::size_t>(d.front())) {
    throw InvalidArgument("small-order bounds must cover exactly orders 0 .. d[0]-1");
  }

  ConditionReport hyp = check_hypotheses(M, d, F, m0);
  if (!hyp.holds) throw HypothesisFailure(std::move(hyp));

  Certificate cert;
  cert.length = length;
  cert.m0 = m0;
  long c0 = static_cast<long>(std::ceil(m0 + 1.0));
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    c0 = std::max(c0, (d[n + 1] + d[n] - 1) / d[n]);
  }
  cert.c0 = c0;
  if (c0 > M.n_max()) {
    throw RangeError("c0 = " + std::to_string(c0) + " exceeds the weight prefix");
  }
  cert.c = fit_analytic_constant(M);
  cert.log_C1 = log_c1(c0, cert.c, length, M[static_cast<int>(c0)]);

  const auto simplified = [&](long ell) {
    return static_cast<double>(ell) * cert.log_C1 + M[static_cast<int>(ell)];
  };

  cert.full_coverage = !small_order_log_bounds.empty() || d.front() == 0;
  for (std::size_t ell = 0; ell < small_order_log_bounds.size(); ++ell) {
    cert.envelope.push_back({static_cast<long>(ell), small_order_log_bounds[ell], std::nullopt});
  }
  for (std::size_t n = 0; n < d.size(); ++n) {
    cert.envelope.push_back({d[n], F.entries[n].second, simplified(d[n])});
    if (n + 1 == d.size()) break;
    for (long ell = d[n] + 1; ell < d[n + 1]; ++ell) {
      const double bound =
          intermediate_envelope(M, d[n], d[n + 1], ell, F.entries[n].second,
                                F.entries[n + 1].second, length, static_cast<double>(c0));
      cert.envelope.push_back({ell, bound, simplified(ell)});
    }
  }

  cert.c1_dominates = true;
  cert.log_K = cert.log_C1;
  for (const auto& e : cert.envelope) {
    const double excess = e.log_bound - M[static_cast<int>(e.order)];
    cert.log_K = std::max(cert.log_K, excess / static_cast<double>(e.order + 1));
    if (e.log_simplified && e.log_bound > *e.log_simplified + kCompareTolerance) {
      cert.c1_dominates = false;
    }
  }
  return cert;
}

}  // namespace dcc
