#include "npd/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace npd {

namespace {

bool key_less(const JointEntry& a, const JointEntry& b) {
  return a.shell != b.shell ? a.shell < b.shell : a.k < b.k;
}

// s * log2(s / m), with 0 * log 0 = 0.
double kl_term(double s, double m) { return s > 0.0 ? s * std::log2(s / m) : 0.0; }

}  // namespace

SupportError::SupportError(std::size_t shell, std::size_t k)
    : std::domain_error("KL divergence undefined: q has no mass at (l=" +
                        std::to_string(shell) + ", k=" + std::to_string(k) + ")"),
      shell_(shell),
      k_(k) {}

double JointDistribution::total_mass() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.mass;
  return total;
}

double JointDistribution::mass(std::size_t shell, std::size_t k) const {
  const JointEntry probe{shell, k, 0.0};
  auto it = std::lower_bound(entries.begin(), entries.end(), probe, key_less);
  return it != entries.end() && it->shell == shell && it->k == k ? it->mass : 0.0;
}

JointDistribution joint_distribution(const Portrait& p) {
  JointDistribution joint;
  joint.normalizer = p.reachable_pairs();
  const double s = static_cast<double>(joint.normalizer);
  for (std::size_t l = 0; l < p.n_rows(); ++l) {
    auto row = p.row(l);
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      joint.entries.push_back({l, k, static_cast<double>(k * row[k]) / s});
    }
  }
  return joint;
}

double kl_divergence_bits(const JointDistribution& p, const JointDistribution& q) {
  double total = 0.0;
  auto qi = q.entries.begin();
  for (const auto& e : p.entries) {
    while (qi != q.entries.end() && key_less(*qi, e)) ++qi;
    if (qi == q.entries.end() || key_less(e, *qi)) throw SupportError(e.shell, e.k);
    total += kl_term(e.mass, qi->mass);
  }
  return total;
}

DivergenceReport jensen_shannon(const JointDistribution& p, const JointDistribution& q) {
  double kl_p = 0.0, kl_q = 0.0;
  auto pi = p.entries.begin(), qi = q.entries.begin();
  while (pi != p.entries.end() || qi != q.entries.end()) {
    double pm = 0.0, qm = 0.0;
    if (qi == q.entries.end() || (pi != p.entries.end() && key_less(*pi, *qi))) {
      pm = (pi++)->mass;
    } else if (pi == p.entries.end() || key_less(*qi, *pi)) {
      qm = (qi++)->mass;
    } else {
      pm = (pi++)->mass;
      qm = (qi++)->mass;
    }
    const double m = (pm + qm) * 0.5;
    kl_p += kl_term(pm, m);
    kl_q += kl_term(qm, m);
  }
  // Each KL against the mixture lies in [0, 1]; clamp away round-off.
  DivergenceReport r;
  r.kl_p_m = std::clamp(kl_p, 0.0, 1.0);
  r.kl_q_m = std::clamp(kl_q, 0.0, 1.0);
  r.d_js = 0.5 * (r.kl_p_m + r.kl_q_m);
  return r;
}

DivergenceReport portrait_divergence(const Portrait& a, const Portrait& b) {
  if (a.bins() != b.bins()) {
    throw std::invalid_argument("portraits were built on different shell binnings");
  }
  DivergenceReport r = jensen_shannon(joint_distribution(a), joint_distribution(b));
  r.rows_compared = std::max(a.n_rows(), b.n_rows());
  r.binning = a.bins();
  r.n1 = a.n_nodes();
  r.n2 = b.n_nodes();
  return r;
}

DivergenceReport portrait_divergence(const Graph& g1, const Graph& g2) {
  DivergenceReport r = portrait_divergence(portrait(g1), portrait(g2));
  r.m1 = g1.n_edges();
  r.m2 = g2.n_edges();
  return r;
}

DivergenceReport weighted_portrait_divergence(const Graph& g1, const Graph& g2, std::size_t b,
                                              WeightTransform transform) {
  const BinSpec bins = make_shared_bins(g1, g2, b, transform);
  DivergenceReport r = portrait_divergence(weighted_portrait(g1, bins, transform),
                                           weighted_portrait(g2, bins, transform));
  r.m1 = g1.n_edges();
  r.m2 = g2.n_edges();
  return r;
}

double legacy_delta(const Portrait& a, const Portrait& b) {
  const std::size_t rows = std::max(a.n_rows(), b.n_rows());
  const Portrait pa = pad_portrait(a, rows);
  const Portrait pb = pad_portrait(b, rows);
  const std::size_t cols = std::max(pa.n_cols(), pb.n_cols());

  double weighted_sum = 0.0, weight_total = 0.0;
  for (std::size_t l = 0; l < rows; ++l) {
    const double total_a = static_cast<double>(pa.n_nodes());
    const double total_b = static_cast<double>(pb.n_nodes());
    Portrait::Count cum_a = 0, cum_b = 0, occupied = 0;
    double ks = 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
      cum_a += pa.at(l, k);
      cum_b += pb.at(l, k);
      if (k > 0) occupied += pa.at(l, k) + pb.at(l, k);
      ks = std::max(ks, std::abs(static_cast<double>(cum_a) / total_a -
                                 static_cast<double>(cum_b) / total_b));
    }
    const double alpha = static_cast<double>(occupied);
    weighted_sum += alpha * ks;
    weight_total += alpha;
  }
  return weighted_sum / weight_total;
}

double legacy_delta(const Graph& g1, const Graph& g2) {
  return legacy_delta(portrait(g1), portrait(g2));
}

}  // namespace npd
