#include "npd/portrait.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "npd/detail/parallel.hpp"

namespace npd {

namespace {

using Count = Portrait::Count;
using Rows = std::vector<std::vector<Count>>;

std::size_t width_for(std::size_t n_nodes) { return std::max<std::size_t>(n_nodes, 2); }

void bump(Rows& rows, std::size_t l, std::size_t k, std::size_t width) {
  if (rows.size() <= l) rows.resize(l + 1, std::vector<Count>(width, 0));
  ++rows[l][k];
}

// Sums per-worker partial rows; integer addition keeps the merge independent
// of how sources were split across workers.
Rows merge(std::vector<Rows>& partials, std::size_t width) {
  Rows total;
  for (auto& part : partials) {
    if (total.size() < part.size()) total.resize(part.size(), std::vector<Count>(width, 0));
    for (std::size_t l = 0; l < part.size(); ++l) {
      for (std::size_t k = 0; k < width; ++k) total[l][k] += part[l][k];
    }
  }
  return total;
}

// Nodes not counted in a shell have zero nodes there.
void fill_empty_column(Rows& rows, std::size_t n_nodes) {
  for (auto& row : rows) {
    const Count occupied = std::accumulate(row.begin() + 1, row.end(), Count{0});
    row[0] = n_nodes - occupied;
  }
}

}  // namespace

Portrait::Portrait(std::size_t n_nodes, bool directed, std::vector<std::vector<Count>> rows,
                   std::optional<BinSpec> bins)
    : n_nodes_(n_nodes), directed_(directed), rows_(std::move(rows)), bins_(std::move(bins)) {
  if (n_nodes_ == 0) throw std::invalid_argument("portrait of an empty graph");
  if (rows_.empty()) throw std::invalid_argument("portrait needs at least the self-shell");
  const std::size_t width = width_for(n_nodes_);
  for (std::size_t l = 0; l < rows_.size(); ++l) {
    const auto& row = rows_[l];
    if (row.size() != width) {
      throw std::invalid_argument("portrait row " + std::to_string(l) + " has width " +
                                  std::to_string(row.size()) + ", expected " +
                                  std::to_string(width));
    }
    if (std::accumulate(row.begin(), row.end(), Count{0}) != n_nodes_) {
      throw std::invalid_argument("portrait row " + std::to_string(l) +
                                  " does not sum to the node count");
    }
    for (std::size_t k = 1; k < width; ++k) reachable_pairs_ += k * row[k];
  }
  if (rows_[0][1] != n_nodes_) {
    throw std::invalid_argument("portrait row 0 must be N at k = 1");
  }
  if (bins_ && rows_.size() > bins_->n_bins() + 1) {
    throw std::invalid_argument("weighted portrait has more rows than bins");
  }
}

std::size_t Portrait::diameter() const noexcept {
  for (std::size_t l = rows_.size(); l-- > 0;) {
    const auto& row = rows_[l];
    if (std::any_of(row.begin() + 1, row.end(), [](Count c) { return c > 0; })) return l;
  }
  return 0;
}

Portrait portrait(const Graph& g) {
  const std::size_t n = g.n_nodes();
  if (n == 0) throw std::invalid_argument("portrait of an empty graph");
  const std::size_t width = width_for(n);
  const std::size_t workers = detail::default_workers(n);
  std::vector<Rows> partials(workers);

  detail::parallel_blocks(n, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    detail::HopSearch search(n);
    Rows& rows = partials[w];
    for (std::size_t s = begin; s < end; ++s) {
      const auto& order = search.run(g, static_cast<NodeId>(s));
      // BFS order is nondecreasing in distance, so shells are contiguous runs.
      std::size_t i = 0;
      while (i < order.size()) {
        const std::uint32_t l = search.distance(order[i]);
        std::size_t j = i;
        while (j < order.size() && search.distance(order[j]) == l) ++j;
        bump(rows, l, j - i, width);
        i = j;
      }
    }
  });

  Rows rows = merge(partials, width);
  fill_empty_column(rows, n);
  return Portrait(n, g.directed(), std::move(rows));
}

Portrait weighted_portrait(const Graph& g, const BinSpec& bins, WeightTransform transform) {
  const std::size_t n = g.n_nodes();
  if (n == 0) throw std::invalid_argument("portrait of an empty graph");
  const std::size_t width = width_for(n);
  const std::size_t n_bins = bins.n_bins();
  const std::size_t workers = detail::default_workers(n);
  std::vector<Rows> partials(workers, Rows(n_bins + 1, std::vector<Count>(width, 0)));

  detail::parallel_blocks(n, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Rows& rows = partials[w];
    std::vector<std::size_t> per_bin(n_bins);
    for (std::size_t s = begin; s < end; ++s) {
      const auto row = sssp_weighted(g, static_cast<NodeId>(s), transform);
      std::fill(per_bin.begin(), per_bin.end(), 0);
      for (std::size_t t = 0; t < n; ++t) {
        if (t == s || row.dist[t] == kUnreachable) continue;
        const auto bin = bins.locate(row.dist[t]);
        if (!bin) {
          throw std::logic_error("path length " + std::to_string(row.dist[t]) +
                                 " lies outside every bin");
        }
        ++per_bin[*bin];
      }
      ++rows[0][1];
      for (std::size_t b = 0; b < n_bins; ++b) {
        if (per_bin[b] > 0) ++rows[b + 1][per_bin[b]];
      }
    }
  });

  Rows rows = merge(partials, width);
  while (rows.size() > 1 &&
         std::all_of(rows.back().begin() + 1, rows.back().end(), [](Count c) { return c == 0; })) {
    rows.pop_back();
  }
  fill_empty_column(rows, n);
  return Portrait(n, g.directed(), std::move(rows), bins);
}

Portrait pad_portrait(const Portrait& p, std::size_t target_rows) {
  if (target_rows < p.n_rows()) {
    throw std::invalid_argument("cannot pad a portrait to fewer rows");
  }
  Rows rows;
  rows.reserve(target_rows);
  for (std::size_t l = 0; l < p.n_rows(); ++l) {
    auto r = p.row(l);
    rows.emplace_back(r.begin(), r.end());
  }
  std::vector<Count> empty(p.n_cols(), 0);
  empty[0] = p.n_nodes();
  rows.resize(target_rows, empty);
  return Portrait(p.n_nodes(), p.directed(), std::move(rows), p.bins());
}

PortraitSummary portrait_identities(const Portrait& p) {
  if (p.weighted()) {
    throw std::invalid_argument("portrait identities need a hop-count portrait");
  }
  PortraitSummary s;
  s.n_nodes = p.n_nodes();
  s.diameter = p.diameter();
  const std::uint64_t pair_divisor = p.directed() ? 1 : 2;

  if (p.n_rows() < 2) {
    s.degree_histogram[0] = p.n_nodes();
  } else {
    auto degree_row = p.row(1);
    std::uint64_t endpoint_sum = 0;
    for (std::size_t k = 0; k < degree_row.size(); ++k) {
      if (degree_row[k] > 0) s.degree_histogram[k] = degree_row[k];
      endpoint_sum += k * degree_row[k];
    }
    s.n_edges = endpoint_sum / pair_divisor;
  }
  for (std::size_t l = 1; l <= s.diameter; ++l) {
    auto row = p.row(l);
    std::uint64_t sum = 0;
    for (std::size_t k = 1; k < row.size(); ++k) sum += k * row[k];
    s.path_length_counts[l] = sum / pair_divisor;
  }
  return s;
}

}  // namespace npd
