#include "npd/serialize.hpp"

namespace npd {

using nlohmann::json;

nlohmann::json portrait_to_json(const Portrait& p) {
  json rows = json::array();
  for (std::size_t l = 0; l < p.n_rows(); ++l) {
    json cells = json::array();
    auto row = p.row(l);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) cells.push_back({k, row[k]});
    }
    rows.push_back(std::move(cells));
  }
  json bins = nullptr;
  if (p.bins()) {
    auto edges = p.bins()->edges();
    bins = json(std::vector<double>(edges.begin(), edges.end()));
  }
  return {{"n_nodes", p.n_nodes()}, {"directed", p.directed()}, {"bin_edges", bins},
          {"rows", rows}};
}

Portrait portrait_from_json(const nlohmann::json& j) {
  const auto n = j.at("n_nodes").get<std::size_t>();
  const std::size_t width = std::max<std::size_t>(n, 2);
  std::vector<std::vector<Portrait::Count>> rows;
  for (const auto& cells : j.at("rows")) {
    std::vector<Portrait::Count> row(width, 0);
    for (const auto& cell : cells) {
      const auto k = cell.at(0).get<std::size_t>();
      if (k >= width) throw std::invalid_argument("portrait cell k out of range");
      row[k] = cell.at(1).get<Portrait::Count>();
    }
    rows.push_back(std::move(row));
  }
  std::optional<BinSpec> bins;
  if (!j.at("bin_edges").is_null()) bins.emplace(j.at("bin_edges").get<std::vector<double>>());
  return Portrait(n, j.at("directed").get<bool>(), std::move(rows), std::move(bins));
}

void write_portrait_csv(std::ostream& out, const Portrait& p) {
  for (std::size_t l = 0; l < p.n_rows(); ++l) {
    auto row = p.row(l);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];
    }
    out << '\n';
  }
}

nlohmann::json report_to_json(const DivergenceReport& r) {
  json bins = nullptr;
  if (r.binning) {
    auto edges = r.binning->edges();
    bins = json(std::vector<double>(edges.begin(), edges.end()));
  }
  return {{"d_js", r.d_js}, {"kl_p_m_bits", r.kl_p_m}, {"kl_q_m_bits", r.kl_q_m},
          {"n1", r.n1},     {"m1", r.m1},              {"n2", r.n2},
          {"m2", r.m2},     {"bins", bins}};
}

}  // namespace npd
