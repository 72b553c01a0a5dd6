#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "npd/divergence.hpp"
#include "npd/portrait.hpp"

namespace npd {

/// {n_nodes, directed, bin_edges|null, rows: [[[k, count], ...], ...]} with
/// only nonzero cells listed.
nlohmann::json portrait_to_json(const Portrait& p);
Portrait portrait_from_json(const nlohmann::json& j);

/// Dense rows x k matrix, one comma-separated line per shell.
void write_portrait_csv(std::ostream& out, const Portrait& p);

/// {d_js, kl_p_m_bits, kl_q_m_bits, n1, m1, n2, m2, bins|null}
nlohmann::json report_to_json(const DivergenceReport& r);

}  // namespace npd
