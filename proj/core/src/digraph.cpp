#include "dyck/digraph.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace dyck {

EulerianDigraph::EulerianDigraph(std::size_t vertex_count,
                                 std::vector<std::vector<std::size_t>> cycles)
    : vertex_count_(vertex_count), cycles_(std::move(cycles)) {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    const auto& cycle = cycles_[i];
    if (cycle.empty())
      throw std::invalid_argument("cycle " + std::to_string(i + 1) +
                                  " is empty");
    std::set<std::size_t> seen;
    for (std::size_t v : cycle) {
      if (v >= vertex_count_)
        throw std::invalid_argument("cycle " + std::to_string(i + 1) +
                                    " names vertex " + std::to_string(v + 1) +
                                    " beyond vertex count");
      if (!seen.insert(v).second)
        throw std::invalid_argument("cycle " + std::to_string(i + 1) +
                                    " repeats vertex " + std::to_string(v + 1));
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> EulerianDigraph::edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& cycle : cycles_) {
    for (std::size_t m = 0; m < cycle.size(); ++m)
      out.emplace_back(cycle[m], cycle[(m + 1) % cycle.size()]);
  }
  return out;
}

EulerianDigraph matrix_to_digraph(const DyckMatrix& m) {
  std::vector<std::vector<std::size_t>> cycles(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) cycles[i].push_back(j);
  return EulerianDigraph(m.cols(), std::move(cycles));
}

DyckMatrix digraph_to_matrix(const EulerianDigraph& g) {
  // Renumber by first appearance: cycle order, then listed order.
  std::unordered_map<std::size_t, std::size_t> id;
  for (const auto& cycle : g.cycles())
    for (std::size_t v : cycle)
      id.emplace(v, id.size());

  if (id.size() != g.vertex_count())
    throw MatrixError(Errc::not_in_family,
                      "NotInFamily: " +
                          std::to_string(g.vertex_count() - id.size()) +
                          " vertex(es) lie on no cycle");

  // Each cycle must list its vertices in renumbered order, or it is not
  // the cycle the matrix row would describe.
  for (std::size_t i = 0; i < g.cycles().size(); ++i) {
    const auto& cycle = g.cycles()[i];
    for (std::size_t m = 0; m + 1 < cycle.size(); ++m)
      if (id[cycle[m]] >= id[cycle[m + 1]])
        throw MatrixError(
            Errc::not_in_family,
            "NotInFamily: cycle " + std::to_string(i + 1) +
                " lists vertices out of canonical order at position " +
                std::to_string(m + 2));
  }

  Grid grid(g.cycles().size(),
            std::vector<std::uint8_t>(g.vertex_count(), 0));
  for (std::size_t i = 0; i < g.cycles().size(); ++i)
    for (std::size_t v : g.cycles()[i]) grid[i][id[v]] = 1;

  try {
    return validate_matrix(grid);
  } catch (const MatrixError& e) {
    throw MatrixError(Errc::not_in_family,
                      "NotInFamily: renumbered grid is not a Dyck matrix: " +
                          std::string(e.what()),
                      e.row(), e.col(), e.transition(), e.clause());
  }
}

FamilyReport verify_family(const EulerianDigraph& g) {
  FamilyReport report;
  const auto& cycles = g.cycles();

  std::vector<std::set<std::size_t>> supports;
  supports.reserve(cycles.size());
  for (const auto& c : cycles) supports.emplace_back(c.begin(), c.end());

  // E1: vertex-set containment between distinct cycles, any pair.
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const bool i_in_j = std::includes(supports[j].begin(), supports[j].end(),
                                        supports[i].begin(), supports[i].end());
      const bool j_in_i = std::includes(supports[i].begin(), supports[i].end(),
                                        supports[j].begin(), supports[j].end());
      if (i_in_j || j_in_i)
        report.violations.push_back(
            {FamilyViolation::Kind::containment, i, j,
             "E1: cycle " + std::to_string(i_in_j ? i + 1 : j + 1) +
                 " is contained in cycle " +
                 std::to_string(i_in_j ? j + 1 : i + 1)});
    }

  // E2: consecutive cycles must share exactly their first vertices, in
  // matching order.
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    std::vector<std::size_t> shared;
    std::set_intersection(supports[i].begin(), supports[i].end(),
                          supports[i + 1].begin(), supports[i + 1].end(),
                          std::back_inserter(shared));
    const std::size_t count = shared.size();
    bool ok = cycles[i].size() >= count && cycles[i + 1].size() >= count;
    for (std::size_t m = 0; ok && m < count; ++m)
      ok = cycles[i][m] == cycles[i + 1][m] &&
           supports[i + 1].count(cycles[i][m]) > 0;
    if (!ok)
      report.violations.push_back(
          {FamilyViolation::Kind::shared_prefix, i, i + 1,
           "E2: cycles " + std::to_string(i + 1) + " and " +
               std::to_string(i + 2) + " share " + std::to_string(count) +
               " vertex(es) that are not the first " + std::to_string(count) +
               " of both"});
  }
  return report;
}

std::string FamilyReport::summary() const {
  if (ok()) return "passes E1 and E2";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.detail;
  }
  return out;
}

std::vector<std::size_t> cycle_lengths(const EulerianDigraph& g) {
  std::vector<std::size_t> lengths;
  lengths.reserve(g.cycles().size());
  for (const auto& c : g.cycles()) lengths.push_back(c.size());
  return lengths;
}

std::vector<std::pair<std::size_t, std::size_t>> vertex_degrees(
    const EulerianDigraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> degrees(g.vertex_count());
  for (const auto& [from, to] : g.edges()) {
    ++degrees[from].second;  // out
    ++degrees[to].first;     // in
  }
  return degrees;
}

bool degree_balanced(const EulerianDigraph& g) {
  for (const auto& [in, out] : vertex_degrees(g))
    if (in != out) return false;
  return true;
}

std::string to_dot(const EulerianDigraph& g) {
  std::string out = "digraph dyck {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out += "  v" + std::to_string(v + 1) + ";\n";
  for (std::size_t i = 0; i < g.cycles().size(); ++i) {
    const auto& cycle = g.cycles()[i];
    for (std::size_t m = 0; m < cycle.size(); ++m) {
      const std::size_t from = cycle[m];
      const std::size_t to = cycle[(m + 1) % cycle.size()];
      out += "  v" + std::to_string(from + 1) + " -> v" +
             std::to_string(to + 1) + " [label=\"e" + std::to_string(i + 1) +
             std::to_string(m + 1) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace dyck
