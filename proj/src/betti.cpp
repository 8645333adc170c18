#include "exbetti/betti.hpp"

#include <algorithm>
#include <sstream>

#include "exbetti/error.hpp"

namespace exbetti {

Count BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, Count value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot = checked_add(slot, value);
}

BettiTable BettiTable::shifted(int f) const {
  BettiTable out(n_);
  for (const auto& [key, value] : entries_) out.add(key.first, key.second + f, value);
  return out;
}

BettiTable& BettiTable::operator+=(const BettiTable& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [key, value] : other.entries_) add(key.first, key.second, value);
  return *this;
}

namespace {

void require_stable(const MonomialSubmodule& module) {
  for (int h = 0; h < module.rank(); ++h) {
    if (auto v = first_stable_violation(module.component(h))) {
      throw Error(ErrorKind::NotStable,
                  "component " + std::to_string(h + 1) + " is not stable: generator " +
                      v->generator.to_string() + " has " + v->image.to_string() +
                      " outside the ideal");
    }
  }
}

// Generators of M as (degree of u e_h, m(u)).
std::vector<std::pair<int, int>> generator_profile(const MonomialSubmodule& module) {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < module.rank(); ++h) {
    for (const auto& u : module.component(h).generators()) {
      out.emplace_back(u.degree() + module.shift(h), u.max_index());
    }
  }
  return out;
}

}  // namespace

BettiTable ek_betti(const MonomialSubmodule& module) {
  require_stable(module);
  BettiTable table(module.num_vars());
  for (int h = 0; h < module.rank(); ++h) {
    int f = module.shift(h);
    for (const auto& u : module.component(h).generators()) {
      int m = u.max_index();
      int l = u.degree() + f;
      if (m == 0) {
        // I_h = S: a free summand in degree f.
        table.add(0, l, 1);
        continue;
      }
      for (int k = 0; k <= m - 1; ++k) table.add(k, k + l, binomial(m - 1, k));
    }
  }
  return table;
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  return ek_betti(MonomialSubmodule::from_ideal(ideal));
}

ExtremalScan extremal_from_table(const BettiTable& table) {
  ExtremalScan scan;
  for (const auto& [key, value] : table.entries()) {
    Corner c = Corner::of_entry(key.first, key.second);
    bool extremal = true;
    for (const auto& [other, ov] : table.entries()) {
      Corner o = Corner::of_entry(other.first, other.second);
      if (o == c) continue;
      if (o.k >= c.k && o.l >= c.l) {
        extremal = false;
        break;
      }
    }
    if (!extremal) continue;
    if (c.k == 0) {
      scan.free_corner = Extremal{c, value};
    } else {
      scan.corners.push_back({c, value});
    }
  }
  std::sort(scan.corners.begin(), scan.corners.end(),
            [](const Extremal& a, const Extremal& b) { return corner_precedes(a.corner, b.corner); });
  return scan;
}

std::vector<Extremal> extremal_from_generators(const MonomialSubmodule& module) {
  require_stable(module);
  auto profile = generator_profile(module);
  std::map<int, int> max_m;  // degree -> largest m(u)
  for (auto [deg, m] : profile) {
    auto& slot = max_m[deg];
    slot = std::max(slot, m);
  }
  std::vector<Extremal> out;
  for (auto [deg, top] : max_m) {
    int k = top - 1;
    if (k < 1) continue;
    bool extremal = true;
    for (auto it = max_m.upper_bound(deg); it != max_m.end(); ++it) {
      if (it->second > k) {
        extremal = false;
        break;
      }
    }
    if (!extremal) continue;
    Count value = 0;
    for (auto [d, m] : profile) {
      if (d == deg && m == top) ++value;
    }
    out.push_back({{k, deg}, value});
  }
  std::sort(out.begin(), out.end(),
            [](const Extremal& a, const Extremal& b) { return corner_precedes(a.corner, b.corner); });
  return out;
}

std::vector<Extremal> extremal_from_generators(const MonomialIdeal& ideal) {
  return extremal_from_generators(MonomialSubmodule::from_ideal(ideal));
}

std::vector<Corner> corners_of(const std::vector<Extremal>& extremals) {
  std::vector<Corner> out;
  out.reserve(extremals.size());
  for (const auto& e : extremals) out.push_back(e.corner);
  return out;
}

CornerMatrixView corner_matrix(const MonomialSubmodule& module) {
  CornerMatrixView view;
  view.corners = extremal_from_table(ek_betti(module)).corners;
  std::vector<BettiTable> tables;
  for (int h = 0; h < module.rank(); ++h) tables.push_back(ek_betti(module.component(h)));
  std::vector<bool> used(static_cast<std::size_t>(module.rank()), false);
  for (const auto& e : view.corners) {
    std::vector<Count> row;
    for (int h = 0; h < module.rank(); ++h) {
      Count beta = tables[static_cast<std::size_t>(h)].at(e.corner.k,
                                                          e.corner.internal_degree() - module.shift(h));
      if (beta != 0) used[static_cast<std::size_t>(h)] = true;
      row.push_back(beta);
    }
    view.rows.push_back(std::move(row));
  }
  for (int h = 0; h < module.rank(); ++h) {
    if (used[static_cast<std::size_t>(h)]) view.corner_ideals.push_back(h);
  }
  return view;
}

ComponentCorners component_corners(const MonomialSubmodule& module, int h) {
  ComponentCorners out;
  MonomialSubmodule single(module.num_vars(), {module.component(h)}, {module.shift(h)});
  out.own = corners_of(extremal_from_table(ek_betti(single)).corners);
  auto ambient = corners_of(extremal_from_table(ek_betti(module)).corners);
  for (const auto& c : out.own) {
    if (std::find(ambient.begin(), ambient.end(), c) != ambient.end()) out.in_module.push_back(c);
  }
  return out;
}

std::string render_diagram(const BettiTable& table, const std::vector<Corner>& corners) {
  if (table.empty()) return "(zero module)\n";
  int max_i = 0;
  int min_row = 0;
  int max_row = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    int row = key.second - key.first - 1;
    max_i = std::max(max_i, key.first);
    min_row = first ? row : std::min(min_row, row);
    max_row = first ? row : std::max(max_row, row);
    first = false;
  }
  auto cell = [&](int i, int row) -> std::string {
    int j = row + i + 1;
    Count v = table.at(i, j);
    if (v == 0) return ".";
    std::string s = std::to_string(v);
    if (std::find(corners.begin(), corners.end(), Corner::of_entry(i, j)) != corners.end()) s += '*';
    return s;
  };
  std::vector<std::size_t> width(static_cast<std::size_t>(max_i + 1), 1);
  for (int row = min_row; row <= max_row; ++row) {
    for (int i = 0; i <= max_i; ++i) width[static_cast<std::size_t>(i)] =
        std::max(width[static_cast<std::size_t>(i)], cell(i, row).size());
  }
  std::size_t label_width = std::max(std::to_string(min_row).size(), std::to_string(max_row).size());

  std::ostringstream os;
  for (int row = min_row; row <= max_row; ++row) {
    std::string label = std::to_string(row);
    std::string line = std::string(label_width - label.size(), ' ') + label + ":";
    for (int i = 0; i <= max_i; ++i) {
      std::string c = cell(i, row);
      line += ' ';
      line += std::string(width[static_cast<std::size_t>(i)] - c.size(), ' ') + c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace exbetti
