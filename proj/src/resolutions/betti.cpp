#include "nagata/resolutions/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nagata {

void BettiTable::set(int i, int j, std::int64_t v) {
  if (v < 0) throw std::invalid_argument("negative Betti number");
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

void BettiTable::add(int i, int j, std::int64_t v) { set(i, j, at(i, j) + v); }

std::optional<std::int64_t> BettiTable::get(int i, int j) const {
  if (!known(i, j)) return std::nullopt;
  return at(i, j);
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::proj_dim() const {
  int p = 0;
  for (const auto& [k, v] : entries_) p = std::max(p, k.first);
  return p;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

std::int64_t BettiTable::sum() const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

std::map<int, std::int64_t> BettiTable::row(int r) const {
  std::map<int, std::int64_t> out;
  for (const auto& [k, v] : entries_)
    if (k.second - k.first == r) out[k.first] = v;
  return out;
}

std::string BettiTable::to_string() const {
  int cols = proj_dim();
  int rows = regularity();
  if (max_i_ >= 0) cols = std::max(cols, max_i_);
  if (max_j_ >= 0) rows = std::max(rows, max_j_ - 0);
  std::vector<std::vector<std::string>> cells(rows + 2, std::vector<std::string>(cols + 2));
  cells[0][0] = "";
  for (int i = 0; i <= cols; ++i) cells[0][i + 1] = std::to_string(i);
  int last_row = 0;
  for (int r = 0; r <= rows; ++r) {
    bool any = false;
    cells[r + 1][0] = std::to_string(r) + ":";
    for (int i = 0; i <= cols; ++i) {
      if (!known(i, i + r)) {
        cells[r + 1][i + 1] = "?";
        continue;
      }
      auto v = at(i, i + r);
      cells[r + 1][i + 1] = v ? std::to_string(v) : "-";
      any = any || v;
    }
    if (any) last_row = r;
  }
  // drop trailing rows with nothing known and nonzero
  int show = complete() ? regularity() : rows;
  if (complete()) show = std::max(show, last_row);
  std::vector<std::size_t> width(cols + 2, 0);
  for (int r = 0; r <= show + 1; ++r)
    for (int c = 0; c <= cols + 1; ++c) width[c] = std::max(width[c], cells[r][c].size());
  std::ostringstream os;
  for (int r = 0; r <= show + 1; ++r) {
    for (int c = 0; c <= cols + 1; ++c) {
      const auto& s = cells[r][c];
      if (c == 0)
        os << s << std::string(width[c] - s.size(), ' ');
      else
        os << ' ' << std::string(width[c] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

bool check_betti_symmetry(const BettiTable& b, int c, int s) {
  if (!b.complete()) throw std::invalid_argument("symmetry check needs a complete Betti table");
  for (const auto& [k, v] : b.entries())
    if (b.at(c - k.first, s - k.second) != v) return false;
  return true;
}

}  // namespace nagata
