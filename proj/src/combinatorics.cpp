#include "hspecht/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

#include "hspecht/common.hpp"

namespace hspecht {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_json_as(const std::string& token, const char* what) {
  try {
    return nlohmann::json::parse(token).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("invalid ") + what + " '" + token + "'");
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(v[k]);
  }
  return out + "]";
}

// Cartesian product of permutation lists under composition.
std::vector<Permutation> product_of_groups(int n, const std::vector<std::vector<int>>& orbits) {
  std::vector<Permutation> group{Permutation::identity(n)};
  for (const auto& orbit : orbits) {
    if (orbit.size() < 2) continue;
    auto factor = symmetric_group_on(n, orbit);
    std::vector<Permutation> next;
    next.reserve(group.size() * factor.size());
    for (const auto& g : group) {
      for (const auto& h : factor) next.push_back(g * h);
    }
    group = std::move(next);
  }
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace

// ---------------------------------------------------------------------------

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidInput("block structure needs at least one block");
  for (int s : sizes_) {
    if (s < 1) throw InvalidInput("block sizes must be positive");
    total_ += s;
  }
}

int BlockStructure::first(int block) const {
  int start = 1;
  for (int i = 0; i < block; ++i) start += size(i);
  return start;
}

int BlockStructure::last(int block) const { return first(block) + size(block) - 1; }

std::vector<int> BlockStructure::range(int block) const {
  std::vector<int> out(static_cast<std::size_t>(size(block)));
  std::iota(out.begin(), out.end(), first(block));
  return out;
}

int BlockStructure::block_of(int entry) const {
  int upper = 0;
  for (int i = 0; i < count(); ++i) {
    upper += size(i);
    if (entry <= upper) return i;
  }
  throw InvalidInput("entry " + std::to_string(entry) + " outside 1.." + std::to_string(total_));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw InvalidInput("not a partition: " + join_ints(parts_));
    }
    size_ += parts_[k];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 0; !parts_.empty() && col < parts_[0]; ++col) {
    int height = 0;
    for (int p : parts_) height += p > col ? 1 : 0;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

MultiDiagram::MultiDiagram(BlockStructure b, std::vector<Partition> comps)
    : block(std::move(b)), components(std::move(comps)) {
  if (static_cast<int>(components.size()) != block.count()) {
    throw InvalidInput("diagram has " + std::to_string(components.size()) + " components, blocks expect " +
                       std::to_string(block.count()));
  }
  for (int i = 0; i < block.count(); ++i) {
    if (components[static_cast<std::size_t>(i)].size() != block.size(i)) {
      throw InvalidInput("diagram component " + to_string(components[static_cast<std::size_t>(i)]) +
                         " does not have size " + std::to_string(block.size(i)));
    }
  }
}

MultiDiagram MultiDiagram::trivial(const BlockStructure& block) {
  std::vector<Partition> comps;
  for (int s : block.sizes()) comps.emplace_back(std::vector<int>{s});
  return MultiDiagram(block, std::move(comps));
}

Tableau::Tableau(Grid rows) : rows_(std::move(rows)) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size())) {
      throw InvalidInput("tableau rows do not form a Young diagram: " + hspecht::to_string(rows_));
    }
    for (int v : rows_[r]) {
      if (v < 1 || !seen.insert(v).second) {
        throw InvalidInput("tableau entries must be distinct positive integers: " + hspecht::to_string(rows_));
      }
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  }
  return cols;
}

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  }
  return true;
}

MultiTableau::MultiTableau(BlockStructure b, std::vector<Tableau> comps)
    : block(std::move(b)), components(std::move(comps)) {
  if (static_cast<int>(components.size()) != block.count()) {
    throw InvalidInput("multi-tableau has " + std::to_string(components.size()) + " components, blocks expect " +
                       std::to_string(block.count()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(block.total()), false);
  for (int i = 0; i < block.count(); ++i) {
    const auto& t = components[static_cast<std::size_t>(i)];
    if (t.size() != block.size(i)) {
      throw InvalidInput("component " + hspecht::to_string(t) + " does not have size " + std::to_string(block.size(i)));
    }
    for (int v : t.entries()) {
      if (v > block.total() || seen[static_cast<std::size_t>(v - 1)]) {
        throw InvalidInput("multi-tableau entries must be exactly 1.." + std::to_string(block.total()));
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }
}

MultiDiagram MultiTableau::shape() const {
  std::vector<Partition> parts;
  for (const auto& t : components) parts.push_back(t.shape());
  return MultiDiagram(block, std::move(parts));
}

bool MultiTableau::is_standard() const {
  return std::all_of(components.begin(), components.end(), [](const Tableau& t) { return t.is_standard(); });
}

bool MultiTableau::is_natural() const {
  if (!is_standard()) return false;
  for (int i = 0; i < block.count(); ++i) {
    for (int v : components[static_cast<std::size_t>(i)].entries()) {
      if (block.block_of(v) != i) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw InvalidInput("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<MultiDiagram> enumerate_r_diagrams(const BlockStructure& block) {
  std::vector<std::vector<Partition>> acc{{}};
  for (int s : block.sizes()) {
    auto parts = enumerate_partitions(s);
    std::vector<std::vector<Partition>> next;
    for (const auto& prefix : acc) {
      for (const auto& p : parts) {
        auto extended = prefix;
        extended.push_back(p);
        next.push_back(std::move(extended));
      }
    }
    acc = std::move(next);
  }
  std::vector<MultiDiagram> out;
  out.reserve(acc.size());
  for (auto& comps : acc) out.emplace_back(block, std::move(comps));
  return out;
}

std::vector<Tableau> enumerate_standard_tableaux(const Partition& shape, std::vector<int> entries) {
  if (static_cast<int>(entries.size()) != shape.size()) {
    throw InvalidInput("shape " + to_string(shape) + " needs " + std::to_string(shape.size()) + " entries, got " +
                       std::to_string(entries.size()));
  }
  std::sort(entries.begin(), entries.end());
  if (std::adjacent_find(entries.begin(), entries.end()) != entries.end()) {
    throw InvalidInput("tableau entries must be distinct");
  }
  std::vector<Tableau> out;
  Grid grid(static_cast<std::size_t>(shape.length()));
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == entries.size()) {
      out.emplace_back(grid);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      auto& row = grid[static_cast<std::size_t>(r)];
      int len = static_cast<int>(row.size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(grid[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      row.push_back(entries[k]);
      rec(k + 1);
      row.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiTableau> enumerate_NST(const MultiDiagram& diagram) {
  std::vector<std::vector<Tableau>> acc{{}};
  for (int i = 0; i < diagram.block.count(); ++i) {
    auto tabs = enumerate_standard_tableaux(diagram.components[static_cast<std::size_t>(i)], diagram.block.range(i));
    std::vector<std::vector<Tableau>> next;
    for (const auto& prefix : acc) {
      for (const auto& t : tabs) {
        auto extended = prefix;
        extended.push_back(t);
        next.push_back(std::move(extended));
      }
    }
    acc = std::move(next);
  }
  std::vector<MultiTableau> out;
  for (auto& comps : acc) out.emplace_back(diagram.block, std::move(comps));
  return out;
}

std::vector<MultiTableau> enumerate_ST(const MultiDiagram& diagram) {
  const auto& block = diagram.block;
  std::vector<MultiTableau> out;
  std::vector<Tableau> chosen;
  std::function<void(int, std::vector<int>)> rec = [&](int comp, std::vector<int> remaining) {
    if (comp == block.count()) {
      out.emplace_back(block, chosen);
      return;
    }
    const int k = block.size(comp);
    // Choose k of the remaining entries via a selection mask, in lexicographic order.
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
      std::vector<int> subset, rest;
      for (std::size_t j = 0; j < remaining.size(); ++j) (mask[j] ? subset : rest).push_back(remaining[j]);
      for (auto& t : enumerate_standard_tableaux(diagram.components[static_cast<std::size_t>(comp)], subset)) {
        chosen.push_back(std::move(t));
        rec(comp + 1, rest);
        chosen.pop_back();
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  };
  std::vector<int> all(static_cast<std::size_t>(block.total()));
  std::iota(all.begin(), all.end(), 1);
  rec(0, all);
  std::sort(out.begin(), out.end());
  return out;
}

MultiTableau canonical_tableau(const MultiDiagram& diagram) {
  std::vector<Tableau> comps;
  for (int i = 0; i < diagram.block.count(); ++i) {
    const auto& shape = diagram.components[static_cast<std::size_t>(i)];
    int next = diagram.block.first(i);
    Grid grid;
    for (int part : shape.parts()) {
      std::vector<int> row(static_cast<std::size_t>(part));
      std::iota(row.begin(), row.end(), next);
      next += part;
      grid.push_back(std::move(row));
    }
    comps.emplace_back(std::move(grid));
  }
  return MultiTableau(diagram.block, std::move(comps));
}

Word word(const Tableau& t) {
  Word w;
  for (const auto& col : t.columns()) w.letters.insert(w.letters.end(), col.rbegin(), col.rend());
  return w;
}

Word word(const MultiTableau& t) {
  Word w;
  for (const auto& comp : t.components) {
    auto part = word(comp);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  return w;
}

namespace {

// Index of each letter (keyed by letter) given the successor order `order`.
std::vector<int> indices_by_successor(const std::vector<int>& letters, const std::vector<int>& order, int max_letter) {
  std::vector<int> position(static_cast<std::size_t>(max_letter + 1), -1);
  for (std::size_t p = 0; p < letters.size(); ++p) position[static_cast<std::size_t>(letters[p])] = static_cast<int>(p);
  std::vector<int> index(static_cast<std::size_t>(max_letter + 1), 0);
  for (std::size_t k = 1; k < order.size(); ++k) {
    int prev = order[k - 1];
    int cur = order[k];
    bool left = position[static_cast<std::size_t>(cur)] < position[static_cast<std::size_t>(prev)];
    index[static_cast<std::size_t>(cur)] = index[static_cast<std::size_t>(prev)] + (left ? 1 : 0);
  }
  return index;
}

Grid fill_grid(const Tableau& t, const std::vector<int>& by_letter) {
  Grid g = t.rows();
  for (auto& row : g) {
    for (auto& v : row) v = by_letter[static_cast<std::size_t>(v)];
  }
  return g;
}

}  // namespace

IndexWord index_word(const Word& w) {
  const int n = static_cast<int>(w.letters.size());
  std::vector<int> sorted = w.letters;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[static_cast<std::size_t>(k)] != k + 1) throw InvalidInput("word is not a permutation: " + to_string(w));
  }
  auto by_letter = indices_by_successor(w.letters, sorted, n);
  IndexWord out;
  for (int letter : w.letters) out.indices.push_back(by_letter[static_cast<std::size_t>(letter)]);
  return out;
}

IndexTableau index_tableau(const MultiTableau& t) {
  Word w = word(t);
  IndexWord iw = index_word(w);
  std::vector<int> by_letter(w.letters.size() + 1, 0);
  for (std::size_t p = 0; p < w.letters.size(); ++p) by_letter[static_cast<std::size_t>(w.letters[p])] = iw.indices[p];
  IndexTableau out;
  for (const auto& comp : t.components) out.components.push_back(fill_grid(comp, by_letter));
  return out;
}

IndexTableau block_index_tableau(const MultiTableau& t) {
  IndexTableau out;
  for (const auto& comp : t.components) {
    Word w = word(comp);
    std::vector<int> order = comp.entries();
    std::sort(order.begin(), order.end());
    auto by_letter = indices_by_successor(w.letters, order, t.block.total());
    out.components.push_back(fill_grid(comp, by_letter));
  }
  return out;
}

long long count_standard(const Partition& shape) {
  const Partition conj = shape.conjugate();
  // m! / prod(hooks), accumulated as a rational to stay exact.
  Integer numerator = 1, denominator = 1;
  for (int k = 2; k <= shape.size(); ++k) numerator *= k;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) denominator *= (shape[r] - c - 1) + (conj[c] - r - 1) + 1;
  }
  Integer f = numerator / denominator;
  return f.get_si();
}

std::vector<Permutation> row_stabilizer(const Tableau& t, int n) { return product_of_groups(n, t.rows()); }

std::vector<Permutation> column_stabilizer(const Tableau& t, int n) { return product_of_groups(n, t.columns()); }

std::vector<Permutation> column_group_generators(const MultiTableau& t) {
  std::vector<Permutation> gens;
  for (const auto& comp : t.components) {
    for (const auto& col : comp.columns()) {
      for (std::size_t k = 0; k + 1 < col.size(); ++k) {
        gens.push_back(Permutation::transposition(t.block.total(), col[k], col[k + 1]));
      }
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------

std::string to_string(const Partition& p) { return join_ints(p.parts()); }

std::string to_string(const MultiDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (i) out += '|';
    out += to_string(d.components[i]);
  }
  return out;
}

std::string to_string(const Grid& g) {
  std::string out = "[";
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r) out += ',';
    out += join_ints(g[r]);
  }
  return out + "]";
}

std::string to_string(const Tableau& t) { return to_string(t.rows()); }

std::string to_string(const MultiTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (i) out += '|';
    out += to_string(t.components[i]);
  }
  return out;
}

std::string to_string(const IndexTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (i) out += '|';
    out += to_string(t.components[i]);
  }
  return out;
}

std::string to_string(const Word& w) { return join_ints(w.letters); }

std::string to_string(const BlockStructure& b) {
  std::string out;
  for (int s : b.sizes()) out += (out.empty() ? "" : ",") + std::to_string(s);
  return out;
}

BlockStructure parse_blocks(const std::string& text) {
  std::vector<int> sizes;
  for (const auto& token : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("invalid block size '" + token + "'");
    }
  }
  return BlockStructure(std::move(sizes));
}

MultiDiagram parse_diagram(const std::string& text, const BlockStructure& block) {
  std::vector<Partition> comps;
  for (const auto& token : split(text, '|')) {
    auto parts = parse_json_as<std::vector<int>>(token, "partition");
    try {
      comps.emplace_back(std::move(parts));
    } catch (const InvalidInput&) {
      throw InvalidInput("invalid partition '" + token + "'");
    }
  }
  return MultiDiagram(block, std::move(comps));
}

MultiTableau parse_multi_tableau(const std::string& text, const BlockStructure& block) {
  std::vector<Tableau> comps;
  for (const auto& token : split(text, '|')) {
    comps.emplace_back(parse_json_as<Grid>(token, "tableau"));
  }
  return MultiTableau(block, std::move(comps));
}

}  // namespace hspecht
