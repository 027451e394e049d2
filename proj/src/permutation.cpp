#include "hspecht/permutation.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "hspecht/combinatorics.hpp"
#include "hspecht/common.hpp"

namespace hspecht {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidInput("not a permutation: " + to_string(*this));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n) throw InvalidInput("transposition point out of range");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  Permutation p = identity(n);
  for (std::size_t k = 0; k < points.size(); ++k) {
    int from = points[k];
    int to = points[(k + 1) % points.size()];
    if (from < 1 || from > n || to < 1 || to > n) throw InvalidInput("cycle point out of range");
    p.images_[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(p.images_);
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    p.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return p;
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t k = start; !visited[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      visited[k] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::preserves(const BlockStructure& block) const {
  if (degree() != block.total()) return false;
  for (int k = 1; k <= degree(); ++k) {
    if (block.block_of(k) != block.block_of((*this)(k))) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("permutation degree mismatch");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t k = 0; k < b.images_.size(); ++k) {
    p.images_[k] = a.images_[static_cast<std::size_t>(b.images_[k] - 1)];
  }
  return p;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.images().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p.images()[k]);
  }
  return out + "]";
}

Permutation parse_permutation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return Permutation(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput("invalid permutation '" + text + "'");
  }
}

std::vector<Permutation> symmetric_group_on(int n, std::span<const int> points) {
  std::vector<int> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> out;
  std::vector<int> image = sorted;
  do {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      images[static_cast<std::size_t>(sorted[k] - 1)] = image[k];
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<Permutation> block_group_elements(const BlockStructure& block) {
  const int n = block.total();
  std::vector<Permutation> group{Permutation::identity(n)};
  for (int i = 0; i < block.count(); ++i) {
    auto range = block.range(i);
    auto factor = symmetric_group_on(n, range);
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

std::vector<Permutation> block_group_generators(const BlockStructure& block) {
  std::vector<Permutation> gens;
  for (int i = 0; i < block.count(); ++i) {
    for (int k = block.first(i); k < block.last(i); ++k) {
      gens.push_back(Permutation::transposition(block.total(), k, k + 1));
    }
  }
  return gens;
}

long long block_group_order(const BlockStructure& block) {
  long long order = 1;
  for (int s : block.sizes()) {
    for (int k = 2; k <= s; ++k) order *= k;
  }
  return order;
}

Rational parse_rational(const std::string& text) {
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidInput("invalid rational '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace hspecht
