#include "cubical/simplex.hpp"

#include <algorithm>

#include "cubical/error.hpp"

namespace cubical {

SimplexMap::SimplexMap(int codomain, std::vector<int> images) : codomain_(codomain), images_(std::move(images)) {
  if (codomain_ < 0 || images_.empty()) throw RangeError("simplex map: empty domain or negative codomain");
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] < 0 || images_[k] > codomain_) throw RangeError("simplex map " + render(*this) + ": image out of range");
    if (k > 0 && images_[k - 1] > images_[k]) throw RangeError("simplex map " + render(*this) + ": not monotone");
  }
}

SimplexMap SimplexMap::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) img[static_cast<std::size_t>(k)] = k;
  return SimplexMap(n, std::move(img));
}

SimplexMap SimplexMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw RangeError("coface: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  std::vector<int> img;
  for (int k = 0; k < n; ++k) img.push_back(k < i ? k : k + 1);
  return SimplexMap(n, std::move(img));
}

SimplexMap SimplexMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw RangeError("codegeneracy: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  std::vector<int> img;
  for (int k = 0; k <= n + 1; ++k) img.push_back(k <= i ? k : k - 1);
  return SimplexMap(n, std::move(img));
}

bool SimplexMap::is_injective() const { return std::adjacent_find(images_.begin(), images_.end()) == images_.end(); }

bool SimplexMap::is_surjective() const {
  if (images_.front() != 0 || images_.back() != codomain_) return false;
  for (std::size_t k = 1; k < images_.size(); ++k) {
    if (images_[k] - images_[k - 1] > 1) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const SimplexMap& a, const SimplexMap& b) {
  if (auto c = a.domain() <=> b.domain(); c != 0) return c;
  if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
}

SimplexMap simplex_compose(const SimplexMap& g, const SimplexMap& f) {
  if (f.codomain() != g.domain()) {
    throw CompositionError("cannot compose " + render(g) + " after " + render(f));
  }
  std::vector<int> img;
  img.reserve(f.images().size());
  for (int v : f.images()) img.push_back(g(v));
  return SimplexMap(g.codomain(), std::move(img));
}

std::vector<SimplexMap> simplex_enumerate(int m, int n) {
  if (m < 0 || n < 0) throw RangeError("simplex_enumerate: negative dimension");
  std::vector<SimplexMap> out;
  std::vector<int> img(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.emplace_back(n, img);
    // Next weakly increasing sequence in lexicographic order.
    int k = m;
    while (k >= 0 && img[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    const int v = img[static_cast<std::size_t>(k)] + 1;
    for (int t = k; t <= m; ++t) img[static_cast<std::size_t>(t)] = v;
  }
  return out;
}

EzSplit ez_split(const SimplexMap& alpha) {
  std::vector<int> distinct;
  std::vector<int> surj;
  for (int v : alpha.images()) {
    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
    surj.push_back(static_cast<int>(distinct.size()) - 1);
  }
  const int k = static_cast<int>(distinct.size()) - 1;
  return {SimplexMap(k, std::move(surj)), SimplexMap(alpha.codomain(), std::move(distinct))};
}

std::vector<SimplexGenerator> simplex_word(const SimplexMap& alpha) {
  const auto [eta, delta] = ez_split(alpha);
  std::vector<SimplexGenerator> word;
  // Repeats of eta: positions t with eta(t) == eta(t+1); collapse from the top.
  int dim = eta.domain();
  for (int t = eta.domain() - 1; t >= 0; --t) {
    if (eta(t) == eta(t + 1)) {
      --dim;
      word.push_back({false, dim, t});
    }
  }
  // Missing values of delta, inserted smallest first.
  dim = delta.domain();
  int next = 0;
  for (int v = 0; v <= delta.codomain(); ++v) {
    if (next <= delta.domain() && delta(next) == v) {
      ++next;
      continue;
    }
    ++dim;
    word.push_back({true, dim, v});
  }
  return word;
}

std::string render(const SimplexMap& alpha) {
  std::string s = "[";
  for (std::size_t k = 0; k < alpha.images().size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(alpha.images()[k]);
  }
  s += ']';
  return s;
}

}  // namespace cubical
