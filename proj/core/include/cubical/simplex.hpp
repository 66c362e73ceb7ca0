#pragma once

// Monotone maps [m] -> [n] of the simplex category. Indices are 0-based.

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace cubical {

class SimplexMap {
 public:
  /// `images` has m + 1 entries in {0, ..., codomain}, weakly increasing.
  /// Throws RangeError otherwise.
  SimplexMap(int codomain, std::vector<int> images);

  static SimplexMap identity(int n);
  /// Coface [n-1] -> [n] missing i, 0 <= i <= n.
  static SimplexMap coface(int n, int i);
  /// Codegeneracy [n+1] -> [n] hitting i twice, 0 <= i <= n.
  static SimplexMap codegeneracy(int n, int i);

  int domain() const { return static_cast<int>(images_.size()) - 1; }
  int codomain() const { return codomain_; }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const SimplexMap&, const SimplexMap&) = default;
  friend std::strong_ordering operator<=>(const SimplexMap& a, const SimplexMap& b);

 private:
  int codomain_;
  std::vector<int> images_;
};

/// g after f. Throws CompositionError on a dimension mismatch.
SimplexMap simplex_compose(const SimplexMap& g, const SimplexMap& f);

/// All monotone maps [m] -> [n], lexicographic on images.
std::vector<SimplexMap> simplex_enumerate(int m, int n);

/// alpha = injective . surjective, both unique.
struct EzSplit {
  SimplexMap surjection;
  SimplexMap injection;
};
EzSplit ez_split(const SimplexMap& alpha);

/// A generating map of the simplex category: a coface (dimension n is its
/// codomain) or a codegeneracy (dimension n is its codomain).
struct SimplexGenerator {
  bool is_face;
  int n;
  int index;

  SimplexMap to_map() const {
    return is_face ? SimplexMap::coface(n, index) : SimplexMap::codegeneracy(n, index);
  }
  int domain() const { return is_face ? n - 1 : n + 1; }
  friend bool operator==(const SimplexGenerator&, const SimplexGenerator&) = default;
};

/// A word of generators (application order) whose composite is alpha:
/// codegeneracies from the largest repeat down, then cofaces from the
/// smallest missing index up.
std::vector<SimplexGenerator> simplex_word(const SimplexMap& alpha);

/// `[0,0,1]`
std::string render(const SimplexMap& alpha);

}  // namespace cubical
