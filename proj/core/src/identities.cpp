#include "cubical/identities.hpp"

#include <functional>

#include "cubical/error.hpp"

namespace cubical {

namespace {

struct Step {
  GeneratorKind kind;
  int index;
  int sign = 0;
};

using Word = std::vector<Step>;

Step d(int i, int e) { return {GeneratorKind::face, i, e}; }
Step s(int i) { return {GeneratorKind::degeneracy, i, 0}; }
Step g(int i) { return {GeneratorKind::connection, i, 0}; }

// Fills in superscripts from the domain outwards; nullopt if some step is
// illegal or leaves 0..max_dim.
std::optional<std::vector<BoxGenerator>> instantiate(const Word& word, int domain, int max_dim) {
  std::vector<BoxGenerator> out(word.size());
  int dim = domain;
  for (std::size_t k = word.size(); k-- > 0;) {
    const Step& st = word[k];
    switch (st.kind) {
      case GeneratorKind::face:
        if (st.index < 1 || st.index > dim + 1 || dim + 1 > max_dim) return std::nullopt;
        out[k] = {st.kind, dim + 1, st.index, st.sign};
        ++dim;
        break;
      case GeneratorKind::degeneracy:
        if (st.index < 1 || st.index > dim) return std::nullopt;
        out[k] = {st.kind, dim, st.index, 0};
        --dim;
        break;
      case GeneratorKind::connection:
        if (st.index < 1 || st.index > dim - 1) return std::nullopt;
        out[k] = {st.kind, dim, st.index, 0};
        --dim;
        break;
    }
  }
  return out;
}

std::string word_text(const std::vector<BoxGenerator>& w) {
  if (w.empty()) return "id";
  std::string t;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) t += ' ';
    t += render(w[k]);
  }
  return t;
}

struct Family {
  std::string name;
  // (i, j, e, e2) -> (lhs, rhs) or nothing when the side condition fails.
  std::function<std::optional<std::pair<Word, Word>>(int, int, int, int)> make;
};

std::vector<Family> families(IdentityReading reading) {
  using R = std::optional<std::pair<Word, Word>>;
  const bool misindexed = reading == IdentityReading::misindexed;
  std::vector<Family> fam;
  fam.push_back({"d_{j,e} d_{i,e'} (j<=i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j <= i)) return std::nullopt;
                   return std::pair{Word{d(j, e), d(i, e2)}, Word{d(i + 1, e2), d(j, e)}};
                 }});
  fam.push_back({"s_i s_j (j<=i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j <= i) || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(i), s(j)}, Word{s(j), s(i + 1)}};
                 }});
  fam.push_back({"g_j g_i (j>i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j > i) || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{g(j), g(i)}, Word{g(i), g(j + 1)}};
                 }});
  fam.push_back({"g_i g_i", [](int i, int j, int e, int e2) -> R {
                   if (j != i || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{g(i), g(i)}, Word{g(i), g(i + 1)}};
                 }});
  fam.push_back({"s_j d_{i,e} (j<i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j < i) || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(j), d(i, e)}, Word{d(i - 1, e), s(j)}};
                 }});
  fam.push_back({"s_i d_{i,e}", [](int i, int j, int e, int e2) -> R {
                   if (j != i || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(i), d(i, e)}, Word{}};
                 }});
  fam.push_back({"s_j d_{i,e} (j>i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j > i) || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(j), d(i, e)}, Word{d(i, e), s(j - 1)}};
                 }});
  fam.push_back({"g_j d_{i,e} (j<i-1)", [](int i, int j, int e, int e2) -> R {
                   if (!(j < i - 1) || e2 != 0) return std::nullopt;
                   return std::pair{Word{g(j), d(i, e)}, Word{d(i - 1, e), g(j)}};
                 }});
  fam.push_back({"g_j d_{i,0} (j=i-1,i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j == i - 1 || j == i) || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{g(j), d(i, 0)}, Word{}};
                 }});
  fam.push_back({"g_j d_{i,1} (j=i-1,i)", [misindexed](int i, int j, int e, int e2) -> R {
                   if (!(j == i - 1 || j == i) || e != 1 || e2 != 0) return std::nullopt;
                   if (misindexed) return std::pair{Word{g(j), d(i, 1)}, Word{d(i, 1), s(i)}};
                   return std::pair{Word{g(j), d(i, 1)}, Word{d(j, 1), s(j)}};
                 }});
  fam.push_back({"g_j d_{i,e} (j>i)", [misindexed](int i, int j, int e, int e2) -> R {
                   if (!(j > i) || e2 != 0) return std::nullopt;
                   if (misindexed) return std::pair{Word{g(j), d(i, e)}, Word{d(j, e), g(j - 1)}};
                   return std::pair{Word{g(j), d(i, e)}, Word{d(i, e), g(j - 1)}};
                 }});
  fam.push_back({"s_j g_i (j<i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j < i) || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(j), g(i)}, Word{g(i - 1), s(j)}};
                 }});
  fam.push_back({"s_i g_i", [](int i, int j, int e, int e2) -> R {
                   if (j != i || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(i), g(i)}, Word{s(i), s(i)}};
                 }});
  fam.push_back({"s_j g_i (j>i)", [](int i, int j, int e, int e2) -> R {
                   if (!(j > i) || e != 0 || e2 != 0) return std::nullopt;
                   return std::pair{Word{s(j), g(i)}, Word{g(i), s(j + 1)}};
                 }});
  return fam;
}

}  // namespace

BoxMap compose_written(const std::vector<BoxGenerator>& word, int domain) {
  std::vector<BoxGenerator> applied(word.rbegin(), word.rend());
  return compose_word(applied, domain);
}

std::vector<IdentityInstance> cocubical_identities(int max_dim, IdentityReading reading) {
  std::vector<IdentityInstance> out;
  for (const Family& fam : families(reading)) {
    for (int domain = 0; domain <= max_dim; ++domain) {
      for (int i = 1; i <= max_dim + 1; ++i) {
        for (int j = 1; j <= max_dim + 1; ++j) {
          for (int e = 0; e <= 1; ++e) {
            for (int e2 = 0; e2 <= 1; ++e2) {
              auto sides = fam.make(i, j, e, e2);
              if (!sides) continue;
              auto lhs = instantiate(sides->first, domain, max_dim);
              if (!lhs) continue;
              IdentityInstance inst;
              inst.family = fam.name;
              inst.domain = domain;
              inst.lhs = *lhs;
              inst.rhs = instantiate(sides->second, domain, max_dim);
              inst.text = word_text(inst.lhs) + " = " + (inst.rhs ? word_text(*inst.rhs) : "<illegal>") +
                          " on [1]^" + std::to_string(domain);
              out.push_back(std::move(inst));
            }
          }
        }
      }
    }
  }
  return out;
}

bool identity_holds(const IdentityInstance& inst) {
  if (!inst.rhs) return false;
  return compose_written(inst.lhs, inst.domain) == compose_written(*inst.rhs, inst.domain);
}

}  // namespace cubical
