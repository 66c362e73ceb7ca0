#include "cubical/box.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "cubical/error.hpp"

namespace cubical {

namespace {

Support bit(int i) { return Support{1} << (i - 1); }

Support full_support(int m) { return m == 0 ? 0 : (m >= 32 ? ~Support{0} : (Support{1} << m) - 1); }

}  // namespace

int Coord::min_index() const { return std::countr_zero(support_) + 1; }

int Coord::max_index() const { return 32 - std::countl_zero(support_); }

std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Coord::Kind::max) return std::strong_ordering::equal;
  // Lexicographic on the sorted index sequences.
  Support x = a.support_;
  Support y = b.support_;
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i <=> j;
    x &= x - 1;
    y &= y - 1;
  }
  return (x != 0) <=> (y != 0);
}

bool box_is_valid(int m, int n, std::span<const Coord> coords) {
  if (m < 0 || n < 0 || m > kMaxBoxDim || n > kMaxBoxDim) return false;
  if (coords.size() != static_cast<std::size_t>(n)) return false;
  int last_max = 0;
  for (const Coord& c : coords) {
    if (c.is_const()) {
      if (c.support() != 0) return false;
      continue;
    }
    if (c.support() == 0 || (c.support() & ~full_support(m)) != 0) return false;
    if (c.min_index() <= last_max) return false;
    last_max = c.max_index();
  }
  return true;
}

BoxMap::BoxMap(int domain, std::vector<Coord> coords) : domain_(domain), coords_(std::move(coords)) {
  if (!box_is_valid(domain_, static_cast<int>(coords_.size()), coords_)) {
    throw RangeError("invalid box map " + render(*this) + " with domain dimension " +
                     std::to_string(domain_));
  }
}

BoxMap BoxMap::identity(int n) {
  std::vector<Coord> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) coords.push_back(Coord::max(bit(j)));
  return BoxMap(n, std::move(coords));
}

std::strong_ordering operator<=>(const BoxMap& a, const BoxMap& b) {
  if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
  if (auto c = a.codomain() <=> b.codomain(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

BoxMap box_generator(GeneratorKind kind, int n, int i, std::optional<int> sign) {
  std::vector<Coord> coords;
  switch (kind) {
    case GeneratorKind::face: {
      if (!sign || (*sign != 0 && *sign != 1)) throw RangeError("face: sign must be 0 or 1");
      if (n < 1 || n > kMaxBoxDim || i < 1 || i > n)
        throw RangeError("face: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      for (int j = 1; j <= n; ++j) {
        if (j < i) coords.push_back(Coord::max(bit(j)));
        else if (j == i) coords.push_back(*sign == 0 ? Coord::zero() : Coord::one());
        else coords.push_back(Coord::max(bit(j - 1)));
      }
      return BoxMap(n - 1, std::move(coords));
    }
    case GeneratorKind::degeneracy: {
      if (sign) throw RangeError("degeneracy: takes no sign");
      if (n < 1 || n > kMaxBoxDim || i < 1 || i > n)
        throw RangeError("degeneracy: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      for (int j = 1; j < n; ++j) coords.push_back(Coord::max(bit(j < i ? j : j + 1)));
      return BoxMap(n, std::move(coords));
    }
    case GeneratorKind::connection: {
      if (sign) throw RangeError("connection: takes no sign");
      if (n < 2 || n > kMaxBoxDim || i < 1 || i > n - 1)
        throw RangeError("connection: index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      for (int j = 1; j < n; ++j) {
        if (j < i) coords.push_back(Coord::max(bit(j)));
        else if (j == i) coords.push_back(Coord::max(bit(i) | bit(i + 1)));
        else coords.push_back(Coord::max(bit(j + 1)));
      }
      return BoxMap(n, std::move(coords));
    }
  }
  throw RangeError("unknown generator kind");
}

BoxMap to_map(const BoxGenerator& gen) {
  if (gen.kind == GeneratorKind::face) return box_generator(gen.kind, gen.n, gen.index, gen.sign);
  return box_generator(gen.kind, gen.n, gen.index);
}

BoxMap face(int n, int i, int sign) { return box_generator(GeneratorKind::face, n, i, sign); }
BoxMap degeneracy(int n, int i) { return box_generator(GeneratorKind::degeneracy, n, i); }
BoxMap connection(int n, int i) { return box_generator(GeneratorKind::connection, n, i); }

BoxMap compose(const BoxMap& g, const BoxMap& f) {
  if (f.codomain() != g.domain()) {
    throw CompositionError("cannot compose " + render(g) + " after " + render(f) + ": codomain " +
                           std::to_string(f.codomain()) + " != domain " + std::to_string(g.domain()));
  }
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(g.codomain()));
  for (const Coord& c : g.coords()) {
    if (c.is_const()) {
      out.push_back(c);
      continue;
    }
    bool hits_one = false;
    Support merged = 0;
    for (Support s = c.support(); s != 0; s &= s - 1) {
      const Coord& inner = f.coord(std::countr_zero(s) + 1);
      if (inner.kind() == Coord::Kind::one) hits_one = true;
      else if (inner.kind() == Coord::Kind::max) merged |= inner.support();
    }
    if (hits_one) out.push_back(Coord::one());
    else if (merged != 0) out.push_back(Coord::max(merged));
    else out.push_back(Coord::zero());
  }
  return BoxMap(f.domain(), std::move(out));
}

BoxMap compose_word(std::span<const BoxGenerator> word, int domain) {
  BoxMap acc = BoxMap::identity(domain);
  bool first = true;
  for (const BoxGenerator& g : word) {
    if (first) {
      acc = to_map(g);
      first = false;
    } else {
      acc = compose(to_map(g), acc);
    }
  }
  return acc;
}

namespace {

void enumerate_rec(int m, int n, int next_min, std::vector<Coord>& prefix, std::vector<BoxMap>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(m, prefix);
    return;
  }
  prefix.push_back(Coord::zero());
  enumerate_rec(m, n, next_min, prefix, out);
  prefix.back() = Coord::one();
  enumerate_rec(m, n, next_min, prefix, out);
  prefix.pop_back();
  if (next_min > m) return;
  // Nonempty supports inside {next_min, ..., m}.
  const Support avail = full_support(m) & ~full_support(next_min - 1);
  for (Support s = avail; s != 0; s = (s - 1) & avail) {
    prefix.push_back(Coord::max(s));
    enumerate_rec(m, n, Coord::max(s).max_index() + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BoxMap> box_enumerate(int m, int n) {
  if (m < 0 || n < 0 || m > kMaxBoxDim || n > kMaxBoxDim) throw RangeError("box_enumerate: dimension out of range");
  std::vector<BoxMap> out;
  std::vector<Coord> prefix;
  enumerate_rec(m, n, 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool evaluate_coord(const Coord& c, std::uint32_t point) {
  switch (c.kind()) {
    case Coord::Kind::zero: return false;
    case Coord::Kind::one: return true;
    case Coord::Kind::max: return (c.support() & point) != 0;
  }
  return false;
}

std::uint32_t apply_to_point(const BoxMap& f, std::uint32_t point) {
  std::uint32_t out = 0;
  for (int j = 1; j <= f.codomain(); ++j) {
    if (evaluate_coord(f.coord(j), point)) out |= bit(j);
  }
  return out;
}

NormalForm box_normal_form(const BoxMap& f) {
  NormalForm nf;
  nf.domain = f.domain();
  nf.codomain = f.codomain();

  Support used = 0;
  for (const Coord& c : f.coords()) used |= c.support();
  for (int i = f.domain(); i >= 1; --i) {
    if ((used & bit(i)) == 0) nf.degeneracies.push_back(i);
  }

  // After the degeneracies the surviving coordinates are renumbered densely;
  // each max support becomes a contiguous block merged by connections.
  int position = 1;
  for (const Coord& c : f.coords()) {
    if (c.is_const()) continue;
    const int width = std::popcount(c.support());
    for (int t = 0; t + 1 < width; ++t) nf.connections.push_back(position + t);
    position += width;
  }

  for (int j = f.codomain(); j >= 1; --j) {
    const Coord& c = f.coord(j);
    if (c.is_const()) nf.faces.push_back({j, c.kind() == Coord::Kind::one ? 1 : 0});
  }
  return nf;
}

bool nf_is_valid(const NormalForm& nf) {
  const int r = static_cast<int>(nf.degeneracies.size());
  const int s = static_cast<int>(nf.connections.size());
  const int t = static_cast<int>(nf.faces.size());
  if (nf.domain < 0 || nf.codomain < 0 || nf.domain > kMaxBoxDim || nf.codomain > kMaxBoxDim) return false;
  if (nf.codomain != nf.domain - r - s + t) return false;
  for (int a = 0; a < r; ++a) {
    const int i = nf.degeneracies[static_cast<std::size_t>(a)];
    if (i < 1 || i > nf.domain) return false;
    if (a > 0 && !(nf.degeneracies[static_cast<std::size_t>(a - 1)] > i)) return false;
  }
  const int after_degeneracies = nf.domain - r;
  for (int a = 0; a < s; ++a) {
    const int j = nf.connections[static_cast<std::size_t>(a)];
    if (j < 1 || j > after_degeneracies - 1) return false;
    if (a > 0 && !(nf.connections[static_cast<std::size_t>(a - 1)] < j)) return false;
  }
  for (int a = 0; a < t; ++a) {
    const FaceStep& step = nf.faces[static_cast<std::size_t>(a)];
    if (step.index < 1 || step.index > nf.codomain || (step.sign != 0 && step.sign != 1)) return false;
    if (a > 0 && !(nf.faces[static_cast<std::size_t>(a - 1)].index > step.index)) return false;
  }
  return true;
}

std::vector<BoxGenerator> nf_word(const NormalForm& nf) {
  std::vector<BoxGenerator> word;
  int dim = nf.domain;
  for (int i : nf.degeneracies) {
    word.push_back({GeneratorKind::degeneracy, dim, i});
    --dim;
  }
  for (auto it = nf.connections.rbegin(); it != nf.connections.rend(); ++it) {
    word.push_back({GeneratorKind::connection, dim, *it});
    --dim;
  }
  for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it) {
    ++dim;
    word.push_back({GeneratorKind::face, dim, it->index, it->sign});
  }
  return word;
}

BoxMap nf_evaluate(const NormalForm& nf) {
  if (!nf_is_valid(nf)) throw RangeError("nf_evaluate: invalid normal form " + render(nf));
  const auto word = nf_word(nf);
  return compose_word(word, nf.domain);
}

namespace {

template <typename F>
void for_each_strict_subsequence(int lo, int hi, int count, std::vector<int>& acc, F&& f) {
  if (count == 0) {
    f(acc);
    return;
  }
  for (int v = lo; v <= hi - count + 1; ++v) {
    acc.push_back(v);
    for_each_strict_subsequence(v + 1, hi, count - 1, acc, f);
    acc.pop_back();
  }
}

}  // namespace

std::vector<NormalForm> nf_enumerate(int m, int n) {
  std::vector<NormalForm> out;
  for (int r = 0; r <= m; ++r) {
    for (int s = 0; s <= m - r; ++s) {
      const int t = n - (m - r - s);
      if (t < 0 || t > n) continue;
      std::vector<int> degs, conns, face_idx;
      for_each_strict_subsequence(1, m, r, degs, [&](const std::vector<int>& d) {
        std::vector<int> cacc;
        for_each_strict_subsequence(1, m - r - 1, s, cacc, [&](const std::vector<int>& c) {
          std::vector<int> facc;
          for_each_strict_subsequence(1, n, t, facc, [&](const std::vector<int>& fi) {
            for (std::uint32_t signs = 0; signs < (1u << t); ++signs) {
              NormalForm nf;
              nf.domain = m;
              nf.codomain = n;
              nf.degeneracies.assign(d.rbegin(), d.rend());
              nf.connections = c;
              for (int a = t - 1; a >= 0; --a) {
                nf.faces.push_back({fi[static_cast<std::size_t>(a)], static_cast<int>((signs >> a) & 1u)});
              }
              out.push_back(std::move(nf));
            }
          });
        });
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(const Coord& c) {
  switch (c.kind()) {
    case Coord::Kind::zero: return "0";
    case Coord::Kind::one: return "1";
    case Coord::Kind::max: break;
  }
  std::string s = "max{";
  bool first = true;
  for (Support x = c.support(); x != 0; x &= x - 1) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(std::countr_zero(x) + 1);
  }
  s += '}';
  return s;
}

std::string render(const BoxMap& f) {
  std::string s = "(";
  for (std::size_t j = 0; j < f.coords().size(); ++j) {
    if (j > 0) s += ", ";
    s += render(f.coords()[j]);
  }
  s += ')';
  return s;
}

std::string render(const BoxGenerator& g) {
  switch (g.kind) {
    case GeneratorKind::face: return "d" + std::to_string(g.index) + "^" + std::to_string(g.sign);
    case GeneratorKind::degeneracy: return "s" + std::to_string(g.index);
    case GeneratorKind::connection: return "g" + std::to_string(g.index);
  }
  return "?";
}

std::string render(const NormalForm& nf) {
  std::vector<std::string> blocks;
  std::string block;
  for (const FaceStep& f : nf.faces) {
    if (!block.empty()) block += ' ';
    block += render(BoxGenerator{GeneratorKind::face, 0, f.index, f.sign});
  }
  if (!block.empty()) blocks.push_back(block);
  block.clear();
  for (int j : nf.connections) {
    if (!block.empty()) block += ' ';
    block += "g" + std::to_string(j);
  }
  if (!block.empty()) blocks.push_back(block);
  block.clear();
  for (int i : nf.degeneracies) {
    if (!block.empty()) block += ' ';
    block += "s" + std::to_string(i);
  }
  if (!block.empty()) blocks.push_back(block);
  if (blocks.empty()) return "id";
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += " . ";
    out += blocks[b];
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoxMap parse_box_map(std::string_view text, int domain) {
  Cursor cur(text);
  cur.expect('(');
  std::vector<Coord> coords;
  if (!cur.eat(')')) {
    while (true) {
      if (cur.eat("max")) {
        cur.expect('{');
        Support s = 0;
        do {
          const int i = cur.integer();
          if (i < 1 || i > kMaxBoxDim) cur.fail("index out of range");
          s |= bit(i);
        } while (cur.eat(','));
        cur.expect('}');
        coords.push_back(Coord::max(s));
      } else {
        const int v = cur.integer();
        if (v != 0 && v != 1) cur.fail("constant must be 0 or 1");
        coords.push_back(v == 0 ? Coord::zero() : Coord::one());
      }
      if (cur.eat(')')) break;
      cur.expect(',');
    }
  }
  if (!cur.done()) cur.fail("trailing input");
  if (!box_is_valid(domain, static_cast<int>(coords.size()), coords)) {
    throw ParseError("'" + std::string(text) + "' is not a box map with domain dimension " + std::to_string(domain));
  }
  return BoxMap(domain, std::move(coords));
}

BoxGenerator parse_box_generator(std::string_view text, int n) {
  Cursor cur(text);
  BoxGenerator g{GeneratorKind::face, n, 0, 0};
  if (cur.eat('d')) {
    g.kind = GeneratorKind::face;
    g.index = cur.integer();
    cur.expect('^');
    g.sign = cur.integer();
  } else if (cur.eat('s')) {
    g.kind = GeneratorKind::degeneracy;
    g.index = cur.integer();
  } else if (cur.eat('g')) {
    g.kind = GeneratorKind::connection;
    g.index = cur.integer();
  } else {
    cur.fail("expected d, s or g");
  }
  if (!cur.done()) cur.fail("trailing input");
  try {
    (void)to_map(g);
  } catch (const RangeError& e) {
    throw ParseError(e.what());
  }
  return g;
}

}  // namespace cubical
