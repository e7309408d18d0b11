#include "linelab/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace linelab {
namespace {

struct RankTable {
  // rank[x][y][z] for distinct x, y, z in any order.
  std::array<std::array<std::array<std::uint8_t, 8>, 8>, 8> rank{};
  RankTable() {
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        for (int z = 0; z < 8; ++z)
          if (x != y && y != z && x != z)
            rank[x][y][z] = static_cast<std::uint8_t>(triple_rank(Triple::of(x, y, z)));
  }
};

const RankTable& ranks() {
  static const RankTable table;
  return table;
}

constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int hex_digits(int n) {
  const auto bits = static_cast<int>(binomial(n, 3));
  return std::max(1, (bits + 3) / 4);
}

class LabelingSearch {
 public:
  LabelingSearch(int n, std::uint64_t mask) : n_(n), mask_(mask), color_(refine_colors(n, mask)) {
    std::array<int, kMaxCanonicalVertices> sorted{};
    for (int v = 0; v < n; ++v) sorted[static_cast<std::size_t>(v)] = color_[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.begin() + n);
    slot_color_ = sorted;
  }

  CanonicalLabeling run() {
    result_.n = n_;
    descend(0, 0);
    return result_;
  }

 private:
  void descend(int p, std::uint64_t partial) {
    if (p == n_) {
      if (!have_best_ || bitstring_less(partial, result_.bits)) {
        have_best_ = true;
        result_.bits = partial;
        result_.last_orbit = 0;
        result_.automorphisms = 0;
        for (int i = 0; i < n_; ++i) result_.position[static_cast<std::size_t>(at_[static_cast<std::size_t>(i)])] = i;
      }
      if (partial == result_.bits) {
        result_.last_orbit |= VertexSet{1} << at_[static_cast<std::size_t>(n_ - 1)];
        ++result_.automorphisms;
      }
      return;
    }
    const auto& rank = ranks().rank;
    const std::uint64_t base = binomial(p, 3);
    const std::uint64_t prefix_len = binomial(p + 1, 3);
    const std::uint64_t prefix_mask = prefix_len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << prefix_len) - 1;
    for (int v = 0; v < n_; ++v) {
      if (((used_ >> v) & 1U) || color_[static_cast<std::size_t>(v)] != slot_color_[static_cast<std::size_t>(p)]) continue;
      std::uint64_t bits = partial;
      for (int j = 1; j < p; ++j) {
        const int vj = at_[static_cast<std::size_t>(j)];
        for (int i = 0; i < j; ++i) {
          const int vi = at_[static_cast<std::size_t>(i)];
          if ((mask_ >> rank[vi][vj][v]) & 1U) bits |= std::uint64_t{1} << (base + binomial(j, 2) + static_cast<std::uint64_t>(i));
        }
      }
      if (have_best_ && bitstring_less(result_.bits & prefix_mask, bits)) continue;
      at_[static_cast<std::size_t>(p)] = v;
      used_ |= VertexSet{1} << v;
      descend(p + 1, bits);
      used_ &= ~(VertexSet{1} << v);
    }
  }

  int n_;
  std::uint64_t mask_;
  std::array<int, kMaxCanonicalVertices> color_;
  std::array<int, kMaxCanonicalVertices> slot_color_{};
  std::array<int, kMaxCanonicalVertices> at_{};
  VertexSet used_ = 0;
  bool have_best_ = false;
  CanonicalLabeling result_;
};

}  // namespace

std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y) {
  if (x.n != y.n) return x.n <=> y.n;
  if (x.bits == y.bits) return std::strong_ordering::equal;
  return bitstring_less(x.bits, y.bits) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string CanonicalForm::str() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  const int digits = hex_digits(n);
  for (int d = 0; d < digits; ++d) {
    int value = 0;
    for (int k = 0; k < 4; ++k) {
      const int r = 4 * d + k;
      value = value * 2 + static_cast<int>(r < 64 && ((bits >> r) & 1U));
    }
    out += kHex[value];
  }
  return out;
}

CanonicalForm CanonicalForm::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("canonical form: missing ':'");
  int n = -1;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc{} || ptr != text.data() + colon || n < 0 || n > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical form: bad vertex count");
  const std::string_view hex = text.substr(colon + 1);
  if (static_cast<int>(hex.size()) != hex_digits(n)) throw std::invalid_argument("canonical form: wrong digit count");
  CanonicalForm f{n, 0};
  const auto universe = static_cast<int>(binomial(n, 3));
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char ch = hex[d];
    int value = 0;
    if (ch >= '0' && ch <= '9') value = ch - '0';
    else if (ch >= 'a' && ch <= 'f') value = ch - 'a' + 10;
    else throw std::invalid_argument("canonical form: bad hex digit");
    for (int k = 0; k < 4; ++k) {
      if (((value >> (3 - k)) & 1) == 0) continue;
      const int r = 4 * static_cast<int>(d) + k;
      if (r >= universe) throw std::invalid_argument("canonical form: padding bits set");
      f.bits |= std::uint64_t{1} << r;
    }
  }
  return f;
}

std::array<int, kMaxCanonicalVertices> refine_colors(int n, std::uint64_t mask) {
  if (n > kMaxCanonicalVertices) throw unsupported_size("refine_colors supports at most 8 vertices");
  const auto& rank = ranks().rank;
  std::array<int, kMaxCanonicalVertices> color{};
  for (int v = 0; v < n; ++v)
    for (int y = 1; y < n; ++y)
      for (int x = 0; x < y; ++x)
        if (x != v && y != v && ((mask >> rank[v][x][y]) & 1U)) ++color[static_cast<std::size_t>(v)];

  auto compress = [n](std::span<const std::uint64_t> keys, std::array<int, kMaxCanonicalVertices>& out) {
    std::array<std::uint64_t, kMaxCanonicalVertices> sorted{};
    std::copy(keys.begin(), keys.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n);
    const auto end = std::unique(sorted.begin(), sorted.begin() + n);
    for (int v = 0; v < n; ++v)
      out[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(sorted.begin(), end, keys[static_cast<std::size_t>(v)]) - sorted.begin());
    return static_cast<int>(end - sorted.begin());
  };

  std::array<std::uint64_t, kMaxCanonicalVertices> keys{};
  for (int v = 0; v < n; ++v) keys[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]);
  int classes = compress(std::span<const std::uint64_t>(keys.data(), static_cast<std::size_t>(n)), color);

  while (classes < n) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t signature = 0;
      for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x) {
          if (x == v || y == v || !((mask >> rank[v][x][y]) & 1U)) continue;
          const auto cx = static_cast<std::uint64_t>(color[static_cast<std::size_t>(x)]);
          const auto cy = static_cast<std::uint64_t>(color[static_cast<std::size_t>(y)]);
          signature += mix(std::min(cx, cy) * 16 + std::max(cx, cy));
        }
      // Old color in the high bits keeps the new order a refinement of the old one.
      keys[static_cast<std::size_t>(v)] =
          (static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]) << 56) | (signature >> 8);
    }
    const int next = compress(std::span<const std::uint64_t>(keys.data(), static_cast<std::size_t>(n)), color);
    if (next == classes) break;
    classes = next;
  }
  return color;
}

CanonicalLabeling canonical_labeling(int n, std::uint64_t mask) {
  if (n > kMaxCanonicalVertices) throw unsupported_size("canonical labeling supports at most 8 vertices");
  if (n == 0) return CanonicalLabeling{0, 0, {}, 0, 1};
  return LabelingSearch(n, mask).run();
}

CanonicalForm canonical_form(const Hypergraph& h) {
  if (h.order() > kMaxCanonicalVertices) throw unsupported_size("canonical_form supports at most 8 vertices");
  return CanonicalForm{h.order(), canonical_labeling(h.order(), h.mask()).bits};
}

Hypergraph decode(const CanonicalForm& f) { return Hypergraph::from_mask(f.n, f.bits); }

std::uint64_t permute_mask(int n, std::uint64_t mask, std::span<const int> perm) {
  if (n > kMaxCanonicalVertices) throw unsupported_size("permute_mask supports at most 8 vertices");
  const auto& rank = ranks().rank;
  std::uint64_t out = 0;
  while (mask != 0) {
    const Triple t = triple_unrank(static_cast<std::size_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
    out |= std::uint64_t{1} << rank[perm[static_cast<std::size_t>(t.a)]][perm[static_cast<std::size_t>(t.b)]]
                                    [perm[static_cast<std::size_t>(t.c)]];
  }
  return out;
}

}  // namespace linelab
