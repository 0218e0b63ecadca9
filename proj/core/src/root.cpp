#include "tfg/root.hpp"

#include <algorithm>

#include "tfg/errors.hpp"

namespace tfg {

RootSubshift::RootSubshift(ShiftSpace base_space, int64_t copies)
    : base(std::move(base_space)), k(copies),
      ambient(ShiftSpace::full(Alphabet(base.alphabet().size() + 1))),
      pad(base.alphabet().size()) {
  if (copies < 1) throw Error(ErrorCode::BadInput, "need k >= 1");
}

RootSubshift sqrt_shift(const ShiftSpace& base, int64_t k) { return RootSubshift(base, k); }

WreathElement WreathElement::identity(const RootSubshift& root) {
  WreathElement e;
  for (int64_t i = 0; i < root.k; ++i) {
    e.tuple.push_back(TfgElement::identity(root.base));
    e.perm.push_back(static_cast<int>(i));
  }
  return e;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const EqualityPolicy& eq) {
  size_t k = a.perm.size();
  if (b.perm.size() != k) throw Error(ErrorCode::DomainMismatch, "wreath ranks differ");
  WreathElement r;
  r.perm.resize(k);
  std::vector<int> a_inv(k);
  for (size_t o = 0; o < k; ++o) a_inv[static_cast<size_t>(a.perm[o])] = static_cast<int>(o);
  for (size_t o = 0; o < k; ++o) r.perm[o] = a.perm[static_cast<size_t>(b.perm[o])];
  // applying b first: the copy landing at j passed through a_inv[j]
  for (size_t j = 0; j < k; ++j)
    r.tuple.push_back(compose(a.tuple[j], b.tuple[static_cast<size_t>(a_inv[j])], eq));
  return r;
}

WreathElement wreath_inverse(const WreathElement& a, const EqualityPolicy& eq) {
  size_t k = a.perm.size();
  WreathElement r;
  r.perm.resize(k);
  r.tuple.reserve(k);
  for (size_t o = 0; o < k; ++o) r.perm[static_cast<size_t>(a.perm[o])] = static_cast<int>(o);
  for (size_t j = 0; j < k; ++j)
    r.tuple.push_back(invert(a.tuple[static_cast<size_t>(a.perm[j])], eq));
  return r;
}

bool wreath_same(const WreathElement& a, const WreathElement& b, const EqualityPolicy& eq) {
  if (a.perm != b.perm) return false;
  for (size_t j = 0; j < a.tuple.size(); ++j)
    if (!equal(a.tuple[j], b.tuple[j], eq).equal) return false;
  return true;
}

namespace {

// offset to the nearest base symbol at or left of pos; nullopt on a locally
// all-# stretch (which, in the subshift, means the all-# point)
std::optional<int64_t> copy_offset(const RootSubshift& root, const Config& x, int64_t pos) {
  for (int64_t j = 0; j < root.k; ++j) {
    if (x.symbol_at(pos - j) != root.pad) return j;
  }
  return std::nullopt;
}

int64_t eval_on_grid(const RootSubshift& root, const TfgElement& f, const Config& x,
                     int64_t anchor) {
  // window of the base configuration read from the grid around the anchor
  int64_t n = f.bounds().radius;
  Word window;
  window.reserve(static_cast<size_t>(2 * n + 1));
  for (int64_t i = -n; i <= n; ++i) {
    Symbol s = x.symbol_at(anchor + root.k * i);
    if (s == root.pad || !root.base.alphabet().contains(s)) return 0;  // off the subshift
    window.push_back(s);
  }
  if (!root.base.admissible(window)) return 0;
  if (root.base.is_full()) {
    Config grid({0}, window, {0}, -n);
    return f.eval_at(grid, 0);
  }
  Config grid = root.base.embed_word(window, -n);
  return f.eval_at(grid, 0);
}

}  // namespace

TfgElement embed_wreath_Sk(const RootSubshift& root, const WreathElement& element,
                           const EqualityPolicy& eq) {
  if (static_cast<int64_t>(element.perm.size()) != root.k)
    throw Error(ErrorCode::DomainMismatch, "wreath rank does not match the root");
  WreathElement inverse = wreath_inverse(element, eq);

  auto evaluator = [root](const WreathElement& el) {
    return [root, el](const Config& x, int64_t pos) -> int64_t {
      auto off = copy_offset(root, x, pos);
      if (!off) return 0;  // the all-# point stays put
      int64_t o = *off;
      int64_t anchor = pos - o;
      int target = el.perm[static_cast<size_t>(o)];
      int64_t c = eval_on_grid(root, el.tuple[static_cast<size_t>(target)], x, anchor);
      return (target - o) + root.k * c;
    };
  };

  int64_t max_radius = 0, max_disp = 0;
  for (const TfgElement& f : element.tuple) {
    max_radius = std::max(max_radius, f.bounds().radius);
    max_disp = std::max(max_disp, f.bounds().max_disp);
  }
  Bounds bounds{root.k * (max_radius + max_disp) + root.k, root.k * max_disp + root.k};
  auto node = std::make_shared<NamedNode>(root.ambient, bounds, "wreath_embed",
                                          evaluator(element), evaluator(inverse));
  return TfgElement::trusted(node, "wreath of bijections over the k-th root", eq);
}

void for_each_root_periodic(const RootSubshift& root, int64_t p,
                            const std::function<bool(const Config&)>& fn) {
  if (p == 1) {
    if (!fn(Config::constant(root.pad))) return;
  }
  if (p % root.k != 0) return;
  int64_t grid_len = p / root.k;
  for (const Word& w : root.base.periodic_words(grid_len)) {
    for (int64_t r = 0; r < root.k; ++r) {
      Word ambient_word(static_cast<size_t>(p), root.pad);
      for (int64_t i = 0; i < grid_len; ++i)
        ambient_word[static_cast<size_t>(i * root.k + r)] = w[static_cast<size_t>(i)];
      if (!fn(Config::periodic(ambient_word))) return;
    }
  }
}

bool equal_on_root(const RootSubshift& root, const TfgElement& g, const TfgElement& h,
                   int64_t max_period) {
  bool same = true;
  for (int64_t p = 1; p <= max_period && same; ++p) {
    for_each_root_periodic(root, p, [&](const Config& x) {
      if (g.eval_at(x, 0) != h.eval_at(x, 0)) {
        same = false;
        return false;
      }
      return true;
    });
  }
  return same;
}

}  // namespace tfg
