#include "core/forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/errors.hpp"

namespace mvalg {

namespace {

void require_same_ambient(const QForm& f, const QForm& g) {
  if (!f.ambient || !g.ambient ||
      (f.ambient != g.ambient && !f.ambient->tables_equal(*g.ambient)))
    throw UsageError("forms live over different ambient structures");
}

}  // namespace

QForm make_form(std::shared_ptr<const FiniteMultiring> ambient,
                std::vector<int> entries) {
  if (!ambient) throw UsageError("form needs an ambient structure");
  if (entries.empty()) throw UsageError("form needs at least one entry");
  for (int e : entries)
    if (e < 0 || e >= ambient->size())
      throw UsageError("form entry out of range");
  return QForm{std::move(ambient), std::move(entries)};
}

int form_disc(const QForm& f) {
  int d = f.entries[0];
  for (std::size_t i = 1; i < f.entries.size(); ++i)
    d = f.ambient->times(d, f.entries[i]);
  return d;
}

QForm form_scale(int a, const QForm& f) {
  if (a < 0 || a >= f.ambient->size())
    throw UsageError("scale factor out of range");
  QForm out = f;
  for (int& e : out.entries) e = f.ambient->times(a, e);
  return out;
}

QForm form_sum(const QForm& f, const QForm& g) {
  require_same_ambient(f, g);
  QForm out = f;
  out.entries.insert(out.entries.end(), g.entries.begin(), g.entries.end());
  return out;
}

QForm form_tensor(const QForm& f, const QForm& g) {
  require_same_ambient(f, g);
  QForm out{f.ambient, {}};
  out.entries.reserve(f.entries.size() * g.entries.size());
  for (int a : f.entries)
    for (int b : g.entries) out.entries.push_back(f.ambient->times(a, b));
  return out;
}

QForm form_permute(const QForm& f, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != f.dim())
    throw UsageError("permutation length does not match the form");
  std::vector<char> hit(f.dim(), 0);
  for (int p : perm) {
    if (p < 0 || p >= f.dim() || hit[p])
      throw UsageError("not a permutation");
    hit[p] = 1;
  }
  QForm out{f.ambient, std::vector<int>(f.dim())};
  for (int i = 0; i < f.dim(); ++i) out.entries[i] = f.entries[perm[i]];
  return out;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct IsoSearch {
  const FiniteMultiring& A;
  IsoMode mode;
  std::map<Key, IsoResult> memo;  // keyed on the ordered-canonical pair

  bool base2(int a1, int a2, int b1, int b2) const {
    if (A.times(a1, a2) != A.times(b1, b2)) return false;
    if (mode == IsoMode::Strong) return A.plus(a1, a2) == A.plus(b1, b2);
    return A.plus(a1, a2).intersects(A.plus(b1, b2));
  }

  // A witness for (f,g) turns into one for (g,f): the base facts are
  // symmetric, so swap x with y and the second clause with the third.
  static std::shared_ptr<const WitnessNode> flip(
      const std::shared_ptr<const WitnessNode>& w) {
    if (!w || w->leaf()) return w;
    auto out = std::make_shared<WitnessNode>();
    out->x = w->y;
    out->y = w->x;
    out->zs = w->zs;
    out->sub1 = flip(w->sub1);
    out->sub2 = w->sub3;
    out->sub3 = w->sub2;
    return out;
  }

  IsoResult decide(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    if (lhs.size() != rhs.size()) return {false, nullptr};
    if (lhs.size() == 1) {
      if (lhs[0] != rhs[0]) return {false, nullptr};
      return {true, std::make_shared<WitnessNode>()};
    }
    if (lhs.size() == 2) {
      if (!base2(lhs[0], lhs[1], rhs[0], rhs[1])) return {false, nullptr};
      return {true, std::make_shared<WitnessNode>()};
    }
    if (rhs < lhs) {
      IsoResult res = decide(rhs, lhs);
      return {res.isometric, flip(res.witness)};
    }
    Key key{lhs, rhs};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int n = static_cast<int>(lhs.size());
    std::vector<int> tail_l(lhs.begin() + 1, lhs.end());
    std::vector<int> tail_r(rhs.begin() + 1, rhs.end());
    IsoResult result{false, nullptr};
    for (int x = 0; x < A.size() && !result.isometric; ++x)
      for (int y = 0; y < A.size() && !result.isometric; ++y) {
        if (!base2(lhs[0], x, rhs[0], y)) continue;
        std::vector<int> zs(n - 2, 0);
        while (true) {
          std::vector<int> mid_l(n - 1), mid_r(n - 1);
          mid_l[0] = x;
          mid_r[0] = y;
          std::copy(zs.begin(), zs.end(), mid_l.begin() + 1);
          std::copy(zs.begin(), zs.end(), mid_r.begin() + 1);
          IsoResult s2 = decide(tail_l, mid_l);
          if (s2.isometric) {
            IsoResult s3 = decide(tail_r, mid_r);
            if (s3.isometric) {
              auto w = std::make_shared<WitnessNode>();
              w->x = x;
              w->y = y;
              w->zs = zs;
              w->sub1 = std::make_shared<WitnessNode>();
              w->sub2 = s2.witness;
              w->sub3 = s3.witness;
              result = {true, w};
              break;
            }
          }
          int k = n - 3;
          while (k >= 0 && ++zs[k] == A.size()) {
            zs[k] = 0;
            --k;
          }
          if (k < 0) break;
        }
      }
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

IsoResult iso_decide(const QForm& f, const QForm& g, IsoMode mode) {
  require_same_ambient(f, g);
  if (f.dim() != g.dim()) return {false, nullptr};
  IsoSearch search{*f.ambient, mode, {}};
  return search.decide(f.entries, g.entries);
}

bool iso_oracle(const QForm& f, const QForm& g, IsoMode mode,
                std::size_t pair_limit) {
  require_same_ambient(f, g);
  if (f.dim() != g.dim()) return false;
  const FiniteMultiring& A = *f.ambient;
  const int n = f.dim();
  const int m = A.size();
  if (n == 1) return f.entries[0] == g.entries[0];

  std::size_t tuples = 1;
  for (int i = 0; i < n; ++i) {
    tuples *= m;
    if (tuples > pair_limit) throw UsageError("iso_oracle: resource bound");
  }
  if (tuples > pair_limit / tuples)
    throw UsageError("iso_oracle: resource bound");

  auto base2 = [&](int a1, int a2, int b1, int b2) {
    if (A.times(a1, a2) != A.times(b1, b2)) return false;
    if (mode == IsoMode::Strong) return A.plus(a1, a2) == A.plus(b1, b2);
    return A.plus(a1, a2).intersects(A.plus(b1, b2));
  };

  std::size_t sz2 = std::size_t(m) * m;
  std::vector<char> rel(sz2 * sz2);
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2)
      for (int b1 = 0; b1 < m; ++b1)
        for (int b2 = 0; b2 < m; ++b2)
          rel[(a1 * m + a2) * sz2 + (b1 * m + b2)] = base2(a1, a2, b1, b2);

  std::size_t count = sz2;
  for (int k = 3; k <= n; ++k) {
    std::size_t next_count = count * m;          // tuples of length k
    std::size_t tail_count = count;              // tuples of length k-1
    std::vector<char> next(next_count * next_count);
    std::size_t z_count = tail_count / m;        // tuples of length k-2
    for (std::size_t t = 0; t < next_count; ++t) {
      int a1 = static_cast<int>(t / tail_count);
      std::size_t tail_t = t % tail_count;
      for (std::size_t u = 0; u < next_count; ++u) {
        int b1 = static_cast<int>(u / tail_count);
        std::size_t tail_u = u % tail_count;
        bool found = false;
        for (int x = 0; x < m && !found; ++x)
          for (int y = 0; y < m && !found; ++y) {
            if (!rel[(std::size_t(a1) * m + x) * sz2 + (std::size_t(b1) * m + y)])
              continue;
            for (std::size_t z = 0; z < z_count && !found; ++z) {
              std::size_t mid_l = std::size_t(x) * z_count + z;
              std::size_t mid_r = std::size_t(y) * z_count + z;
              found = rel[tail_t * count + mid_l] &&
                      rel[tail_u * count + mid_r];
            }
          }
        next[t * next_count + u] = found;
      }
    }
    rel = std::move(next);
    count = next_count;
  }

  std::size_t fi = 0, gi = 0;
  for (int i = 0; i < n; ++i) {
    fi = fi * m + f.entries[i];
    gi = gi * m + g.entries[i];
  }
  return rel[fi * count + gi];
}

bool witness_valid(const QForm& f, const QForm& g, IsoMode mode,
                   const WitnessNode& w) {
  require_same_ambient(f, g);
  const FiniteMultiring& A = *f.ambient;
  if (f.dim() != g.dim()) return false;
  auto base2 = [&](int a1, int a2, int b1, int b2) {
    if (A.times(a1, a2) != A.times(b1, b2)) return false;
    if (mode == IsoMode::Strong) return A.plus(a1, a2) == A.plus(b1, b2);
    return A.plus(a1, a2).intersects(A.plus(b1, b2));
  };
  if (f.dim() == 1) return f.entries[0] == g.entries[0];
  if (f.dim() == 2)
    return base2(f.entries[0], f.entries[1], g.entries[0], g.entries[1]);
  if (w.leaf() || static_cast<int>(w.zs.size()) != f.dim() - 2 || !w.sub2 ||
      !w.sub3 || w.x < 0 || w.x >= A.size() || w.y < 0 || w.y >= A.size())
    return false;
  for (int z : w.zs)
    if (z < 0 || z >= A.size()) return false;
  if (!base2(f.entries[0], w.x, g.entries[0], w.y)) return false;
  std::vector<int> tail_l(f.entries.begin() + 1, f.entries.end());
  std::vector<int> tail_r(g.entries.begin() + 1, g.entries.end());
  std::vector<int> mid_l{w.x}, mid_r{w.y};
  mid_l.insert(mid_l.end(), w.zs.begin(), w.zs.end());
  mid_r.insert(mid_r.end(), w.zs.begin(), w.zs.end());
  return witness_valid(QForm{f.ambient, tail_l}, QForm{f.ambient, mid_l},
                       mode, *w.sub2) &&
         witness_valid(QForm{f.ambient, tail_r}, QForm{f.ambient, mid_r},
                       mode, *w.sub3);
}

std::string form_render(const QForm& f) {
  std::string s = "<";
  for (int i = 0; i < f.dim(); ++i) {
    if (i) s += ",";
    s += f.ambient->elems[f.entries[i]];
  }
  return s + ">";
}

namespace {

void render_node(std::ostringstream& os, const FiniteMultiring& A,
                 const std::vector<int>& lhs, const std::vector<int>& rhs,
                 const WitnessNode& w, int indent) {
  std::string pad(indent * 2, ' ');
  auto show = [&](const std::vector<int>& v) {
    std::string s = "<";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += A.elems[v[i]];
    }
    return s + ">";
  };
  os << pad << show(lhs) << " ~ " << show(rhs);
  if (lhs.size() <= 2 || w.leaf()) {
    os << "  [base]\n";
    return;
  }
  os << "  via x=" << A.elems[w.x] << " y=" << A.elems[w.y] << " z=(";
  for (std::size_t i = 0; i < w.zs.size(); ++i) {
    if (i) os << ",";
    os << A.elems[w.zs[i]];
  }
  os << ")\n";
  std::vector<int> tail_l(lhs.begin() + 1, lhs.end());
  std::vector<int> tail_r(rhs.begin() + 1, rhs.end());
  std::vector<int> mid_l{w.x}, mid_r{w.y};
  mid_l.insert(mid_l.end(), w.zs.begin(), w.zs.end());
  mid_r.insert(mid_r.end(), w.zs.begin(), w.zs.end());
  render_node(os, A, {lhs[0], w.x}, {rhs[0], w.y}, *w.sub1, indent + 1);
  render_node(os, A, tail_l, mid_l, *w.sub2, indent + 1);
  render_node(os, A, tail_r, mid_r, *w.sub3, indent + 1);
}

}  // namespace

std::string witness_render(const QForm& f, const QForm& g, IsoMode mode,
                           const WitnessNode& w) {
  std::ostringstream os;
  os << (mode == IsoMode::Strong ? "strong isometry\n" : "weak isometry\n");
  render_node(os, *f.ambient, f.entries, g.entries, w, 0);
  return os.str();
}

}  // namespace mvalg
