#include "rtp/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace rtp {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

bool poly_is_zero(const Poly& p) { return poly_degree(p) < 0; }

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(out));
}

Poly poly_scale(const Poly& p, const Rat& c) {
  Poly out = p;
  for (auto& v : out) v *= c;
  return poly_trim(std::move(out));
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(i));
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly rem = poly_trim(a);
  Poly div = poly_trim(b);
  assert(!div.empty() && "division by the zero polynomial");
  const int db = static_cast<int>(div.size()) - 1;
  if (static_cast<int>(rem.size()) - 1 < db) return {Poly{}, rem};
  Poly quot(rem.size() - div.size() + 1, Rat(0));
  const Rat& lead = div.back();
  for (int k = static_cast<int>(rem.size()) - 1 - db; k >= 0; --k) {
    Rat c = rem[k + db] / lead;
    if (c == 0) continue;
    quot[k] = c;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * div[j];
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Poly poly_squarefree_part(const Poly& p) {
  Poly q = poly_trim(p);
  if (q.empty()) return q;
  Poly g = poly_gcd(q, poly_derivative(q));
  Poly s = poly_divmod(q, g).first;
  const Rat lead = s.back();
  for (auto& c : s) c /= lead;
  return s;
}

int poly_valuation(const Poly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<int>(i);
  return 0;
}

namespace {

// Scale by a positive rational so the coefficients become coprime
// integers. Signs are untouched, which is all Sturm counting needs.
Poly make_primitive(Poly p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  Int den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, rat_den(c));
  Int content = 0;
  std::vector<Int> ints;
  ints.reserve(p.size());
  for (const auto& c : p) {
    Int v = rat_num(c) * (den_lcm / rat_den(c));
    ints.push_back(v);
    content = gcd(content, abs(v));
  }
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rat(ints[i] / content);
  return p;
}

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

SturmChain sturm_chain(const Poly& squarefree) {
  SturmChain chain;
  Poly f0 = make_primitive(squarefree);
  assert(!f0.empty());
  chain.seq.push_back(f0);
  if (poly_degree(f0) == 0) return chain;
  Poly f1 = make_primitive(poly_derivative(f0));
  chain.seq.push_back(f1);
  while (true) {
    const Poly& a = chain.seq[chain.seq.size() - 2];
    const Poly& b = chain.seq.back();
    Poly r = poly_divmod(a, b).second;
    if (poly_is_zero(r)) break;
    for (auto& c : r) c = -c;
    chain.seq.push_back(make_primitive(std::move(r)));
  }
  return chain;
}

int sturm_sign_changes_at(const SturmChain& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& p : chain.seq) signs.push_back(sign_of(poly_eval(p, x)));
  return count_sign_changes(signs);
}

int sturm_sign_changes_at_neg_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& p : chain.seq) {
    const int d = poly_degree(p);
    int s = d < 0 ? 0 : sign_of(p[d]);
    if (d > 0 && d % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_sign_changes(signs);
}

int sturm_sign_changes_at_pos_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& p : chain.seq) {
    const int d = poly_degree(p);
    signs.push_back(d < 0 ? 0 : sign_of(p[d]));
  }
  return count_sign_changes(signs);
}

int sturm_count_roots(const SturmChain& chain, const Rat& lo, const Rat& hi) {
  assert(lo < hi);
  assert(poly_eval(chain.seq[0], lo) != 0 && poly_eval(chain.seq[0], hi) != 0);
  return sturm_sign_changes_at(chain, lo) - sturm_sign_changes_at(chain, hi);
}

Rat cauchy_root_bound(const Poly& p) {
  Poly q = poly_trim(p);
  assert(!q.empty());
  Rat sum = 0;
  const Rat lead = abs(q.back());
  for (std::size_t i = 0; i + 1 < q.size(); ++i) sum += abs(q[i]) / lead;
  return sum + 1;
}

namespace {

// Multiplicity of the single root of `p` isolated by (lo, hi) resp.
// pinned at `at` when exact. Walks the gcd chain p, gcd(p,p'), ...:
// the root survives exactly mult-many links.
int multiplicity_in(const Poly& p, bool exact, const Rat& at, const Rat& lo,
                    const Rat& hi) {
  int mult = 0;
  Poly g = poly_trim(p);
  while (poly_degree(g) > 0) {
    bool has_root;
    if (exact) {
      has_root = poly_eval(g, at) == 0;
    } else {
      const Poly s = poly_squarefree_part(g);
      // Isolating-interval endpoints are never roots of the original
      // polynomial, hence not of any divisor in the chain.
      has_root = sturm_count_roots(sturm_chain(s), lo, hi) > 0;
    }
    if (!has_root) break;
    ++mult;
    g = poly_gcd(g, poly_derivative(g));
  }
  return mult;
}

void isolate_rec(const Poly& squarefree, const SturmChain& chain, const Rat& lo,
                 const Rat& hi, std::vector<std::pair<Rat, Rat>>& out) {
  const int n = sturm_count_roots(chain, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (poly_eval(squarefree, mid) == 0) {
    // Rational root hit head-on: record it exactly and nudge the
    // subinterval endpoints off the root before recursing.
    Rat eps = (hi - lo) / 4;
    auto separates = [&](const Rat& e) {
      return poly_eval(squarefree, mid - e) != 0 &&
             poly_eval(squarefree, mid + e) != 0 &&
             sturm_count_roots(chain, mid - e, mid + e) == 1;
    };
    while (!separates(eps)) eps /= 2;
    isolate_rec(squarefree, chain, lo, mid - eps, out);
    out.emplace_back(mid, mid);
    isolate_rec(squarefree, chain, mid + eps, hi, out);
  } else {
    isolate_rec(squarefree, chain, lo, mid, out);
    isolate_rec(squarefree, chain, mid, hi, out);
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& lo,
                                        const Rat& hi) {
  Poly q = poly_trim(p);
  assert(!q.empty());
  std::vector<IsolatedRoot> roots;
  if (poly_degree(q) == 0) return roots;
  const Poly s = poly_squarefree_part(q);
  const SturmChain chain = sturm_chain(s);
  assert(poly_eval(s, lo) != 0 && poly_eval(s, hi) != 0);
  std::vector<std::pair<Rat, Rat>> intervals;
  isolate_rec(s, chain, lo, hi, intervals);
  roots.reserve(intervals.size());
  for (auto& [a, b] : intervals) {
    // Pull endpoints off 0 so callers may form reciprocals. The single
    // simple root of s in (a, b) keeps the endpoint signs opposite.
    while (a != b && (a == 0 || b == 0)) {
      const Rat mid = (a + b) / 2;
      const Rat at_mid = poly_eval(s, mid);
      if (at_mid == 0) {
        a = b = mid;
      } else if (sign_of(at_mid) == sign_of(poly_eval(s, a))) {
        a = mid;
      } else {
        b = mid;
      }
    }
    IsolatedRoot r;
    r.lo = a;
    r.hi = b;
    r.multiplicity = multiplicity_in(q, a == b, a, a, b);
    roots.push_back(std::move(r));
  }
  return roots;
}

}  // namespace rtp
