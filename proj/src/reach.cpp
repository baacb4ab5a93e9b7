#include "lwo/reach.hpp"

#include <algorithm>

#include "lwo/error.hpp"

namespace lwo {

namespace {
// Below this many nodes the threading overhead dominates.
constexpr std::size_t kParallelThreshold = 256;
}  // namespace

bool BitMatrix::orRow(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  std::uint64_t changed = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t next = d[w] | s[w];
    changed |= next ^ d[w];
    d[w] = next;
  }
  return changed != 0;
}

bool BitMatrix::rowsIntersect(std::size_t a, std::size_t b) const {
  const std::uint64_t* x = row(a);
  const std::uint64_t* y = row(b);
  for (std::size_t w = 0; w < words_; ++w)
    if (x[w] & y[w]) return true;
  return false;
}

BitMatrix reachabilityReference(const Adjacency& succ) {
  const std::size_t n = succ.size();
  BitMatrix r(n);
  for (std::size_t v = 0; v < n; ++v)
    for (int w : succ[v]) r.set(v, static_cast<std::size_t>(w));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r.test(i, k)) r.orRow(i, k);
  return r;
}

std::vector<int> heights(const Adjacency& succ) {
  const std::size_t n = succ.size();
  std::vector<int> h(n, -1);
  std::vector<int> pending(n, 0);
  Adjacency pred(n);
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = static_cast<int>(succ[v].size());
    for (int w : succ[v]) pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
  }
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (pending[v] == 0) {
      h[v] = 0;
      ready.push_back(static_cast<int>(v));
    }
  std::size_t done = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++done;
    for (int u : pred[static_cast<std::size_t>(v)]) {
      auto& hu = h[static_cast<std::size_t>(u)];
      hu = std::max(hu, h[static_cast<std::size_t>(v)] + 1);
      if (--pending[static_cast<std::size_t>(u)] == 0) ready.push_back(u);
    }
  }
  if (done != n) throw Error("reachability kernel called on a cyclic graph");
  return h;
}

BitMatrix reachability(const Adjacency& succ) {
  const std::size_t n = succ.size();
  BitMatrix r(n);
  if (n == 0) return r;
  std::vector<int> h = heights(succ);
  int maxHeight = *std::max_element(h.begin(), h.end());
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(maxHeight) + 1);
  for (std::size_t v = 0; v < n; ++v) levels[static_cast<std::size_t>(h[v])].push_back(static_cast<int>(v));

  // Every successor sits on a strictly lower level, so rows on one level only
  // read rows that are already final.
  for (const auto& level : levels) {
    const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 16) if (n > kParallelThreshold)
    for (long k = 0; k < count; ++k) {
      const auto v = static_cast<std::size_t>(level[static_cast<std::size_t>(k)]);
      for (int w : succ[v]) {
        r.set(v, static_cast<std::size_t>(w));
        r.orRow(v, static_cast<std::size_t>(w));
      }
    }
  }
  return r;
}

std::vector<std::vector<bool>> redundantArcs(const Adjacency& succ, const BitMatrix& reach) {
  const std::size_t n = succ.size();
  std::vector<std::vector<bool>> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v].assign(succ[v].size(), false);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16) if (n > kParallelThreshold)
  for (long iv = 0; iv < count; ++iv) {
    const auto v = static_cast<std::size_t>(iv);
    const auto& s = succ[v];
    for (std::size_t a = 0; a < s.size(); ++a) {
      const auto target = static_cast<std::size_t>(s[a]);
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (b == a || s[b] == s[a]) continue;
        if (reach.test(static_cast<std::size_t>(s[b]), target)) {
          out[v][a] = true;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<bool>> redundantArcsReference(const Adjacency& succ) {
  const std::size_t n = succ.size();
  std::vector<std::vector<bool>> out(n);
  std::vector<char> seen(n);
  std::vector<int> stack;
  for (std::size_t v = 0; v < n; ++v) {
    out[v].assign(succ[v].size(), false);
    for (std::size_t a = 0; a < succ[v].size(); ++a) {
      // Search from v while refusing arc a itself.
      std::fill(seen.begin(), seen.end(), 0);
      stack.clear();
      for (std::size_t b = 0; b < succ[v].size(); ++b)
        if (b != a && succ[v][b] != succ[v][a]) stack.push_back(succ[v][b]);
      bool found = false;
      while (!stack.empty() && !found) {
        int x = stack.back();
        stack.pop_back();
        if (x == succ[v][a]) found = true;
        if (seen[static_cast<std::size_t>(x)]) continue;
        seen[static_cast<std::size_t>(x)] = 1;
        for (int y : succ[static_cast<std::size_t>(x)]) stack.push_back(y);
      }
      out[v][a] = found;
    }
  }
  return out;
}

}  // namespace lwo
