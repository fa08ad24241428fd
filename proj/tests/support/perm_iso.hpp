#pragma once
// Simultaneous conjugacy of permutation tuples generating transitive groups,
// by trying every image of one point and propagating along the generators.

#include <optional>
#include <vector>

#include "hecke/perm.hpp"

namespace hecke::testing {

/// Bijection p with p(a[i](x)) = b[i](p(x)) for all i and x, if one exists.
inline std::optional<std::vector<int>> tuple_isomorphism(const std::vector<Permutation>& a,
                                                         const std::vector<Permutation>& b) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  const int n = a.front().degree();
  for (const auto& x : b)
    if (x.degree() != n) return std::nullopt;
  for (int target = 0; target < n; ++target) {
    std::vector<int> p(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    p[0] = target;
    used[static_cast<std::size_t>(target)] = 1;
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t i = 0; ok && i < a.size(); ++i) {
        const int ax = a[i](x), bx = b[i](p[static_cast<std::size_t>(x)]);
        int& slot = p[static_cast<std::size_t>(ax)];
        if (slot == -1) {
          if (used[static_cast<std::size_t>(bx)]) {
            ok = false;
          } else {
            slot = bx;
            used[static_cast<std::size_t>(bx)] = 1;
            queue.push_back(ax);
          }
        } else if (slot != bx) {
          ok = false;
        }
      }
    }
    if (ok && static_cast<int>(queue.size()) == n) return p;
  }
  return std::nullopt;
}

/// Parses cycle notation in which "k'" stands for the barred dart k; barred
/// darts are numbered after the plain ones.
Permutation parse_barred(std::string_view text, int plain, int degree);

}  // namespace hecke::testing
