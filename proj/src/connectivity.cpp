#include "matalg/connectivity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace matalg {

namespace detail {

namespace {

Pattern::Row mask_of(std::size_t n) {
  return n >= 64 ? ~Pattern::Row{0} : ((Pattern::Row{1} << n) - 1);
}

}  // namespace

Pattern::Row forward_reach(std::span<Pattern::Row const> rows, int source) {
  Pattern::Row reached = Pattern::Row{1} << source;
  Pattern::Row frontier = reached;
  while (frontier) {
    Pattern::Row next = 0;
    for (Pattern::Row f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

Pattern::Row backward_reach(std::span<Pattern::Row const> rows, int target) {
  Pattern::Row reached = Pattern::Row{1} << target;
  Pattern::Row const all = mask_of(rows.size());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Pattern::Row rest = all & ~reached; rest; rest &= rest - 1) {
      int const v = std::countr_zero(rest);
      if (rows[static_cast<std::size_t>(v)] & reached) {
        reached |= Pattern::Row{1} << v;
        grew = true;
      }
    }
  }
  return reached;
}

bool strongly_connected_rows(std::span<Pattern::Row const> rows) {
  Pattern::Row const all = mask_of(rows.size());
  return forward_reach(rows, 0) == all && backward_reach(rows, 0) == all;
}

bool minimal_strongly_connected_rows(std::span<Pattern::Row const> rows) {
  if (!strongly_connected_rows(rows)) return false;
  std::array<Pattern::Row, kMaxDimension> scratch{};
  std::copy(rows.begin(), rows.end(), scratch.begin());
  std::span<Pattern::Row const> view(scratch.data(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (Pattern::Row r = rows[k]; r; r &= r - 1) {
      Pattern::Row const bit = r & (~r + 1);
      scratch[k] &= ~bit;
      bool const still = strongly_connected_rows(view);
      scratch[k] |= bit;
      if (still) return false;
    }
  }
  return true;
}

}  // namespace detail

namespace {

Partition blocks_from_labels(std::vector<int> const& label, int count) {
  Partition blocks(static_cast<std::size_t>(count));
  for (int v = 0; v < static_cast<int>(label.size()); ++v) {
    blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

bool strongly_connected(Pattern const& g) {
  return detail::strongly_connected_rows(g.rows());
}

bool weakly_connected(Pattern const& g) { return weak_components(g).size() == 1; }

Partition weak_components(Pattern const& g) {
  Pattern const sym = g | g.transposed();
  int const n = g.n();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (label[static_cast<std::size_t>(v)] != -1) continue;
    for (Pattern::Row r = detail::forward_reach(sym.rows(), v); r; r &= r - 1) {
      label[static_cast<std::size_t>(std::countr_zero(r))] = count;
    }
    ++count;
  }
  return blocks_from_labels(label, count);
}

Partition strong_components(Pattern const& g) {
  int const n = g.n();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0;
  int count = 0;

  // Iterative Tarjan: each frame is (vertex, successors not yet explored).
  struct Frame {
    int v;
    Pattern::Row pending;
  };
  std::vector<Frame> frames;

  auto open = [&](int v) {
    auto const sv = static_cast<std::size_t>(v);
    index[sv] = low[sv] = next_index++;
    stack.push_back(v);
    on_stack[sv] = true;
    frames.push_back({v, g.row(v) & ~(Pattern::Row{1} << v)});
  };

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    open(root);
    while (!frames.empty()) {
      Frame& top = frames.back();
      auto const sv = static_cast<std::size_t>(top.v);
      if (top.pending) {
        int const w = std::countr_zero(top.pending);
        top.pending &= top.pending - 1;
        auto const sw = static_cast<std::size_t>(w);
        if (index[sw] == -1) {
          open(w);
        } else if (on_stack[sw]) {
          low[sv] = std::min(low[sv], index[sw]);
        }
        continue;
      }
      if (low[sv] == index[sv]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          label[static_cast<std::size_t>(w)] = count;
        } while (w != top.v);
        ++count;
      }
      int const finished = top.v;
      frames.pop_back();
      if (!frames.empty()) {
        auto const sp = static_cast<std::size_t>(frames.back().v);
        low[sp] = std::min(low[sp], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return blocks_from_labels(label, count);
}

bool minimal_strongly_connected(Pattern const& g) {
  if (g.has_loops()) return false;
  return detail::minimal_strongly_connected_rows(g.rows());
}

}  // namespace matalg
