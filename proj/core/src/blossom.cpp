#include "rscsim/blossom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rscsim {

namespace {
constexpr int kFree = -1;
constexpr int kOuter = 0;
constexpr int kInner = 1;
}  // namespace

BlossomMatcher::BlossomMatcher(int n) : n_(n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("matcher needs an even vertex count");
  const int slots = 2 * n + 1;
  g_.assign(slots, std::vector<Edge>(slots));
  for (int u = 0; u < slots; ++u) {
    for (int v = 0; v < slots; ++v) g_[u][v] = {u, v, 0};
  }
  lab_.assign(slots, 0);
  match_.assign(slots, 0);
  slack_.assign(slots, 0);
  st_.assign(slots, 0);
  pa_.assign(slots, 0);
  label_.assign(slots, kFree);
  vis_.assign(slots, 0);
  flower_.assign(slots, {});
  flower_from_.assign(slots, std::vector<int>(n + 1, 0));
}

void BlossomMatcher::set_weight(int u, int v, std::int64_t w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::out_of_range("bad vertex pair");
  }
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  // Stored weights are filled in by solve(); stash the raw value for now.
  g_[u + 1][v + 1].w = g_[v + 1][u + 1].w = w;
}

void BlossomMatcher::update_slack(int u, int x) {
  if (!slack_[x] || delta(g_[u][x]) < delta(g_[slack_[x]][x])) slack_[x] = u;
}

void BlossomMatcher::set_slack(int x) {
  slack_[x] = 0;
  for (int u = 1; u <= n_; ++u) {
    if (g_[u][x].w > 0 && st_[u] != x && label_[st_[u]] == kOuter) update_slack(u, x);
  }
}

void BlossomMatcher::push_outer(int x) {
  if (x <= n_) {
    queue_.push_back(x);
  } else {
    for (int t : flower_[x]) push_outer(t);
  }
}

void BlossomMatcher::set_st(int x, int b) {
  st_[x] = b;
  if (x > n_) {
    for (int t : flower_[x]) set_st(t, b);
  }
}

int BlossomMatcher::path_offset(int b, int xr) {
  const auto it = std::find(flower_[b].begin(), flower_[b].end(), xr);
  int pr = static_cast<int>(it - flower_[b].begin());
  if (pr % 2 == 1) {
    // Walk the cycle the other way so the path from the base has even length.
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    pr = static_cast<int>(flower_[b].size()) - pr;
  }
  return pr;
}

void BlossomMatcher::set_match(int u, int v) {
  match_[u] = g_[u][v].v;
  if (u <= n_) return;
  const Edge e = g_[u][v];
  const int xr = flower_from_[u][e.u];
  const int pr = path_offset(u, xr);
  for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
  set_match(xr, v);
  std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
}

void BlossomMatcher::augment(int u, int v) {
  while (true) {
    const int xnv = st_[match_[u]];
    set_match(u, v);
    if (!xnv) return;
    set_match(xnv, st_[pa_[xnv]]);
    u = st_[pa_[xnv]];
    v = xnv;
  }
}

int BlossomMatcher::find_lca(int u, int v) {
  for (++vis_stamp_; u || v; std::swap(u, v)) {
    if (u == 0) continue;
    if (vis_[u] == vis_stamp_) return u;
    vis_[u] = vis_stamp_;
    u = st_[match_[u]];
    if (u) u = st_[pa_[u]];
  }
  return 0;
}

void BlossomMatcher::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= n_x_ && st_[b]) ++b;
  if (b > n_x_) ++n_x_;

  lab_[b] = 0;
  label_[b] = kOuter;
  match_[b] = match_[lca];
  flower_[b].clear();
  flower_[b].push_back(lca);
  for (int x = u, y; x != lca; x = st_[pa_[y]]) {
    flower_[b].push_back(x);
    flower_[b].push_back(y = st_[match_[x]]);
    push_outer(y);
  }
  std::reverse(flower_[b].begin() + 1, flower_[b].end());
  for (int x = v, y; x != lca; x = st_[pa_[y]]) {
    flower_[b].push_back(x);
    flower_[b].push_back(y = st_[match_[x]]);
    push_outer(y);
  }
  set_st(b, b);

  for (int x = 1; x <= n_x_; ++x) {
    g_[b][x].w = g_[x][b].w = 0;
  }
  std::fill(flower_from_[b].begin(), flower_from_[b].end(), 0);
  for (int xs : flower_[b]) {
    for (int x = 1; x <= n_x_; ++x) {
      if (g_[b][x].w == 0 || delta(g_[xs][x]) < delta(g_[b][x])) {
        g_[b][x] = g_[xs][x];
        g_[x][b] = g_[x][xs];
      }
    }
    if (xs <= n_) {
      flower_from_[b][xs] = xs;
    } else {
      for (int x = 1; x <= n_; ++x) {
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
      }
    }
  }
  set_slack(b);
}

void BlossomMatcher::expand_blossom(int b) {
  for (int t : flower_[b]) set_st(t, t);
  const int xr = flower_from_[b][g_[b][pa_[b]].u];
  const int pr = path_offset(b, xr);
  for (int i = 0; i < pr; i += 2) {
    const int xs = flower_[b][i];
    const int xns = flower_[b][i + 1];
    pa_[xs] = g_[xns][xs].u;
    label_[xs] = kInner;
    label_[xns] = kOuter;
    slack_[xs] = 0;
    set_slack(xns);
    push_outer(xns);
  }
  label_[xr] = kInner;
  pa_[xr] = pa_[b];
  for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
    label_[flower_[b][i]] = kFree;
    set_slack(flower_[b][i]);
  }
  st_[b] = 0;
  flower_[b].clear();
}

bool BlossomMatcher::on_found_edge(const Edge& e) {
  const int u = st_[e.u];
  const int v = st_[e.v];
  if (label_[v] == kFree) {
    pa_[v] = e.u;
    label_[v] = kInner;
    const int nu = st_[match_[v]];
    slack_[v] = slack_[nu] = 0;
    label_[nu] = kOuter;
    push_outer(nu);
  } else if (label_[v] == kOuter) {
    const int lca = find_lca(u, v);
    if (lca == 0) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, lca, v);
  }
  return false;
}

bool BlossomMatcher::grow_and_augment() {
  std::fill(label_.begin(), label_.begin() + n_x_ + 1, kFree);
  std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
  queue_.clear();
  queue_head_ = 0;
  for (int x = 1; x <= n_x_; ++x) {
    if (st_[x] == x && match_[x] == 0) {
      pa_[x] = 0;
      label_[x] = kOuter;
      push_outer(x);
    }
  }
  if (queue_.empty()) return false;

  while (true) {
    while (queue_head_ < queue_.size()) {
      const int u = queue_[queue_head_++];
      if (label_[st_[u]] == kInner) continue;
      for (int v = 1; v <= n_; ++v) {
        if (g_[u][v].w > 0 && st_[u] != st_[v]) {
          if (delta(g_[u][v]) == 0) {
            if (on_found_edge(g_[u][v])) return true;
          } else {
            update_slack(u, st_[v]);
          }
        }
      }
    }

    std::int64_t d = std::numeric_limits<std::int64_t>::max();
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b && label_[b] == kInner) d = std::min(d, lab_[b] / 2);
    }
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && slack_[x]) {
        if (label_[x] == kFree) {
          d = std::min(d, delta(g_[slack_[x]][x]));
        } else if (label_[x] == kOuter) {
          d = std::min(d, delta(g_[slack_[x]][x]) / 2);
        }
      }
    }
    if (d == std::numeric_limits<std::int64_t>::max()) {
      throw std::logic_error("no perfect matching (graph not complete?)");
    }

    for (int u = 1; u <= n_; ++u) {
      switch (label_[st_[u]]) {
        case kOuter: lab_[u] -= d; break;
        case kInner: lab_[u] += d; break;
        default: break;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b && label_[b] != kFree) {
        lab_[b] += label_[b] == kOuter ? 2 * d : -2 * d;
      }
    }

    queue_.clear();
    queue_head_ = 0;
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
          delta(g_[slack_[x]][x]) == 0) {
        if (on_found_edge(g_[slack_[x]][x])) return true;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b) {
      if (st_[b] == b && label_[b] == kInner && lab_[b] == 0) expand_blossom(b);
    }
  }
}

std::vector<int> BlossomMatcher::solve() {
  if (n_ == 0) return {};
  n_x_ = n_;

  // Complement the weights so that minimising the input cost is maximising
  // the internal weight, and double them so every dual stays integral.
  std::int64_t max_w = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      if (u != v) max_w = std::max(max_w, g_[u][v].w);
    }
  }
  const std::int64_t complement = max_w + 1;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      g_[u][v].w = u == v ? 0 : 2 * (complement - g_[u][v].w);
    }
  }

  std::fill(match_.begin(), match_.end(), 0);
  for (int x = 1; x < static_cast<int>(st_.size()); ++x) st_[x] = x <= n_ ? x : 0;
  std::int64_t lab_init = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = 1; v <= n_; ++v) {
      if (u != v) lab_init = std::max(lab_init, g_[u][v].w);
    }
  }
  std::fill(lab_.begin(), lab_.end(), lab_init);
  for (int u = 1; u <= n_; ++u) {
    std::fill(flower_from_[u].begin(), flower_from_[u].end(), 0);
    flower_from_[u][u] = u;
  }

  while (grow_and_augment()) {
  }

  std::vector<int> mate(n_, -1);
  for (int u = 1; u <= n_; ++u) {
    if (match_[u] == 0) throw std::logic_error("vertex left unmatched");
    mate[u - 1] = match_[u] - 1;
  }
  return mate;
}

}  // namespace rscsim
