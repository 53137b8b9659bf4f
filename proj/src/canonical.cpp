#include "tourney/canonical.hpp"

#include <array>
#include <cstdint>

namespace tourney {

namespace {

constexpr int kMax = Tournament::kMaxVertices;

class MaxCodeSearch {
 public:
  MaxCodeSearch(const std::uint64_t* out, int n) : out_(out), n_(n) {}
  explicit MaxCodeSearch(const Tournament& t) : MaxCodeSearch(nullptr, t.size()) {
    for (int v = 0; v < n_; ++v) own_[v] = t.out_mask(v);
    out_ = own_.data();
  }

  // Full search; afterwards best_order() holds the maximising ordering.
  void run() {
    best_len_ = 0;
    abort_on_greater_ = false;
    for (int v = 0; v < n_; ++v) cols_[0][v] = 0;
    dfs(0, 0);
  }

  // Searches for any ordering beating the identity; true if none exists.
  bool identity_is_max() {
    for (int d = 0; d < n_; ++d) {
      std::uint64_t c = 0;
      for (int i = 0; i < d; ++i) c = (c << 1) | ((out_[i] >> d) & 1U);
      best_[d] = c;
    }
    best_len_ = n_;
    abort_on_greater_ = true;
    found_greater_ = false;
    for (int v = 0; v < n_; ++v) cols_[0][v] = 0;
    dfs(0, 0);
    return !found_greater_;
  }

  std::vector<int> best_order() const { return {best_order_.begin(), best_order_.begin() + n_}; }

 private:
  void dfs(int d, std::uint64_t used) {
    if (found_greater_) return;
    if (d == n_) {
      best_order_ = order_;
      best_len_ = n_;
      return;
    }
    std::uint64_t mx = 0;
    bool any = false;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (!any || cols_[d][v] > mx) mx = cols_[d][v];
      any = true;
    }
    if (d < best_len_) {
      if (mx < best_[d]) return;
      if (mx > best_[d]) {
        if (abort_on_greater_) {
          found_greater_ = true;
          return;
        }
        best_[d] = mx;
        best_len_ = d + 1;
      }
    } else {
      best_[d] = mx;
      best_len_ = d + 1;
    }
    for (int v = 0; v < n_; ++v) {
      if (((used >> v) & 1U) || cols_[d][v] != mx) continue;
      order_[d] = v;
      const std::uint64_t out = out_[v];
      for (int w = 0; w < n_; ++w) cols_[d + 1][w] = (cols_[d][w] << 1) | ((out >> w) & 1U);
      dfs(d + 1, used | (std::uint64_t{1} << v));
      if (found_greater_) return;
    }
  }

  const std::uint64_t* out_;
  int n_;
  std::array<std::uint64_t, kMax> own_{};
  int best_len_ = 0;
  bool abort_on_greater_ = false;
  bool found_greater_ = false;
  std::array<std::uint64_t, kMax> best_{};
  std::array<int, kMax> order_{};
  std::array<int, kMax> best_order_{};
  std::array<std::array<std::uint64_t, kMax>, kMax + 1> cols_{};
};

}  // namespace

std::vector<int> canonical_order(const Tournament& t) {
  MaxCodeSearch s(t);
  s.run();
  return s.best_order();
}

Tournament canonical_tournament(const Tournament& t) {
  const auto order = canonical_order(t);
  return t.relabeled(order);
}

std::string labelled_code(const Tournament& t) {
  const int n = t.size();
  std::string code(1, static_cast<char>(n));
  unsigned char cur = 0;
  int filled = 0;
  for (int d = 1; d < n; ++d)
    for (int i = 0; i < d; ++i) {
      cur = static_cast<unsigned char>((cur << 1) | (t.beats(i, d) ? 1U : 0U));
      if (++filled == 8) {
        code.push_back(static_cast<char>(cur));
        cur = 0;
        filled = 0;
      }
    }
  if (filled > 0) code.push_back(static_cast<char>(cur << (8 - filled)));
  return code;
}

std::string canonical_form(const Tournament& t) { return labelled_code(canonical_tournament(t)); }

bool is_canonical(const Tournament& t) {
  MaxCodeSearch s(t);
  return s.identity_is_max();
}

namespace detail {

bool identity_is_max_code(const std::uint64_t* out, int n) {
  MaxCodeSearch s(out, n);
  return s.identity_is_max();
}

}  // namespace detail

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  return a.size() == b.size() && score_sequence(a) == score_sequence(b) &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace tourney
