#include "degpow/exact/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "degpow/core/parallel.hpp"

namespace degpow::exact {

namespace {

void require_order(int n, int r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (n < r) throw std::invalid_argument("n must be at least r");
}

// Running maximum together with every candidate tied with it.
class TieSet {
public:
  void offer(double value, const ClassSizes& sizes) {
    if (members_.empty() || value > best_) {
      best_ = value;
      std::erase_if(members_, [&](const auto& m) { return !tied(m.first); });
    }
    if (tied(value)) members_.emplace_back(value, sizes);
  }

  void merge(TieSet other) {
    for (auto& [value, sizes] : other.members_) offer(value, sizes);
  }

  bool empty() const { return members_.empty(); }
  double best() const { return best_; }
  std::vector<std::pair<double, ClassSizes>>& members() { return members_; }

private:
  bool tied(double value) const {
    return nearly_equal(value, best_, NumericPolicy::tie_tolerance);
  }

  double best_ = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, ClassSizes>> members_;
};

ExactResult finalize(TieSet ties, int r, double p, int n, std::uint64_t candidates) {
  auto& members = ties.members();
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  members.erase(std::unique(members.begin(), members.end(),
                            [](const auto& a, const auto& b) { return a.second == b.second; }),
                members.end());

  ExactResult result;
  result.candidates = candidates;

  // Floating-point ties between distinct partitions are re-decided exactly.
  if (auto ip = integral_exponent(p)) {
    std::vector<std::optional<ExactInt>> exact;
    exact.reserve(members.size());
    bool ok = true;
    for (const auto& m : members) {
      exact.push_back(exact_f_complete_multipartite(m.second, *ip));
      ok = ok && exact.back().has_value();
    }
    if (ok) {
      ExactInt top = 0;
      for (const auto& e : exact) top = std::max(top, *e);
      std::vector<std::pair<double, ClassSizes>> kept;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (*exact[i] == top) kept.push_back(members[i]);
      members = std::move(kept);
      result.exact_checked = true;
      result.exact_value = top;
    }
  }

  result.value = -std::numeric_limits<double>::infinity();
  for (const auto& m : members) {
    result.value = std::max(result.value, m.first);
    result.maximizers.push_back(m.second);
  }
  const ClassSizes turan = turan_class_sizes(n, r);
  result.turan_optimal =
      std::find(result.maximizers.begin(), result.maximizers.end(), turan) !=
      result.maximizers.end();
  return result;
}

} // namespace

PartitionStream::PartitionStream(int n, int r, int min_part) {
  if (r < 1) throw std::invalid_argument("PartitionStream needs at least one part");
  if (min_part < 1) throw std::invalid_argument("min_part must be positive");
  const long long last = static_cast<long long>(n) - static_cast<long long>(r - 1) * min_part;
  if (last < min_part) {
    done_ = true;
    return;
  }
  current_.assign(r, min_part);
  current_.back() = static_cast<int>(last);
}

bool PartitionStream::advance() {
  const int r = static_cast<int>(current_.size());
  long long rest = current_.back();
  for (int i = r - 2; i >= 0; --i) {
    rest += current_[i];
    const long long v = current_[i] + 1;
    if (v * (r - i) <= rest) {
      for (int j = i; j < r - 1; ++j) current_[j] = static_cast<int>(v);
      current_.back() = static_cast<int>(rest - v * (r - 1 - i));
      return true;
    }
  }
  return false;
}

std::optional<ClassSizes> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return ClassSizes(current_);
}

std::vector<ClassSizes> enumerate_class_sizes(int n, int r) {
  require_order(n, r);
  std::vector<ClassSizes> out;
  PartitionStream stream(n, r);
  while (auto sizes = stream.next()) out.push_back(std::move(*sizes));
  return out;
}

std::uint64_t count_class_sizes(int n, int r) {
  // Conjugation: partitions of n into exactly r parts correspond to
  // partitions of n - r into parts of size at most r.
  if (r < 1 || n < r) return 0;
  const int m = n - r;
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= std::min(r, m); ++part) {
    for (int total = part; total <= m; ++total) {
      std::uint64_t sum;
      if (__builtin_add_overflow(ways[total], ways[total - part], &sum)) sum = saturated;
      ways[total] = sum;
    }
  }
  return ways[m];
}

ExactResult phi_exact(int r, double p, int n, const ExactOptions& options) {
  Parameters{r, p, n}.validate();
  const std::uint64_t count = count_class_sizes(n, r);
  if (count > options.cap) {
    throw ResourceError("partition count " + std::to_string(count) + " exceeds cap " +
                            std::to_string(options.cap),
                        count, options.cap);
  }

  // One chunk per value of the smallest class; chunks are merged in order.
  const int chunks = n / r;
  struct Chunk {
    TieSet ties;
    std::uint64_t seen = 0;
  };
  auto results = run_indexed<Chunk>(
      static_cast<std::size_t>(chunks), resolve_workers(options.workers), [&](std::size_t idx) {
        const int smallest = static_cast<int>(idx) + 1;
        Chunk chunk;
        std::vector<int> sizes(r);
        sizes[0] = smallest;
        PartitionStream tail(n - smallest, r - 1, smallest);
        while (auto rest = tail.next()) {
          std::copy(rest->sizes().begin(), rest->sizes().end(), sizes.begin() + 1);
          ClassSizes candidate(sizes);
          chunk.ties.offer(f_complete_multipartite(candidate, p), candidate);
          ++chunk.seen;
        }
        return chunk;
      });

  TieSet all;
  std::uint64_t seen = 0;
  for (auto& chunk : results) {
    all.merge(std::move(chunk.ties));
    seen += chunk.seen;
  }
  return finalize(std::move(all), r, p, n, seen);
}

ExactResult phi_restricted(int r, double p, int n) {
  Parameters{r, p, n}.validate();
  TieSet ties;
  std::uint64_t seen = 0;
  std::vector<int> sizes(r);
  for (int k = 1; static_cast<long long>(r - 1) * k < n; ++k) {
    for (int bumped = 0; bumped <= r - 2; ++bumped) {
      const long long free_class = n - static_cast<long long>(r - 1) * k - bumped;
      if (free_class < 1) break;
      for (int i = 0; i < r - 1; ++i) sizes[i] = (i < bumped) ? k + 1 : k;
      sizes[r - 1] = static_cast<int>(free_class);
      auto candidate = ClassSizes::from_unsorted(sizes);
      ties.offer(f_complete_multipartite(candidate, p), candidate);
      ++seen;
    }
  }
  return finalize(std::move(ties), r, p, n, seen);
}

double phi_upper_bound(int r, double p, int n) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
  return (r / (p + 1.0)) * std::pow(p / (p + 1.0), p) * std::pow(static_cast<double>(n), p + 1.0);
}

std::optional<int> turan_onset(int r, double p, int n_lo, int n_hi, const ExactOptions& options) {
  if (n_lo > n_hi) throw std::invalid_argument("turan_onset needs n_lo <= n_hi");
  std::optional<int> onset;
  for (int n = n_hi; n >= std::max(n_lo, r); --n) {
    if (!phi_exact(r, p, n, options).turan_optimal) break;
    onset = n;
  }
  return onset;
}

} // namespace degpow::exact
