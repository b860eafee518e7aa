#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "treedens/errors.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"

namespace treedens {

// A shape universe: trees with n leaves in which every internal vertex has
// between 2 and d children, or exactly d when strict.
struct EnumerationSpec {
  int d = 2;
  std::size_t n = 1;
  bool strict = false;

  void validate() const {
    if (d < 2) throw DomainError("degree bound must be at least 2");
    if (n < 1) throw DomainError("leaf count must be at least 1");
  }
};

class TreeStream;

namespace detail {

// Process-wide store of fully enumerated size classes, code-sorted. A
// stream over n-leaf shapes draws its branches from the classes of sizes
// below n, so those get materialized here on first demand; the n-leaf
// class itself is never stored by the stream.
const std::vector<Tree>& cached_shapes(int d, std::size_t n, bool strict);

}  // namespace detail

// Streams every isomorphism class of the universe exactly once, in
// ascending canonical-code order, one tree per next() call.
//
// Generation walks canonical child sequences depth-first: a frame per
// branch position iterates candidate branches in code order across all
// feasible sizes (a merge over the size-class caches), constrained to be
// >= the previous branch in the canonical order. Code order across
// candidate prefixes is string order of the assembled codes, so the
// depth-first walk emits sorted output without ever materializing the
// universe.
class TreeStream {
 public:
  explicit TreeStream(EnumerationSpec spec) : spec_(spec) {
    spec_.validate();
    if (spec_.n == 1) {
      leaf_pending_ = true;
      return;
    }
    push_frame(spec_.n, 0);
  }

  std::optional<Tree> next() {
    if (leaf_pending_) {
      leaf_pending_ = false;
      return Tree::leaf();
    }
    while (!stack_.empty()) {
      Frame& frame = stack_.back();
      const std::size_t depth = stack_.size() - 1;
      const Tree* candidate = take_next(frame);
      if (candidate == nullptr) {
        stack_.pop_back();
        continue;
      }
      const std::size_t after = frame.remaining - candidate->leaf_count();
      const std::size_t count = depth + 1;
      if (after == 0) {
        if (spec_.strict ? count == static_cast<std::size_t>(spec_.d)
                         : count >= 2) {
          chosen_.resize(depth);
          chosen_.push_back(*candidate);
          return Tree(std::vector<Tree>(chosen_.begin(), chosen_.end()));
        }
        continue;
      }
      if (count < static_cast<std::size_t>(spec_.d)) {
        chosen_.resize(depth);
        chosen_.push_back(*candidate);
        push_frame(after, count);
      }
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    std::size_t remaining = 0;
    std::vector<const std::vector<Tree>*> classes;  // index = size, [1..max]
    std::vector<std::size_t> cursors;
    std::size_t min_size = 1;
  };

  // Frame for branch number `branches_before + 1`, with `remaining` leaves
  // still to place.
  void push_frame(std::size_t remaining, std::size_t branches_before) {
    Frame frame;
    frame.remaining = remaining;
    const std::size_t next_branch = branches_before + 1;
    std::size_t future_min;  // branches that must still follow this one
    if (spec_.strict) {
      future_min = static_cast<std::size_t>(spec_.d) - next_branch;
      // Every strict branch has size 1 mod (d-1); the leaves left for the
      // remaining positions must fit that, independent of this choice.
      const std::size_t mod = static_cast<std::size_t>(spec_.d) - 1;
      if (remaining < 1 + future_min ||
          (remaining - 1 - future_min) % mod != 0) {
        stack_.push_back(std::move(frame));  // dead: no classes attached
        return;
      }
    } else {
      future_min = next_branch < 2 ? 1 : 0;
      if (remaining < 1 + future_min) {
        stack_.push_back(std::move(frame));
        return;
      }
    }
    const std::size_t max_size = remaining - future_min;
    if (branches_before > 0)
      frame.min_size = chosen_[branches_before - 1].leaf_count();
    frame.classes.resize(max_size + 1, nullptr);
    frame.cursors.resize(max_size + 1, 0);
    for (std::size_t m = frame.min_size; m <= max_size; ++m) {
      const auto& shapes = detail::cached_shapes(spec_.d, m, spec_.strict);
      frame.classes[m] = &shapes;
      if (m == frame.min_size && branches_before > 0) {
        const std::string& prev_code =
            chosen_[branches_before - 1].canonical_code();
        std::size_t lo = 0, hi = shapes.size();
        while (lo < hi) {  // first candidate with code >= previous branch
          const std::size_t mid = (lo + hi) / 2;
          if (shapes[mid].canonical_code() < prev_code)
            lo = mid + 1;
          else
            hi = mid;
        }
        frame.cursors[m] = lo;
      }
    }
    stack_.push_back(std::move(frame));
  }

  const Tree* take_next(Frame& frame) {
    const Tree* best = nullptr;
    std::size_t best_size = 0;
    for (std::size_t m = frame.min_size; m < frame.classes.size(); ++m) {
      if (frame.classes[m] == nullptr) continue;
      if (frame.cursors[m] >= frame.classes[m]->size()) continue;
      const Tree& head = (*frame.classes[m])[frame.cursors[m]];
      if (best == nullptr || head.canonical_code() < best->canonical_code()) {
        best = &head;
        best_size = m;
      }
    }
    if (best != nullptr) ++frame.cursors[best_size];
    return best;
  }

  EnumerationSpec spec_;
  bool leaf_pending_ = false;
  std::vector<Frame> stack_;
  std::vector<Tree> chosen_;
};

// Materializes a whole universe; meant for small n.
inline std::vector<Tree> all_trees(const EnumerationSpec& spec) {
  TreeStream stream(spec);
  std::vector<Tree> trees;
  while (auto t = stream.next()) trees.push_back(std::move(*t));
  return trees;
}

namespace detail {

inline const std::vector<Tree>& cached_shapes(int d, std::size_t n,
                                              bool strict) {
  static std::map<std::tuple<int, std::size_t, bool>, std::vector<Tree>> cache;
  static std::mutex mutex;
  const auto key = std::make_tuple(d, n, strict);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock; the stream only needs classes of smaller sizes.
  std::vector<Tree> shapes = all_trees(EnumerationSpec{d, n, strict});
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(shapes)).first->second;
}

// Shape counts by leaf number for fixed (d, strict), grown on demand. The
// recurrence runs over branch multisets grouped by size class: taking j
// branches from a class with a(m) shapes contributes binom(a(m)+j-1, j)
// ways, so no shape list is ever materialized.
inline BigInt counted_shapes(int d, std::size_t n, bool strict) {
  static std::map<std::pair<int, bool>, std::vector<BigInt>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  std::vector<BigInt>& counts = cache[{d, strict}];
  if (counts.empty()) counts = {BigInt(0), BigInt(1)};  // counts[1] = 1
  const std::size_t slots = static_cast<std::size_t>(d);
  while (counts.size() <= n) {
    const std::size_t target = counts.size();
    // ways[s][r]: multisets of s branches with r leaves in total, over the
    // size classes handled so far.
    std::vector<std::vector<BigInt>> ways(
        slots + 1, std::vector<BigInt>(target + 1, BigInt(0)));
    ways[0][0] = 1;
    for (std::size_t m = 1; m < target; ++m) {
      if (counts[m] == 0) continue;
      std::vector<std::vector<BigInt>> next(
          slots + 1, std::vector<BigInt>(target + 1, BigInt(0)));
      for (std::size_t s = 0; s <= slots; ++s)
        for (std::size_t r = 0; r <= target; ++r) {
          if (ways[s][r] == 0) continue;
          for (std::size_t j = 0; s + j <= slots && r + j * m <= target; ++j)
            next[s + j][r + j * m] +=
                ways[s][r] *
                multiset_coefficient(counts[m], static_cast<std::int64_t>(j));
        }
      ways = std::move(next);
    }
    BigInt total = 0;
    if (strict) {
      total = ways[slots][target];
    } else {
      for (std::size_t s = 2; s <= slots; ++s) total += ways[s][target];
    }
    counts.push_back(std::move(total));
  }
  return counts[n];
}

}  // namespace detail

// Number of isomorphism classes in the universe, equal to the stream
// length but computed without materialization.
inline BigInt count_trees(const EnumerationSpec& spec) {
  spec.validate();
  return detail::counted_shapes(spec.d, spec.n, spec.strict);
}

// --- on-disk count cache -------------------------------------------------
// One small JSON object per (d, n, strict):
//   {"d": 2, "n": 10, "strict": false, "count": "98"}

inline std::string count_cache_filename(const EnumerationSpec& spec) {
  return "count-d" + std::to_string(spec.d) + "-n" + std::to_string(spec.n) +
         (spec.strict ? "-strict" : "-dary") + ".json";
}

inline std::optional<BigInt> load_cached_count(
    const std::filesystem::path& dir, const EnumerationSpec& spec) {
  const auto path = dir / count_cache_filename(spec);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("d").get<int>() != spec.d ||
        j.at("n").get<std::size_t>() != spec.n ||
        j.at("strict").get<bool>() != spec.strict)
      return std::nullopt;
    return BigInt(j.at("count").get<std::string>());
  } catch (const std::exception&) {
    return std::nullopt;  // stale or corrupt entry; recompute
  }
}

inline void store_cached_count(const std::filesystem::path& dir,
                               const EnumerationSpec& spec,
                               const BigInt& count) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["d"] = spec.d;
  j["n"] = spec.n;
  j["strict"] = spec.strict;
  j["count"] = count.str();
  std::ofstream out(dir / count_cache_filename(spec));
  out << j.dump() << "\n";
}

inline BigInt count_trees_cached(const EnumerationSpec& spec,
                                 const std::optional<std::filesystem::path>&
                                     cache_dir) {
  if (cache_dir) {
    if (auto hit = load_cached_count(*cache_dir, spec)) return *hit;
  }
  BigInt count = count_trees(spec);
  if (cache_dir) store_cached_count(*cache_dir, spec, count);
  return count;
}

}  // namespace treedens
