#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "rshds/constructions.hpp"
#include "rshds/errors.hpp"

namespace rshds {

namespace {

struct Pair {
  Element first;   // lies in coset `cosetFirst`
  Element second;  // = first^{-1}
  std::size_t cosetFirst;
  std::size_t cosetSecond;
};

struct Problem {
  FiniteGroup group;
  std::size_t h = 0;
  std::int64_t lambda = 0;
  std::vector<Pair> pairs;
  std::uint64_t budget = 0;
};

class Searcher {
 public:
  Searcher(const Problem& p, std::atomic<std::uint64_t>& nodes)
      : p_(p), nodes_(nodes), count_(p.group.order(), 0), cosetFill_(p.h, 0) {}

  bool apply(std::size_t pairIndex, bool takeSecond) {
    const Pair& pr = p_.pairs[pairIndex];
    const Element z = takeSecond ? pr.second : pr.first;
    const std::size_t c = takeSecond ? pr.cosetSecond : pr.cosetFirst;
    if (cosetFill_[c] * 2 >= p_.h) return false;
    const FiniteGroup& g = p_.group;
    const Element zi = g.inverse(z);
    bool ok = true;
    std::size_t done = 0;
    for (; done < chosen_.size(); ++done) {
      const Element d = chosen_[done];
      const Element a = g.multiply(z, g.inverse(d));
      const Element b = g.multiply(d, zi);
      ++count_[a];
      ++count_[b];
      if (count_[a] > p_.lambda || count_[b] > p_.lambda) {
        ++done;
        ok = false;
        break;
      }
    }
    if (!ok) {
      rollback(z, done);
      return false;
    }
    chosen_.push_back(z);
    ++cosetFill_[c];
    return true;
  }

  void undo(std::size_t pairIndex, bool takeSecond) {
    const Pair& pr = p_.pairs[pairIndex];
    const Element z = chosen_.back();
    chosen_.pop_back();
    --cosetFill_[takeSecond ? pr.cosetSecond : pr.cosetFirst];
    rollback(z, chosen_.size());
  }

  /// Collect feasible decision prefixes of length `depth` instead of descending.
  void collectPrefixes(std::size_t depth, std::vector<std::vector<bool>>& out) {
    if (path_.size() == depth) {
      out.push_back(path_);
      return;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > p_.budget) throw Stop{};
    const std::size_t index = path_.size();
    for (bool second : {false, true}) {
      if (!apply(index, second)) continue;
      path_.push_back(second);
      collectPrefixes(depth, out);
      path_.pop_back();
      undo(index, second);
    }
  }

  void dfs(std::size_t index) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > p_.budget) throw Stop{};
    if (index == p_.pairs.size()) {
      for (std::size_t x = 1; x < count_.size(); ++x)
        if (count_[x] != p_.lambda) return;
      std::vector<Element> d = chosen_;
      std::sort(d.begin(), d.end());
      solutions_.push_back(std::move(d));
      return;
    }
    for (bool second : {false, true}) {
      if (!apply(index, second)) continue;
      dfs(index + 1);
      undo(index, second);
    }
  }

  std::vector<std::vector<Element>>& solutions() { return solutions_; }

  struct Stop {};

 private:
  void rollback(Element z, std::size_t upto) {
    const FiniteGroup& g = p_.group;
    const Element zi = g.inverse(z);
    for (std::size_t i = 0; i < upto; ++i) {
      const Element d = chosen_[i];
      --count_[g.multiply(z, g.inverse(d))];
      --count_[g.multiply(d, zi)];
    }
  }

  const Problem& p_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<std::int64_t> count_;
  std::vector<std::size_t> cosetFill_;
  std::vector<Element> chosen_;
  std::vector<bool> path_;
  std::vector<std::vector<Element>> solutions_;
};

Problem buildProblem(const FiniteGroup& group, const Subgroup& subgroupH, std::uint64_t budget,
                     bool& triviallyEmpty) {
  Problem p{group, subgroupH.order(), parameterFormulas(static_cast<std::int64_t>(subgroupH.order())).lambda, {},
            budget};
  const CosetDecomposition dec = cosets(group, subgroupH);
  triviallyEmpty = false;
  // Pairs grouped by inverse-coset pairs {Hg, Hg^{-1}}, lower coset first.
  for (std::size_t c = 1; c < dec.index(); ++c) {
    const std::size_t ci = dec.cosetOf[group.inverse(dec.transversal[c])];
    if (ci < c) continue;
    for (Element x : dec.members(c)) {
      const Element xi = group.inverse(x);
      if (x == xi) {
        triviallyEmpty = true;  // an involution outside H lies in D and D^{-1} at once
        return p;
      }
      if (ci == c && xi < x) continue;
      p.pairs.push_back({x, xi, c, ci});
    }
  }
  return p;
}

}  // namespace

SearchResult exhaustiveSearch(const FiniteGroup& group, const Subgroup& subgroupH, const SearchOptions& options) {
  const std::size_t h = subgroupH.order();
  if (h * h != group.order())
    throw InvalidArgument("search: |G| = " + std::to_string(group.order()) + " is not |H|^2 = " +
                          std::to_string(h * h));
  if (h % 2 != 0) throw InvalidArgument("search: |H| must be even");
  if (group.order() > 64 && !options.allowLargeGroups)
    throw InvalidArgument("search: group order above 64 requires an explicit budget override");
  if (!isNormal(group, subgroupH)) throw PreconditionError("search: H must be normal");

  bool empty = false;
  const Problem problem = buildProblem(group, subgroupH, options.budget, empty);
  SearchResult result;
  if (empty) return result;

  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<Element>> solutions;
  bool stopped = false;

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1 || problem.pairs.size() < 4) {
    Searcher s(problem, nodes);
    try {
      s.dfs(0);
    } catch (const Searcher::Stop&) {
      stopped = true;
    }
    solutions = std::move(s.solutions());
  } else {
    // Fan out over the feasible prefixes of the first few decisions; the
    // shallow levels are counted once here so node totals match a sequential run.
    const std::size_t depth = std::min<std::size_t>(problem.pairs.size() - 1, 6);
    std::vector<std::vector<bool>> prefixes;
    try {
      Searcher(problem, nodes).collectPrefixes(depth, prefixes);
    } catch (const Searcher::Stop&) {
      stopped = true;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> halt{stopped};
    std::mutex lock;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t slot = next.fetch_add(1);
          if (slot >= prefixes.size() || halt.load()) return;
          Searcher s(problem, nodes);
          for (std::size_t i = 0; i < depth; ++i) s.apply(i, prefixes[slot][i]);
          try {
            s.dfs(depth);
          } catch (const Searcher::Stop&) {
            halt = true;
          }
          std::lock_guard guard(lock);
          for (auto& d : s.solutions()) solutions.push_back(std::move(d));
        }
      });
    }
    for (auto& t : pool) t.join();
    stopped = halt.load();
  }

  std::sort(solutions.begin(), solutions.end());
  result.nodes = nodes.load();
  if (stopped)
    throw BudgetExceeded("search: node budget " + std::to_string(options.budget) + " exceeded after " +
                             std::to_string(result.nodes) + " nodes with " + std::to_string(solutions.size()) +
                             " sets found",
                         result.nodes, solutions.size());
  const ParameterSet params = parameterFormulas(static_cast<std::int64_t>(h));
  for (auto& d : solutions)
    result.found.push_back({group, subgroupH, std::move(d), params, Provenance::Search, false});
  return result;
}

}  // namespace rshds
