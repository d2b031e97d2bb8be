#include "hrds/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "hrds/errors.hpp"

namespace hrds {

RankCheck is_constant_rank_distance(const FieldSpec& field, std::span<const HermMatrix> members, std::size_t k) {
  auto v = first_violation(field, members, k);
  return RankCheck{!v.has_value(), v};
}

RankCheck is_constant_rank_distance(const RankSet& u) {
  return is_constant_rank_distance(*u.field(), u.members(), u.k());
}

namespace {

bool admissible(const FieldSpec& f, const RankSet& u, const HermMatrix& b) {
  if (!b.is_zero() && rank(f, b) != u.k()) return false;
  for (const auto& a : u.members())
    if (rank(f, sub(f, a, b)) != u.k()) return false;
  return true;
}

}  // namespace

std::vector<HermMatrix> extension_candidates(const RankSet& u, std::uint64_t budget) {
  const HermitianSpace space(u.field(), u.n(), budget);
  const FieldSpec& f = *u.field();
  std::vector<HermMatrix> out;
  space.for_each([&](const HermMatrix& b) {
    if (!u.contains(b) && admissible(f, u, b)) out.push_back(b);
  });
  return out;
}

bool is_maximal(const RankSet& u, std::uint64_t budget) {
  const HermitianSpace space(u.field(), u.n(), budget);
  const FieldSpec& f = *u.field();
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const auto b = space.at(i);
    if (!u.contains(b) && admissible(f, u, b)) return false;
  }
  return true;
}

RankSet greedy_complete(const RankSet& u, std::span<const std::uint64_t> order, std::uint64_t budget) {
  const HermitianSpace space(u.field(), u.n(), budget);
  const FieldSpec& f = *u.field();
  RankSet out = u;
  auto consider = [&](std::uint64_t idx) {
    if (idx >= space.size()) throw UsageError("enumeration index out of range");
    auto b = space.at(idx);
    if (!out.contains(b) && admissible(f, out, b)) out.insert(std::move(b));
  };
  if (order.empty()) {
    for (std::uint64_t i = 0; i < space.size(); ++i) consider(i);
  } else {
    for (auto idx : order) consider(idx);
  }
  return out;
}

RankGraph::RankGraph(FieldPtr field, std::size_t k, std::vector<HermMatrix> vertices)
    : field_(std::move(field)), k_(k), vertices_(std::move(vertices)) {
  const std::size_t v = vertices_.size();
  words_ = (v + 63) / 64;
  rows_.assign(v * words_, 0);
  const FieldSpec& f = *field_;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (rank(f, sub(f, vertices_[a], vertices_[b])) == k_) {
        rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
}

RankGraph RankGraph::neighborhood_of_zero(const HermitianSpace& space, std::size_t k) {
  std::vector<HermMatrix> vs;
  space.for_each([&](const HermMatrix& h) {
    if (rank(*space.field(), h) == k) vs.push_back(h);
  });
  return RankGraph(space.field(), k, std::move(vs));
}

std::vector<std::size_t> SpectrumResult::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& [size, w] : witnesses) s.push_back(size);
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

// Bron-Kerbosch with Tomita pivoting over bitset rows. Records, per clique size, the
// lexicographically smallest sorted vertex list.
class CliqueEnumerator {
public:
  CliqueEnumerator(const RankGraph& g, Clock::time_point deadline, std::atomic<bool>& stop)
      : g_(g), w_(g.words()), deadline_(deadline), stop_(stop) {
    scratch_.resize((g.size() + 2) * 2 * w_);
  }

  // Runs the top-level branch for vertex `v` with P and X given.
  void run(std::size_t v, const std::vector<std::uint64_t>& p, const std::vector<std::uint64_t>& x) {
    std::copy(p.begin(), p.end(), level_p(0));
    std::copy(x.begin(), x.end(), level_x(0));
    r_.clear();
    branch(v, 0);
  }

  std::map<std::size_t, std::vector<std::uint32_t>> best;
  std::uint64_t cliques = 0;

private:
  std::uint64_t* level_p(std::size_t d) { return scratch_.data() + d * 2 * w_; }
  std::uint64_t* level_x(std::size_t d) { return scratch_.data() + d * 2 * w_ + w_; }

  // Enters vertex v from depth d: R += v, P and X at d+1 restricted to N(v).
  void branch(std::size_t v, std::size_t d) {
    const std::uint64_t* nv = g_.row(v);
    std::uint64_t* p = level_p(d);
    std::uint64_t* x = level_x(d);
    std::uint64_t* np = level_p(d + 1);
    std::uint64_t* nx = level_x(d + 1);
    for (std::size_t i = 0; i < w_; ++i) {
      np[i] = p[i] & nv[i];
      nx[i] = x[i] & nv[i];
    }
    r_.push_back(static_cast<std::uint32_t>(v));
    expand(d + 1);
    r_.pop_back();
  }

  void expand(std::size_t d) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if ((++nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) {
      stop_.store(true);
      return;
    }
    std::uint64_t* p = level_p(d);
    std::uint64_t* x = level_x(d);
    bool p_empty = true, x_empty = true;
    for (std::size_t i = 0; i < w_; ++i) {
      p_empty = p_empty && p[i] == 0;
      x_empty = x_empty && x[i] == 0;
    }
    if (p_empty) {
      if (x_empty) report();
      return;
    }
    // Pivot: the vertex of P u X with the most neighbours in P.
    std::size_t pivot = 0;
    int best_deg = -1;
    for (std::size_t i = 0; i < w_; ++i) {
      std::uint64_t bits = p[i] | x[i];
      while (bits) {
        const std::size_t u = i * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* nu = g_.row(u);
        int deg = 0;
        for (std::size_t j = 0; j < w_; ++j) deg += std::popcount(p[j] & nu[j]);
        if (deg > best_deg) {
          best_deg = deg;
          pivot = u;
        }
      }
    }
    const std::uint64_t* np = g_.row(pivot);
    for (std::size_t i = 0; i < w_; ++i) {
      std::uint64_t cand = p[i] & ~np[i];
      while (cand) {
        const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(cand));
        cand &= cand - 1;
        branch(v, d);
        const std::uint64_t bit = std::uint64_t{1} << (v % 64);
        p[i] &= ~bit;
        x[i] |= bit;
        if (stop_.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void report() {
    ++cliques;
    sorted_ = r_;
    std::sort(sorted_.begin(), sorted_.end());
    auto [it, inserted] = best.try_emplace(sorted_.size(), sorted_);
    if (!inserted && sorted_ < it->second) it->second = sorted_;
  }

  const RankGraph& g_;
  std::size_t w_;
  Clock::time_point deadline_;
  std::atomic<bool>& stop_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> r_;
  std::vector<std::uint32_t> sorted_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SpectrumResult maximal_set_spectrum(const FieldPtr& field, std::size_t n, std::size_t k,
                                    const SpectrumBudget& budget) {
  if (k == 0 || k > n) throw UsageError("spectrum needs 1 <= k <= n");
  const auto start = Clock::now();
  const HermitianSpace space(field, n);
  const FieldSpec& f = *field;

  std::vector<HermMatrix> hood;
  space.for_each([&](const HermMatrix& h) {
    if (rank(f, h) == k) hood.push_back(h);
  });
  std::vector<HermMatrix> prefix{HermMatrix::zero(n)};
  std::vector<HermMatrix> vertices;
  if (budget.fix_first_vertex) {
    prefix.push_back(hood.front());
    for (std::size_t i = 1; i < hood.size(); ++i)
      if (rank(f, sub(f, hood[i], hood.front())) == k) vertices.push_back(hood[i]);
  } else {
    vertices = std::move(hood);
  }
  if (vertices.size() > budget.max_vertices)
    throw BudgetExceeded("clique search graph exceeds the vertex budget", vertices.size());

  const RankGraph g(field, k, std::move(vertices));
  SpectrumResult result{f.q(), n, k, {}, true, 0};
  auto witness = [&](const std::vector<std::uint32_t>& clique) {
    auto w = prefix;
    for (auto v : clique) w.push_back(g.vertices()[v]);
    return w;
  };
  if (g.size() == 0) {
    result.witnesses.emplace(prefix.size(), prefix);
    return result;
  }

  // Top-level branches: v_i ranges over P \ N(pivot); the i-th branch starts from
  // P minus v_1..v_{i-1} and X plus those, each restricted to N(v_i).
  const std::size_t w = g.words();
  std::vector<std::uint64_t> all(w, 0);
  for (std::size_t v = 0; v < g.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  std::size_t pivot = 0, best_deg = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < w; ++j) deg += static_cast<std::size_t>(std::popcount(g.row(u)[j]));
    if (deg > best_deg) best_deg = deg, pivot = u;
  }
  std::vector<std::size_t> tops;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!g.adjacent(pivot, v)) tops.push_back(v);

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::map<std::size_t, std::vector<std::uint32_t>> best;
  std::uint64_t cliques = 0;
  const auto deadline = start + budget.max_time;

  auto worker = [&] {
    CliqueEnumerator en(g, deadline, stop);
    std::vector<std::uint64_t> p(w), x(w);
    for (std::size_t t; (t = next.fetch_add(1)) < tops.size() && !stop.load();) {
      p = all;
      std::fill(x.begin(), x.end(), 0);
      for (std::size_t s = 0; s < t; ++s) {
        const std::size_t u = tops[s];
        p[u / 64] &= ~(std::uint64_t{1} << (u % 64));
        x[u / 64] |= std::uint64_t{1} << (u % 64);
      }
      en.run(tops[t], p, x);
    }
    std::lock_guard lock(mu);
    cliques += en.cliques;
    for (auto& [size, list] : en.best) {
      auto [it, inserted] = best.try_emplace(size, list);
      if (!inserted && list < it->second) it->second = list;
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(budget.threads, static_cast<unsigned>(tops.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  result.complete = !stop.load();
  result.cliques = cliques;
  for (const auto& [size, list] : best) result.witnesses.emplace(size + prefix.size(), witness(list));
  return result;
}

}  // namespace hrds
