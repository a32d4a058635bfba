#include "kgraph/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace kgraph {

namespace {

using Clock = std::chrono::steady_clock;

VertexSet from_word(std::size_t universe, std::uint64_t word) {
  VertexSet s(universe);
  for (std::size_t b = 0; b < universe; ++b)
    if ((word >> b) & 1u) s.insert(static_cast<VertexId>(b));
  return s;
}

void require_searchable(FamilyKind kind) {
  if (kind == FamilyKind::Raw)
    throw Error(ErrorCode::KindMismatch, "enumeration needs a kind: t, o or invariant");
}

// Shared budget and deadline accounting for one search.
class Budget {
 public:
  explicit Budget(const SearchLimits& limits)
      : max_(limits.max_candidates),
        deadline_(limits.time_budget ? std::optional(Clock::now() + *limits.time_budget)
                                     : std::nullopt) {}

  void charge(std::uint64_t count, FaceSet component) {
    const std::uint64_t before = used_.fetch_add(count);
    if (before + count > max_ || before + count < before)
      throw Error(ErrorCode::BudgetExceeded,
                  "component " + component.to_string() + " needs " + std::to_string(count) +
                      " candidates; budget is " + std::to_string(max_),
                  {component.to_string()});
    if (deadline_ && Clock::now() > *deadline_)
      throw Error(ErrorCode::BudgetExceeded,
                  "time budget exhausted while searching component " + component.to_string(),
                  {component.to_string()});
  }

 private:
  std::uint64_t max_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> used_{0};
};

bool is_component_solution(const KGraph& g, FamilyKind kind, const SubsetFamily& partial,
                           FaceSet f, const VertexSet& s, const TracingSets& tracing) {
  if (kind == FamilyKind::O && !tracing.u_of(f).is_subset_of(s)) return false;
  for (Color i : (FaceSet::full(g.rank()) - f).colors()) {
    const VertexSet& above = partial[f.with(i)];
    if (kind == FamilyKind::Invariant) {
      if (edge_preimage(g, s & above, i) != s) return false;
    } else {
      if ((edge_preimage(g, s, i) & above) != s) return false;
    }
  }
  return true;
}

// Components in order of decreasing |F|, ties by mask.
std::vector<FaceSet> search_order(std::uint32_t rank) {
  std::vector<FaceSet> order;
  for (std::uint32_t mask = 0; mask < face_count(rank); ++mask) order.emplace_back(mask);
  std::stable_sort(order.begin(), order.end(),
                   [](FaceSet a, FaceSet b) { return a.size() > b.size(); });
  return order;
}

class ComponentSearch {
 public:
  ComponentSearch(const KGraph& g, FamilyKind kind, const TracingSets& tracing, Budget& budget,
                  const std::atomic<bool>& stop)
      : g_(g), kind_(kind), tracing_(tracing), budget_(budget), stop_(stop),
        order_(search_order(g.rank())) {}

  // Candidate sets for component F given the strictly larger components.
  std::vector<VertexSet> solutions(const SubsetFamily& partial, FaceSet f) {
    const FixedPointBounds bounds = fixed_point_bounds(g_, kind_, partial, f);
    VertexSet base = bounds.least;
    if (kind_ == FamilyKind::O) base |= tracing_.u_of(f);
    std::vector<VertexSet> out;
    if (!base.is_subset_of(bounds.greatest)) return out;
    const std::vector<VertexId> free = (bounds.greatest - base).members();
    if (free.size() >= 63)
      throw Error(ErrorCode::BudgetExceeded,
                  "component " + f.to_string() + " has " + std::to_string(free.size()) +
                      " undetermined vertices",
                  {f.to_string()});
    const std::uint64_t count = std::uint64_t{1} << free.size();
    budget_.charge(count, f);
    for (std::uint64_t word = 0; word < count; ++word) {
      VertexSet s = base;
      for (std::size_t b = 0; b < free.size(); ++b)
        if ((word >> b) & 1u) s.insert(free[b]);
      if (is_component_solution(g_, kind_, partial, f, s, tracing_)) out.push_back(std::move(s));
    }
    return out;
  }

  void descend(SubsetFamily& partial, std::size_t level, std::vector<SubsetFamily>& out) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (level == order_.size()) {
      out.push_back(partial);
      return;
    }
    const FaceSet f = order_[level];
    for (VertexSet& s : solutions(partial, f)) {
      partial[f] = std::move(s);
      descend(partial, level + 1, out);
    }
    partial[f] = g_.no_vertices();
  }

  const std::vector<FaceSet>& order() const { return order_; }

 private:
  const KGraph& g_;
  FamilyKind kind_;
  const TracingSets& tracing_;
  Budget& budget_;
  const std::atomic<bool>& stop_;
  std::vector<FaceSet> order_;
};

}  // namespace

FamilyLattice::FamilyLattice(FamilyKind kind, std::vector<SubsetFamily> elements)
    : kind_(kind), elements_(std::move(elements)) {
  for (auto& f : elements_) f.set_kind(kind);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

std::optional<std::size_t> FamilyLattice::index_of(const SubsetFamily& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
  if (it == elements_.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> FamilyLattice::bottom() const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (std::all_of(elements_.begin(), elements_.end(),
                    [&](const SubsetFamily& x) { return elements_[k].precedes(x); }))
      return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> FamilyLattice::top() const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (std::all_of(elements_.begin(), elements_.end(),
                    [&](const SubsetFamily& x) { return x.precedes(elements_[k]); }))
      return k;
  }
  return std::nullopt;
}

FamilyLattice brute_force_families(const KGraph& g, FamilyKind kind, const SearchLimits& limits) {
  const std::size_t nv = g.vertex_count();
  const std::size_t faces = face_count(g.rank());
  const std::size_t bits = nv * faces;
  if (bits >= 63 || (std::uint64_t{1} << bits) > limits.max_candidates)
    throw Error(ErrorCode::BudgetExceeded,
                "oracle needs 2^" + std::to_string(bits) + " candidates; budget is " +
                    std::to_string(limits.max_candidates));

  const auto deadline = limits.time_budget
                            ? std::optional(Clock::now() + *limits.time_budget)
                            : std::nullopt;
  const TracingSets tracing = tracing_sets(g);
  std::vector<VertexSet> subsets;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << nv); ++word)
    subsets.push_back(from_word(nv, word));

  std::vector<std::size_t> digit(faces, 0);
  std::vector<SubsetFamily> found;
  SubsetFamily candidate(g, kind);
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (deadline && (step & 0xfff) == 0 && Clock::now() > *deadline)
      throw Error(ErrorCode::BudgetExceeded, "oracle time budget exhausted");
    for (std::size_t k = 0; k < faces; ++k)
      candidate[FaceSet(static_cast<std::uint32_t>(k))] = subsets[digit[k]];
    bool keep = false;
    switch (kind) {
      case FamilyKind::Raw: keep = true; break;
      case FamilyKind::T: keep = is_t_family(g, candidate); break;
      case FamilyKind::O: keep = is_o_family(g, candidate, tracing); break;
      case FamilyKind::Invariant: keep = is_invariant_family(g, candidate); break;
    }
    if (keep) found.push_back(candidate);
    for (std::size_t k = 0; k < faces; ++k) {
      if (++digit[k] < subsets.size()) break;
      digit[k] = 0;
    }
  }
  return FamilyLattice(kind, std::move(found));
}

VertexSet component_operator(const KGraph& g, FamilyKind kind, const SubsetFamily& partial,
                             FaceSet f, const VertexSet& s) {
  const auto outside = (FaceSet::full(g.rank()) - f).colors();
  if (outside.empty()) return s;
  VertexSet out = g.all_vertices();
  for (Color i : outside) {
    const VertexSet& above = partial[f.with(i)];
    if (kind == FamilyKind::Invariant)
      out &= edge_preimage(g, s & above, i);
    else
      out &= edge_preimage(g, s, i) & above;
  }
  return out;
}

FixedPointBounds fixed_point_bounds(const KGraph& g, FamilyKind kind,
                                    const SubsetFamily& partial, FaceSet f) {
  auto iterate = [&](VertexSet s) {
    for (;;) {
      VertexSet next = component_operator(g, kind, partial, f, s);
      if (next == s) return s;
      s = std::move(next);
    }
  };
  return {iterate(g.no_vertices()), iterate(g.all_vertices())};
}

FamilyLattice enumerate_families(const KGraph& g, FamilyKind kind, const SearchLimits& limits) {
  require_searchable(kind);
  const TracingSets tracing = tracing_sets(g);
  Budget budget(limits);
  std::atomic<bool> stop{false};

  ComponentSearch root(g, kind, tracing, budget, stop);
  SubsetFamily partial(g, kind);
  const FaceSet top = root.order().front();
  const std::vector<VertexSet> top_choices = root.solutions(partial, top);

  unsigned threads = limits.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : limits.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, top_choices.size()));

  std::vector<SubsetFamily> found;
  if (threads <= 1) {
    for (const VertexSet& s : top_choices) {
      partial[top] = s;
      root.descend(partial, 1, found);
    }
    return FamilyLattice(kind, std::move(found));
  }

  std::mutex merge;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        ComponentSearch search(g, kind, tracing, budget, stop);
        SubsetFamily local_partial(g, kind);
        std::vector<SubsetFamily> local;
        for (std::size_t k = t; k < top_choices.size(); k += threads) {
          local_partial[top] = top_choices[k];
          search.descend(local_partial, 1, local);
        }
        std::lock_guard lock(merge);
        found.insert(found.end(), std::make_move_iterator(local.begin()),
                     std::make_move_iterator(local.end()));
      } catch (...) {
        stop = true;
        std::lock_guard lock(merge);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return FamilyLattice(kind, std::move(found));
}

SubsetFamily meet(const SubsetFamily& a, const SubsetFamily& b) {
  if (a.graph_fingerprint() != b.graph_fingerprint() || a.rank() != b.rank() ||
      a.vertex_count() != b.vertex_count())
    throw Error(ErrorCode::GraphMismatch, "families belong to different graphs");
  if (a.kind() != FamilyKind::Raw && b.kind() != FamilyKind::Raw && a.kind() != b.kind())
    throw Error(ErrorCode::KindMismatch, "cannot meet a " + std::string(to_string(a.kind())) +
                                             "-family with a " +
                                             std::string(to_string(b.kind())) + "-family");
  SubsetFamily out = a;
  out.set_kind(a.kind() == FamilyKind::Raw ? b.kind() : a.kind());
  for (std::uint32_t mask = 0; mask < face_count(a.rank()); ++mask)
    out[FaceSet(mask)] &= b[FaceSet(mask)];
  return out;
}

SubsetFamily join(const SubsetFamily& a, const SubsetFamily& b, const FamilyLattice& lattice) {
  if (!lattice.contains(a) || !lattice.contains(b))
    throw Error(ErrorCode::NotInLattice, "join operands must be lattice elements");
  std::optional<SubsetFamily> acc;
  for (const SubsetFamily& x : lattice.elements()) {
    if (!a.precedes(x) || !b.precedes(x)) continue;
    acc = acc ? meet(*acc, x) : x;
  }
  // A contained pair always has an upper bound (itself at least for a == b);
  // meet-closure puts the result back in the lattice.
  if (!acc || !lattice.contains(*acc))
    throw Error(ErrorCode::NotInLattice, "lattice is not closed under meets");
  return lattice.elements()[*lattice.index_of(*acc)];
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const FamilyLattice& lattice) {
  const auto& el = lattice.elements();
  const std::size_t n = el.size();
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  // below[b]: strict lower set of b.
  std::vector<Bits> below(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && el[a].precedes(el[b])) below[b].set(a);

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t b = 0; b < n; ++b) {
    Bits indirect(n);
    for (auto c = below[b].find_first(); c != Bits::npos; c = below[b].find_next(c))
      indirect |= below[c];
    const Bits direct = below[b] - indirect;
    for (auto a = direct.find_first(); a != Bits::npos; a = direct.find_next(a))
      covers.emplace_back(a, b);
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace kgraph
