// The category Lambda of C-compatible morphisms over a 2-coloured graph
// with a complete collection of squares, its degree functor, and bounded
// exhaustive checks of the category, functor and factorisation laws.

#ifndef BSGRAPH_CATEGORY_HPP_
#define BSGRAPH_CATEGORY_HPP_

#include <algorithm>   // for max
#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "bsgraph/error.hpp"
#include "bsgraph/graph.hpp"
#include "bsgraph/morphism.hpp"
#include "bsgraph/squares.hpp"

namespace bsgraph {

  struct LawCheck {
    LawCheck() = default;
    explicit LawCheck(std::string law) : name(std::move(law)) {}

    std::string name;
    std::size_t instances = 0;
    std::size_t failures  = 0;
    // First failing instance, reproducible from the fixture.
    std::string counterexample;

    bool passed() const noexcept {
      return failures == 0;
    }

    void record(bool ok, std::string const& what) {
      ++instances;
      if (!ok && failures++ == 0) {
        counterexample = what;
      }
    }
  };

  struct VerificationReport {
    Mode                  mode       = Mode::bs;
    std::size_t           max_length = 0;
    std::size_t           pool_size  = 0;
    std::vector<LawCheck> laws;

    bool passed() const noexcept {
      for (auto const& law : laws) {
        if (!law.passed()) {
          return false;
        }
      }
      return true;
    }

    LawCheck const* find(std::string const& name) const {
      for (auto const& law : laws) {
        if (law.name == name) {
          return &law;
        }
      }
      return nullptr;
    }

    void merge(VerificationReport const& other) {
      pool_size = std::max(pool_size, other.pool_size);
      laws.insert(laws.end(), other.laws.begin(), other.laws.end());
    }
  };

  template <typename M>
  class LambdaContext {
   public:
    using Degree    = typename M::Degree;
    using Morph     = Morphism<M>;
    using ComposeFn = std::function<Morph(Morph const&, Morph const&)>;

    // Throws incomplete_collection unless the collection is complete for g.
    LambdaContext(ColouredGraph graph, SquareCollection collection)
        : graph_(std::move(graph)), collection_(std::move(collection)) {
      if (collection_.mode() != M::mode) {
        raise(ErrorKind::precondition_violated,
              std::string("collection is in ") + to_string(collection_.mode())
                  + " mode");
      }
      report_ = check_complete(graph_, collection_);
      if (!report_.complete()) {
        raise(ErrorKind::incomplete_collection,
              std::to_string(report_.uncovered_red.size()) + " red-first and "
                  + std::to_string(report_.uncovered_blue.size())
                  + " blue-first paths uncovered, "
                  + std::to_string(report_.duplicated.size()) + " duplicated, "
                  + std::to_string(report_.malformed.size()) + " malformed");
      }
    }

    ColouredGraph const& graph() const noexcept {
      return graph_;
    }
    SquareCollection const& collection() const noexcept {
      return collection_;
    }
    CompletenessReport const& completeness() const noexcept {
      return report_;
    }

    Morph identity(VertexId v) const {
      return identity_morphism<M>(graph_, v);
    }

    Morph lift(Path const& x, LiftOptions const& options = {}) const {
      return lift_path<M>(graph_, collection_, x, options);
    }

    // Lift of the concatenated shortest traversals.
    Morph compose(Morph const& mu, Morph const& nu) const {
      if (mu.source() != nu.range()) {
        raise(ErrorKind::not_composable, "s(mu) = " + graph_.name(mu.source())
                                             + " but r(nu) = " + graph_.name(nu.range()));
      }
      Path x = shortest_traversal(graph_, mu);
      Path y = shortest_traversal(graph_, nu);
      return lift(concat(graph_, x, y));
    }

    Morph compose_stitched(Morph const& mu, Morph const& nu) const {
      return bsgraph::compose_stitched(graph_, collection_, mu, nu);
    }

    // (lambda restricted to E_{w1}, lambda|*_{[w1, d(lambda)]}).
    std::pair<Morph, Morph> factorize(Morph const& lambda, Degree const& w1,
                                      Degree const& w2) const {
      if (M::mul(w1, w2) != lambda.degree()) {
        raise(ErrorKind::degree_mismatch, M::format(w1) + " * " + M::format(w2)
                                              + " is not " + M::format(lambda.degree()));
      }
      return {restrict(lambda, w1), restrict_shifted(lambda, w1, lambda.degree())};
    }

    std::vector<Morph> enumerate(Degree const& w, EnumerateOptions const& options = {}) const {
      return enumerate_morphisms<M>(graph_, collection_, w, options);
    }

   private:
    ColouredGraph      graph_;
    SquareCollection   collection_;
    CompletenessReport report_;
  };

  using BsContext   = LambdaContext<BsMonoid>;
  using GridContext = LambdaContext<GridMonoid>;

  // A morphism of the bounded pool together with the first path that lifts
  // to it.
  template <typename M>
  struct PoolEntry {
    Path        witness;
    Morphism<M> morphism;
  };

  // Lifts every path of length <= max_length, keeping one entry per
  // distinct morphism.
  template <typename M>
  std::vector<PoolEntry<M>> morphism_pool(LambdaContext<M> const& ctx,
                                          std::size_t             max_length) {
    std::vector<PoolEntry<M>>                               pool;
    std::map<typename M::Degree, std::vector<std::size_t>> by_degree;
    for (auto& x : all_paths(ctx.graph(), max_length)) {
      auto  lambda = ctx.lift(x);
      auto& same   = by_degree[lambda.degree()];
      bool  seen   = false;
      for (std::size_t i : same) {
        if (pool[i].morphism == lambda) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        same.push_back(pool.size());
        pool.push_back({std::move(x), std::move(lambda)});
      }
    }
    return pool;
  }

  namespace detail {
    template <typename M>
    std::string describe(LambdaContext<M> const& ctx, PoolEntry<M> const& entry) {
      return "[" + to_string(ctx.graph(), entry.witness) + "]";
    }

    template <typename M>
    struct Pair {
      std::size_t left, right;
      Morphism<M> composite;
    };
  }  // namespace detail

  // Range/source, associativity and identity laws, plus the restriction
  // contract of composition and agreement with the stitched composition.
  // `compose` defaults to ctx.compose; tests substitute faulty versions.
  template <typename M>
  VerificationReport verify_category(LambdaContext<M> const& ctx, std::size_t max_length,
                                     typename LambdaContext<M>::ComposeFn compose = {}) {
    if (!compose) {
      compose = [&ctx](auto const& mu, auto const& nu) { return ctx.compose(mu, nu); };
    }
    auto const& g    = ctx.graph();
    auto        pool = morphism_pool(ctx, max_length);

    VerificationReport report;
    report.mode       = M::mode;
    report.max_length = max_length;
    report.pool_size  = pool.size();

    LawCheck range_source{"range_source"};
    LawCheck associativity{"associativity"};
    LawCheck identity{"identity"};
    LawCheck restricts{"composition_restricts"};
    LawCheck stitched{"compose_matches_stitch"};

    // A composition that throws counts as a failed instance of `law`.
    auto attempt = [&compose](LawCheck& law, auto const& mu, auto const& nu,
                              std::string const& what) -> std::optional<Morphism<M>> {
      try {
        return compose(mu, nu);
      } catch (Error const& e) {
        law.record(false, what + ": " + e.what());
        return std::nullopt;
      }
    };

    std::vector<detail::Pair<M>>                               pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        auto const& mu = pool[i].morphism;
        auto const& nu = pool[j].morphism;
        if (mu.source() != nu.range()) {
          continue;
        }
        std::string what = "mu = " + detail::describe(ctx, pool[i])
                           + ", nu = " + detail::describe(ctx, pool[j]);
        auto composite = attempt(range_source, mu, nu, what);
        if (!composite) {
          continue;
        }
        range_source.record(composite->range() == mu.range()
                                && composite->source() == nu.source(),
                            what + ": r or s of mu nu is wrong");
        bool ok = composite->degree() == M::mul(mu.degree(), nu.degree());
        if (ok) {
          ok = restrict(*composite, mu.degree()) == mu
               && restrict_shifted(*composite, mu.degree(), composite->degree()) == nu;
        }
        restricts.record(ok, what + ": (mu nu) does not restrict to mu and nu");
        stitched.record(ctx.compose_stitched(mu, nu) == *composite,
                        what + ": stitched composition differs");
        pair_index[{i, j}] = pairs.size();
        pairs.push_back({i, j, std::move(*composite)});
      }
    }

    for (auto const& p : pairs) {
      for (std::size_t k = 0; k < pool.size(); ++k) {
        auto it = pair_index.find({p.right, k});
        if (it == pair_index.end()) {
          continue;
        }
        std::string what = "lambda = " + detail::describe(ctx, pool[p.left])
                           + ", mu = " + detail::describe(ctx, pool[p.right])
                           + ", nu = " + detail::describe(ctx, pool[k]);
        auto lhs = attempt(associativity, p.composite, pool[k].morphism, what);
        auto rhs = attempt(associativity, pool[p.left].morphism,
                           pairs[it->second].composite, what);
        if (lhs && rhs) {
          associativity.record(*lhs == *rhs, what + ": (lambda mu) nu != lambda (mu nu)");
        }
      }
    }

    for (VertexId v : g.vertices()) {
      auto id = ctx.identity(v);
      identity.record(id.range() == v && id.source() == v,
                      "r or s of the identity at " + g.name(v) + " is wrong");
    }
    for (auto const& entry : pool) {
      auto const& mu   = entry.morphism;
      std::string what = "mu = " + detail::describe(ctx, entry);
      auto        left = attempt(identity, ctx.identity(mu.range()), mu, what);
      if (left) {
        identity.record(*left == mu, what + ": lambda_r(mu) mu != mu");
      }
      auto right = attempt(identity, mu, ctx.identity(mu.source()), what);
      if (right) {
        identity.record(*right == mu, what + ": mu lambda_s(mu) != mu");
      }
    }

    report.laws = {range_source, associativity, identity, restricts, stitched};
    return report;
  }

  // The degree map is multiplicative and sends identities to e.
  template <typename M>
  VerificationReport verify_functor(LambdaContext<M> const& ctx, std::size_t max_length) {
    auto const& g    = ctx.graph();
    auto        pool = morphism_pool(ctx, max_length);

    VerificationReport report;
    report.mode       = M::mode;
    report.max_length = max_length;
    report.pool_size  = pool.size();

    LawCheck multiplicative{"degree_multiplicative"};
    LawCheck identity{"identity_degree"};
    for (auto const& left : pool) {
      for (auto const& right : pool) {
        if (left.morphism.source() != right.morphism.range()) {
          continue;
        }
        auto composite = ctx.compose(left.morphism, right.morphism);
        auto expected  = M::mul(left.morphism.degree(), right.morphism.degree());
        multiplicative.record(composite.degree() == expected,
                              "mu = " + detail::describe(ctx, left) + ", nu = "
                                  + detail::describe(ctx, right) + ": d(mu nu) = "
                                  + M::format(composite.degree()) + ", expected "
                                  + M::format(expected));
      }
    }
    for (VertexId v : g.vertices()) {
      identity.record(ctx.identity(v).degree() == M::identity(),
                      "d(lambda_" + g.name(v) + ") is not e");
    }
    report.laws = {multiplicative, identity};
    return report;
  }

  // For every pool morphism and every split d(lambda) = w1 w2 (w1 ranging
  // over the prefixes of d(lambda)): the factors have the right degrees,
  // recompose to lambda, and are the only such pair among all C-compatible
  // morphisms of those degrees.
  template <typename M>
  VerificationReport verify_factorization(LambdaContext<M> const& ctx,
                                          std::size_t             max_length) {
    auto pool = morphism_pool(ctx, max_length);

    VerificationReport report;
    report.mode       = M::mode;
    report.max_length = max_length;
    report.pool_size  = pool.size();

    LawCheck degrees{"factor_degrees"};
    LawCheck compatible{"factor_compatible"};
    LawCheck recompose{"factor_recompose"};
    LawCheck unique{"factor_unique"};

    std::map<typename M::Degree, std::vector<Morphism<M>>> all;
    auto of_degree = [&](typename M::Degree const& w) -> std::vector<Morphism<M>> const& {
      auto it = all.find(w);
      if (it == all.end()) {
        it = all.emplace(w, ctx.enumerate(w)).first;
      }
      return it->second;
    };

    for (auto const& entry : pool) {
      auto const& lambda = entry.morphism;
      for (auto const& w1 : lambda.domain().vertices()) {
        auto w2   = M::left_quotient(w1, lambda.degree());
        auto what = "lambda = " + detail::describe(ctx, entry) + ", w1 = " + M::format(w1)
                    + ", w2 = " + M::format(w2);
        auto [mu, nu] = ctx.factorize(lambda, w1, w2);
        degrees.record(mu.degree() == w1 && nu.degree() == w2 && mu.source() == nu.range(),
                       what + ": factor degrees or endpoints are wrong");
        compatible.record(check_compatible(mu, ctx.collection())
                              && check_compatible(nu, ctx.collection()),
                          what + ": a factor is not C-compatible");
        recompose.record(ctx.compose(mu, nu) == lambda, what + ": mu nu != lambda");

        std::size_t matches = 0;
        auto const& lefts   = of_degree(w1);
        auto const& rights  = of_degree(w2);
        for (auto const& m : lefts) {
          for (auto const& n : rights) {
            if (m.source() == n.range() && ctx.compose(m, n) == lambda) {
              ++matches;
            }
          }
        }
        unique.record(matches == 1, what + ": " + std::to_string(matches)
                                        + " factor pairs compose to lambda");
      }
    }
    report.laws = {degrees, compatible, recompose, unique};
    return report;
  }

  inline GridMorphism compose_grid(GridContext const& ctx, GridMorphism const& mu,
                                   GridMorphism const& nu) {
    return ctx.compose(mu, nu);
  }

  // Category, functor and factorisation laws in grid mode.
  inline VerificationReport verify_grid(GridContext const& ctx, std::size_t max_length) {
    auto report = verify_category(ctx, max_length);
    report.merge(verify_functor(ctx, max_length));
    report.merge(verify_factorization(ctx, max_length));
    return report;
  }

  // Monoid laws of BS(2,1)+ viewed as a one-object category: identity laws
  // on `random_words` pseudo-random words, associativity on every triple
  // with n_a <= 3, m_b <= 8 plus random triples.
  VerificationReport bs_category_axioms(std::size_t random_words = 1000,
                                        unsigned    seed         = 20240601);

}  // namespace bsgraph

#endif  // BSGRAPH_CATEGORY_HPP_
