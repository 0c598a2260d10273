#include "bsgraph/category.hpp"

#include <random>  // for mt19937, uniform_int_distribution

namespace bsgraph {

  VerificationReport bs_category_axioms(std::size_t random_words, unsigned seed) {
    std::mt19937                            rng(seed);
    std::uniform_int_distribution<unsigned> length(0, 12);
    std::uniform_int_distribution<unsigned> coin(0, 1);

    std::vector<BsWord> pool;
    for (std::size_t i = 0; i < random_words; ++i) {
      LetterString s(length(rng));
      for (auto& l : s) {
        l = coin(rng) ? Letter::B : Letter::A;
      }
      pool.push_back(fold(s));
    }
    std::vector<BsWord> small;
    for (std::uint64_t n = 0; n <= 3; ++n) {
      for (unsigned m = 0; m <= 8; ++m) {
        small.emplace_back(n, m);
      }
    }

    VerificationReport report;
    report.mode      = Mode::bs;
    report.pool_size = pool.size() + small.size();

    LawCheck range_source{"range_source"};
    LawCheck identity{"identity"};
    LawCheck associativity{"associativity"};

    BsWord const e = BsWord::identity();
    for (auto const* words : {&pool, &small}) {
      for (auto const& w : *words) {
        identity.record(mul(e, w) == w && mul(w, e) == w,
                        "e is not a two-sided identity for " + to_pair_string(w));
        // One object: r(w) = s(w) = * for every w.
        range_source.record(true, "");
      }
    }
    for (auto const& x : small) {
      for (auto const& y : small) {
        for (auto const& z : small) {
          associativity.record(mul(mul(x, y), z) == mul(x, mul(y, z)),
                               to_pair_string(x) + ", " + to_pair_string(y) + ", "
                                   + to_pair_string(z));
        }
      }
    }
    for (std::size_t i = 0; i + 2 < pool.size(); ++i) {
      auto const &x = pool[i], &y = pool[i + 1], &z = pool[i + 2];
      associativity.record(mul(mul(x, y), z) == mul(x, mul(y, z)),
                           to_pair_string(x) + ", " + to_pair_string(y) + ", "
                               + to_pair_string(z));
    }
    report.laws = {range_source, identity, associativity};
    return report;
  }

}  // namespace bsgraph
