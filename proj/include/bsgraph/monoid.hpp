// Degree monoids as traits for the shared morphism engine.
//
// The engine only needs: the monoid operations, the letter embedding, the
// prefix order with left quotients, the degree and boundary colour words of
// a square, and a dense numbering of the prefixes of a fixed degree.

#ifndef BSGRAPH_MONOID_HPP_
#define BSGRAPH_MONOID_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "bsgraph/word.hpp"

namespace bsgraph {

  enum class Mode { bs, grid };

  char const* to_string(Mode mode) noexcept;

  inline constexpr std::size_t kDefaultVertexLimit = 1'000'000;

  struct BsMonoid {
    using Degree = BsWord;

    static constexpr Mode mode = Mode::bs;

    // Colour words of the two boundaries of a square E_{ba} -> E.
    static constexpr std::array<Letter, 3> red_first{Letter::A, Letter::B,
                                                     Letter::B};
    static constexpr std::array<Letter, 2> blue_first{Letter::B, Letter::A};

    static Degree identity() {
      return BsWord::identity();
    }
    static Degree letter(Letter l) {
      return BsWord::letter(l);
    }
    static Degree mul(Degree const& x, Degree const& y) {
      return bsgraph::mul(x, y);
    }
    static Degree extend(Degree const& x, Letter l) {
      return bsgraph::extend(x, l);
    }
    static bool is_prefix(Degree const& x, Degree const& w) {
      return bsgraph::is_prefix(x, w);
    }
    static Degree left_quotient(Degree const& x, Degree const& w) {
      return bsgraph::left_quotient(x, w);
    }
    static Degree square_degree() {
      return BsWord(1, 2);
    }
    static LetterString shortest_form(Degree const& d) {
      return bsgraph::shortest_form(d);
    }
    static LetterString longest_form(Degree const& d) {
      return bsgraph::longest_form(d);
    }
    static Degree parse(std::string_view text) {
      return parse_word(text);
    }
    static std::string format(Degree const& d) {
      return to_pair_string(d);
    }
    // Vertex label in exports.
    static std::string label(Degree const& d) {
      return to_word_string(d);
    }

    // Dense numbering of the prefixes of `top`, row by row in n_a.
    class Layout {
     public:
      Layout(Degree const& top, std::size_t limit);

      std::size_t size() const noexcept {
        return size_;
      }
      std::vector<Degree>        vertices() const;
      std::optional<std::size_t> index(Degree const& z) const;

     private:
      Degree                   top_;
      std::vector<std::size_t> offset_;
      std::vector<std::size_t> row_length_;
      std::size_t              size_ = 0;
    };
  };

  struct GridMonoid {
    using Degree = GridDegree;

    static constexpr Mode mode = Mode::grid;

    // c1 c2 and c2 c1 boundaries of a square E_{2,(1,1)} -> E.
    static constexpr std::array<Letter, 2> red_first{Letter::A, Letter::B};
    static constexpr std::array<Letter, 2> blue_first{Letter::B, Letter::A};

    static Degree identity() {
      return {};
    }
    static Degree letter(Letter l) {
      return GridDegree::letter(l);
    }
    static Degree mul(Degree const& x, Degree const& y) {
      return grid_add(x, y);
    }
    static Degree extend(Degree const& x, Letter l) {
      return grid_add(x, GridDegree::letter(l));
    }
    static bool is_prefix(Degree const& x, Degree const& w) {
      return grid_le(x, w);
    }
    static Degree left_quotient(Degree const& x, Degree const& w) {
      return grid_sub(w, x);
    }
    static Degree square_degree() {
      return {1, 1};
    }
    // Every traversal of a grid morphism has the same length; both forms
    // read colour 1 first.
    static LetterString shortest_form(Degree const& d);
    static LetterString longest_form(Degree const& d) {
      return shortest_form(d);
    }
    static Degree parse(std::string_view text) {
      return parse_grid_degree(text);
    }
    static std::string format(Degree const& d) {
      return to_pair_string(d);
    }
    static std::string label(Degree const& d) {
      return to_pair_string(d);
    }

    class Layout {
     public:
      Layout(Degree const& top, std::size_t limit);

      std::size_t size() const noexcept {
        return size_;
      }
      std::vector<Degree>        vertices() const;
      std::optional<std::size_t> index(Degree const& z) const;

     private:
      Degree      top_;
      std::size_t size_ = 0;
    };
  };

}  // namespace bsgraph

#endif  // BSGRAPH_MONOID_HPP_
