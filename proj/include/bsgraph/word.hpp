// Arithmetic in the positive Baumslag-Solitar monoid BS(2,1)+ and in the
// grid monoid N^2.
//
// BS(2,1)+ is presented by generators a, b subject to ab^2 = ba. Every
// element has a unique longest form a^N b^M, so elements are stored as the
// pair (N, M). Moving a b past an a doubles it, which gives
//
//   (N1, M1) * (N2, M2) = (N1 + N2, M1 * 2^N2 + M2).
//
// M grows exponentially in the word length, hence the arbitrary precision.

#ifndef BSGRAPH_WORD_HPP_
#define BSGRAPH_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t, uint8_t
#include <iosfwd>       // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <boost/multiprecision/cpp_int.hpp>  // for cpp_int

namespace bsgraph {

  using BigInt = boost::multiprecision::cpp_int;

  // A is the red colour c_a (grid colour 1), B the blue colour c_b (grid
  // colour 2).
  enum class Letter : std::uint8_t { A = 0, B = 1 };

  using LetterString = std::vector<Letter>;

  char        to_char(Letter l) noexcept;
  std::string to_string(std::span<Letter const> s);

  // Largest a-exponent accepted from text input. Beyond this M needs more
  // than 64 KiB of digits after a single b.
  inline constexpr std::uint64_t kMaxAExponent = 1u << 16;

  class BsWord {
   public:
    BsWord() = default;
    BsWord(std::uint64_t n_a, BigInt m_b);

    static BsWord identity() {
      return BsWord();
    }
    static BsWord letter(Letter l);

    std::uint64_t n_a() const noexcept {
      return n_a_;
    }
    BigInt const& m_b() const noexcept {
      return m_b_;
    }
    bool is_identity() const noexcept {
      return n_a_ == 0 && m_b_ == 0;
    }

    friend bool operator==(BsWord const&, BsWord const&) = default;
    friend std::strong_ordering operator<=>(BsWord const& x, BsWord const& y);

   private:
    std::uint64_t n_a_ = 0;
    BigInt        m_b_ = 0;
  };

  BsWord mul(BsWord const& x, BsWord const& y);
  BsWord operator*(BsWord const& x, BsWord const& y);

  // x * l without materialising the letter.
  BsWord extend(BsWord const& x, Letter l);

  BsWord fold(std::span<Letter const> letters);

  // Accepts letter strings ("abab"), exponent syntax ("a^2 b^8", "a2.b8",
  // "b^2a^2"), the pair form "(2,8)" and "e" for the identity. Whitespace
  // and '.' separate tokens. Letters fold left to right.
  BsWord parse_word(std::string_view text);

  bool   is_prefix(BsWord const& prefix, BsWord const& w);
  BsWord left_quotient(BsWord const& prefix, BsWord const& w);

  // Geodesic word: no factor abb, minimal length.
  LetterString shortest_form(BsWord const& w);
  // a^N b^M: maximal length.
  LetterString longest_form(BsWord const& w);

  BigInt prefix_count(BsWord const& w);
  // All prefixes in (n_a, m_b) lexicographic order. Throws resource_limit
  // when there would be more than `limit`.
  std::vector<BsWord> prefixes(BsWord const& w, std::size_t limit);

  // "(N,M)"
  std::string to_pair_string(BsWord const& w);
  // Shortest form, "e" for the identity.
  std::string to_word_string(BsWord const& w);

  std::ostream& operator<<(std::ostream& os, BsWord const& w);

  struct GridDegree {
    std::uint64_t first  = 0;
    std::uint64_t second = 0;

    static GridDegree identity() {
      return {};
    }
    static GridDegree letter(Letter l) {
      return l == Letter::A ? GridDegree{1, 0} : GridDegree{0, 1};
    }
    bool is_identity() const noexcept {
      return first == 0 && second == 0;
    }

    friend auto operator<=>(GridDegree const&, GridDegree const&) = default;
  };

  GridDegree grid_add(GridDegree p, GridDegree q) noexcept;
  bool       grid_le(GridDegree p, GridDegree q) noexcept;
  GridDegree operator+(GridDegree p, GridDegree q) noexcept;
  GridDegree grid_sub(GridDegree q, GridDegree p);

  // "(m,n)", "m,n" or a colour word over {a,b,1,2} (counted).
  GridDegree  parse_grid_degree(std::string_view text);
  std::string to_pair_string(GridDegree p);

  std::ostream& operator<<(std::ostream& os, GridDegree const& p);

}  // namespace bsgraph

#endif  // BSGRAPH_WORD_HPP_
