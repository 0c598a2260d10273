#include "bsgraph/word.hpp"

#include <algorithm>  // for reverse
#include <cctype>     // for isdigit, isspace
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream

#include "bsgraph/error.hpp"

namespace bsgraph {

  namespace {
    // Guard for materialising letter strings of astronomically long words.
    constexpr std::size_t kMaxFormLength = std::size_t(1) << 24;

    bool is_separator(char c) {
      return std::isspace(static_cast<unsigned char>(c)) || c == '.'
             || c == '*';
    }

    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    }

    std::string quote(std::string_view text) {
      return "'" + std::string(text) + "'";
    }

    BsWord parse_pair(std::string_view text) {
      // "(N,M)" with optional spaces
      std::string body(text.substr(1));
      if (body.empty() || body.back() != ')') {
        raise(ErrorKind::syntax, "unterminated pair " + quote(text));
      }
      body.pop_back();
      auto comma = body.find(',');
      if (comma == std::string::npos) {
        raise(ErrorKind::syntax, "pair needs a comma in " + quote(text));
      }
      auto trim = [](std::string s) {
        auto first = s.find_first_not_of(" \t");
        auto last  = s.find_last_not_of(" \t");
        return first == std::string::npos ? std::string()
                                           : s.substr(first, last - first + 1);
      };
      std::string n = trim(body.substr(0, comma));
      std::string m = trim(body.substr(comma + 1));
      for (auto const* part : {&n, &m}) {
        if (!part->empty() && part->front() == '-') {
          raise(ErrorKind::negative_exponent, "in " + quote(text));
        }
        if (part->empty()
            || !std::all_of(part->begin(), part->end(), is_digit)) {
          raise(ErrorKind::syntax, "bad integer in " + quote(text));
        }
      }
      if (n.size() > 6 || std::stoull(n) > kMaxAExponent) {
        raise(ErrorKind::resource_limit, "a-exponent too large in " + quote(text));
      }
      return BsWord(std::stoull(n), BigInt(m));
    }
  }  // namespace

  char to_char(Letter l) noexcept {
    return l == Letter::A ? 'a' : 'b';
  }

  std::string to_string(std::span<Letter const> s) {
    std::string out;
    out.reserve(s.size());
    for (Letter l : s) {
      out.push_back(to_char(l));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BsWord
  ////////////////////////////////////////////////////////////////////////

  BsWord::BsWord(std::uint64_t n_a, BigInt m_b)
      : n_a_(n_a), m_b_(std::move(m_b)) {
    if (m_b_ < 0) {
      raise(ErrorKind::negative_exponent, "b-exponent must be non-negative");
    }
  }

  BsWord BsWord::letter(Letter l) {
    return l == Letter::A ? BsWord(1, 0) : BsWord(0, 1);
  }

  std::strong_ordering operator<=>(BsWord const& x, BsWord const& y) {
    if (auto c = x.n_a_ <=> y.n_a_; c != 0) {
      return c;
    }
    if (x.m_b_ < y.m_b_) {
      return std::strong_ordering::less;
    }
    return x.m_b_ == y.m_b_ ? std::strong_ordering::equal
                            : std::strong_ordering::greater;
  }

  BsWord mul(BsWord const& x, BsWord const& y) {
    BigInt m = x.m_b();
    m <<= y.n_a();
    m += y.m_b();
    return BsWord(x.n_a() + y.n_a(), std::move(m));
  }

  BsWord operator*(BsWord const& x, BsWord const& y) {
    return mul(x, y);
  }

  BsWord extend(BsWord const& x, Letter l) {
    if (l == Letter::A) {
      return BsWord(x.n_a() + 1, x.m_b() << 1);
    }
    return BsWord(x.n_a(), x.m_b() + 1);
  }

  BsWord fold(std::span<Letter const> letters) {
    BsWord result;
    for (Letter l : letters) {
      result = extend(result, l);
    }
    return result;
  }

  BsWord parse_word(std::string_view text) {
    auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) {
      return BsWord::identity();
    }
    if (text[start] == '(') {
      auto end = text.find_last_not_of(" \t\r\n");
      return parse_pair(text.substr(start, end - start + 1));
    }

    BsWord      result;
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (is_separator(c)) {
        ++i;
        continue;
      }
      if (c == 'e') {
        ++i;
        continue;
      }
      if (c != 'a' && c != 'b') {
        raise(ErrorKind::syntax,
              "unexpected character '" + std::string(1, c) + "' at offset "
                  + std::to_string(i) + " in " + quote(text),
              i);
      }
      Letter letter = c == 'a' ? Letter::A : Letter::B;
      ++i;
      bool caret = false;
      if (i < text.size() && text[i] == '^') {
        caret = true;
        ++i;
      }
      if (i < text.size() && text[i] == '-') {
        raise(ErrorKind::negative_exponent,
              "at offset " + std::to_string(i) + " in " + quote(text), i);
      }
      std::size_t digits_begin = i;
      while (i < text.size() && is_digit(text[i])) {
        ++i;
      }
      if (caret && digits_begin == i) {
        raise(ErrorKind::syntax,
              "missing exponent after '^' in " + quote(text), digits_begin);
      }
      if (digits_begin == i) {
        result = extend(result, letter);
        continue;
      }
      std::string digits(text.substr(digits_begin, i - digits_begin));
      if (letter == Letter::A) {
        if (digits.size() > 6 || std::stoull(digits) > kMaxAExponent) {
          raise(ErrorKind::resource_limit,
                "a-exponent too large in " + quote(text), digits_begin);
        }
        result = mul(result, BsWord(std::stoull(digits), 0));
      } else {
        result = mul(result, BsWord(0, BigInt(digits)));
      }
    }
    return result;
  }

  bool is_prefix(BsWord const& prefix, BsWord const& w) {
    if (prefix.n_a() > w.n_a()) {
      return false;
    }
    return (prefix.m_b() << (w.n_a() - prefix.n_a())) <= w.m_b();
  }

  BsWord left_quotient(BsWord const& prefix, BsWord const& w) {
    if (!is_prefix(prefix, w)) {
      raise(ErrorKind::not_a_prefix,
            to_pair_string(prefix) + " is not a prefix of "
                + to_pair_string(w));
    }
    std::uint64_t n = w.n_a() - prefix.n_a();
    return BsWord(n, w.m_b() - (prefix.m_b() << n));
  }

  LetterString shortest_form(BsWord const& w) {
    LetterString  reversed;
    std::uint64_t n = w.n_a();
    BigInt        m = w.m_b();
    while (n > 0 || m > 0) {
      if (reversed.size() >= kMaxFormLength) {
        raise(ErrorKind::resource_limit,
              "shortest form of " + to_pair_string(w) + " is too long");
      }
      if (m & 1) {
        reversed.push_back(Letter::B);
        m -= 1;
      } else if (n > 0) {
        reversed.push_back(Letter::A);
        --n;
        m >>= 1;
      } else {
        reversed.push_back(Letter::B);
        m -= 1;
      }
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
  }

  LetterString longest_form(BsWord const& w) {
    if (BigInt(w.n_a()) + w.m_b() > kMaxFormLength) {
      raise(ErrorKind::resource_limit,
            "longest form of " + to_pair_string(w) + " is too long");
    }
    LetterString result(w.n_a(), Letter::A);
    result.resize(w.n_a() + static_cast<std::size_t>(w.m_b()), Letter::B);
    return result;
  }

  BigInt prefix_count(BsWord const& w) {
    BigInt total = 0;
    for (std::uint64_t i = 0; i <= w.n_a(); ++i) {
      total += (w.m_b() >> (w.n_a() - i)) + 1;
    }
    return total;
  }

  std::vector<BsWord> prefixes(BsWord const& w, std::size_t limit) {
    if (prefix_count(w) > limit) {
      raise(ErrorKind::resource_limit,
            to_pair_string(w) + " has more than " + std::to_string(limit)
                + " prefixes");
    }
    std::vector<BsWord> result;
    for (std::uint64_t i = 0; i <= w.n_a(); ++i) {
      auto row = static_cast<std::size_t>(w.m_b() >> (w.n_a() - i));
      for (std::size_t j = 0; j <= row; ++j) {
        result.emplace_back(i, j);
      }
    }
    return result;
  }

  std::string to_pair_string(BsWord const& w) {
    std::ostringstream os;
    os << '(' << w.n_a() << ',' << w.m_b() << ')';
    return os.str();
  }

  std::string to_word_string(BsWord const& w) {
    if (w.is_identity()) {
      return "e";
    }
    return to_string(shortest_form(w));
  }

  std::ostream& operator<<(std::ostream& os, BsWord const& w) {
    return os << to_pair_string(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // GridDegree
  ////////////////////////////////////////////////////////////////////////

  GridDegree grid_add(GridDegree p, GridDegree q) noexcept {
    return {p.first + q.first, p.second + q.second};
  }

  bool grid_le(GridDegree p, GridDegree q) noexcept {
    return p.first <= q.first && p.second <= q.second;
  }

  GridDegree operator+(GridDegree p, GridDegree q) noexcept {
    return grid_add(p, q);
  }

  GridDegree grid_sub(GridDegree q, GridDegree p) {
    if (!grid_le(p, q)) {
      raise(ErrorKind::not_a_prefix,
            to_pair_string(p) + " is not below " + to_pair_string(q));
    }
    return {q.first - p.first, q.second - p.second};
  }

  GridDegree parse_grid_degree(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(c);
      }
    }
    if (s.empty() || s == "e") {
      return {};
    }
    if (s.find(',') != std::string::npos) {
      if (s.front() == '(') {
        if (s.back() != ')') {
          raise(ErrorKind::syntax, "unterminated pair " + quote(text));
        }
        s = s.substr(1, s.size() - 2);
      }
      auto comma = s.find(',');
      std::string first  = s.substr(0, comma);
      std::string second = s.substr(comma + 1);
      for (auto const* part : {&first, &second}) {
        if (!part->empty() && part->front() == '-') {
          raise(ErrorKind::negative_exponent, "in " + quote(text));
        }
        if (part->empty() || part->size() > 18
            || !std::all_of(part->begin(), part->end(), is_digit)) {
          raise(ErrorKind::syntax, "bad integer in " + quote(text));
        }
      }
      return {std::stoull(first), std::stoull(second)};
    }
    GridDegree result;
    for (std::size_t i = 0; i < s.size(); ++i) {
      switch (s[i]) {
        case 'a':
        case '1':
          ++result.first;
          break;
        case 'b':
        case '2':
          ++result.second;
          break;
        case '.':
          break;
        default:
          raise(ErrorKind::syntax,
                "unexpected character '" + std::string(1, s[i])
                    + "' in grid degree " + quote(text),
                i);
      }
    }
    return result;
  }

  std::string to_pair_string(GridDegree p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }

  std::ostream& operator<<(std::ostream& os, GridDegree const& p) {
    return os << to_pair_string(p);
  }

}  // namespace bsgraph
