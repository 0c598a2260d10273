#include "bsgraph/monoid.hpp"

#include "bsgraph/error.hpp"

namespace bsgraph {

  char const* to_string(Mode mode) noexcept {
    return mode == Mode::bs ? "bs" : "grid";
  }

  BsMonoid::Layout::Layout(Degree const& top, std::size_t limit) : top_(top) {
    BigInt total = 0;
    for (std::uint64_t i = 0; i <= top.n_a(); ++i) {
      BigInt row = (top.m_b() >> (top.n_a() - i)) + 1;
      total += row;
      if (total > limit) {
        raise(ErrorKind::resource_limit,
              "model graph of " + to_pair_string(top) + " has more than "
                  + std::to_string(limit) + " vertices");
      }
      offset_.push_back(size_);
      row_length_.push_back(static_cast<std::size_t>(row));
      size_ += row_length_.back();
    }
  }

  std::vector<BsWord> BsMonoid::Layout::vertices() const {
    std::vector<BsWord> result;
    result.reserve(size_);
    for (std::size_t i = 0; i < row_length_.size(); ++i) {
      for (std::size_t j = 0; j < row_length_[i]; ++j) {
        result.emplace_back(i, j);
      }
    }
    return result;
  }

  std::optional<std::size_t> BsMonoid::Layout::index(BsWord const& z) const {
    if (z.n_a() > top_.n_a()) {
      return std::nullopt;
    }
    auto row = static_cast<std::size_t>(z.n_a());
    if (z.m_b() >= row_length_[row]) {
      return std::nullopt;
    }
    return offset_[row] + static_cast<std::size_t>(z.m_b());
  }

  LetterString GridMonoid::shortest_form(GridDegree const& d) {
    LetterString result(d.first, Letter::A);
    result.resize(d.first + d.second, Letter::B);
    return result;
  }

  GridMonoid::Layout::Layout(GridDegree const& top, std::size_t limit)
      : top_(top) {
    BigInt total = BigInt(top.first + 1) * BigInt(top.second + 1);
    if (total > limit) {
      raise(ErrorKind::resource_limit,
            "model graph of " + to_pair_string(top) + " has more than "
                + std::to_string(limit) + " vertices");
    }
    size_ = static_cast<std::size_t>(total);
  }

  std::vector<GridDegree> GridMonoid::Layout::vertices() const {
    std::vector<GridDegree> result;
    result.reserve(size_);
    for (std::uint64_t i = 0; i <= top_.first; ++i) {
      for (std::uint64_t j = 0; j <= top_.second; ++j) {
        result.push_back({i, j});
      }
    }
    return result;
  }

  std::optional<std::size_t> GridMonoid::Layout::index(GridDegree const& z) const {
    if (!grid_le(z, top_)) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(z.first * (top_.second + 1) + z.second);
  }

}  // namespace bsgraph
