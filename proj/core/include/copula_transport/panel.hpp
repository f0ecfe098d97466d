#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace copula_transport {

// T observations of a d-variate series. Stored column-major so that each
// coordinate is a contiguous span.
class Panel {
 public:
  // `column_major` holds `length * dimension` finite values.
  Panel(std::size_t length, std::size_t dimension,
        std::vector<double> column_major, std::string series_id = {});

  static Panel from_columns(const std::vector<std::vector<double>>& columns,
                            std::string series_id = {});

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::string& series_id() const noexcept { return series_id_; }

  double at(std::size_t t, std::size_t i) const {
    return values_[i * length_ + t];
  }
  std::span<const double> column(std::size_t i) const {
    return {values_.data() + i * length_, length_};
  }
  std::span<const double> values() const noexcept { return values_; }

  // Sub-panel made of columns [first, first + count).
  Panel columns(std::size_t first, std::size_t count) const;

  bool operator==(const Panel&) const = default;

 private:
  std::size_t length_;
  std::size_t dimension_;
  std::vector<double> values_;
  std::string series_id_;
};

// Column-wise concatenation (x_1..x_d, y_1..y_d). Both panels must share T.
Panel hstack(const Panel& x, const Panel& y);

}  // namespace copula_transport
