#include "copula_transport/panel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "copula_transport/error.hpp"

namespace copula_transport {

Panel::Panel(std::size_t length, std::size_t dimension,
             std::vector<double> column_major, std::string series_id)
    : length_(length),
      dimension_(dimension),
      values_(std::move(column_major)),
      series_id_(std::move(series_id)) {
  if (length_ < 2) {
    throw DataError("panel needs at least 2 observations, got " +
                    std::to_string(length_));
  }
  if (dimension_ < 1) throw DataError("panel needs at least 1 column");
  if (values_.size() != length_ * dimension_) {
    throw DataError("panel storage holds " + std::to_string(values_.size()) +
                    " values, expected " + std::to_string(length_ * dimension_));
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t t = 0; t < length_; ++t) {
      if (!std::isfinite(values_[i * length_ + t])) {
        throw DataError("non-finite value at row " + std::to_string(t + 1) +
                        ", column " + std::to_string(i + 1));
      }
    }
  }
}

Panel Panel::from_columns(const std::vector<std::vector<double>>& columns,
                          std::string series_id) {
  if (columns.empty()) throw DataError("panel needs at least 1 column");
  const std::size_t length = columns.front().size();
  std::vector<double> values;
  values.reserve(length * columns.size());
  for (const auto& column : columns) {
    if (column.size() != length) throw DataError("panel columns differ in length");
    values.insert(values.end(), column.begin(), column.end());
  }
  return Panel(length, columns.size(), std::move(values), std::move(series_id));
}

Panel Panel::columns(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > dimension_) {
    throw InvalidArgument("column range out of bounds");
  }
  std::vector<double> values(values_.begin() + first * length_,
                             values_.begin() + (first + count) * length_);
  return Panel(length_, count, std::move(values), series_id_);
}

Panel hstack(const Panel& x, const Panel& y) {
  if (x.length() != y.length()) {
    throw DataError("cannot stack panels of lengths " +
                    std::to_string(x.length()) + " and " +
                    std::to_string(y.length()));
  }
  std::vector<double> values(x.values().begin(), x.values().end());
  values.insert(values.end(), y.values().begin(), y.values().end());
  return Panel(x.length(), x.dimension() + y.dimension(), std::move(values));
}

}  // namespace copula_transport
