#include "repsum/sequence.hpp"

#include <stdexcept>
#include <string>

namespace repsum {

Sequence::Sequence(std::int64_t first_index, std::vector<Rational> values)
    : first_(first_index), values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("sequence: must hold at least one value");
}

const Rational& Sequence::at(std::int64_t i) const {
  if (i < first_ || i > last_index()) {
    throw std::out_of_range("sequence: index " + std::to_string(i) + " outside [" +
                            std::to_string(first_) + ", " + std::to_string(last_index()) + "]");
  }
  return values_[static_cast<std::size_t>(i - first_)];
}

Rational Sequence::extended(std::int64_t i) const {
  if (i < first_ && i <= 0) return Rational{};
  return at(i);
}

}  // namespace repsum
