#include "bulab/algebra/sampled_function.hpp"

#include <cmath>

#include "bulab/errors.hpp"

namespace bulab::algebra {

namespace {

void require_same_size(const SampledFunction& a, const SampledFunction& b) {
  if (a.sample_count() != b.sample_count())
    throw DimensionError("sample counts differ: " +
                         std::to_string(a.sample_count()) + " vs " +
                         std::to_string(b.sample_count()));
}

}  // namespace

SampledFunction::SampledFunction(std::vector<Complex> values)
    : values_(std::move(values)) {
  for (const Complex& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvalidValueError("sampled function contains a non-finite value");
}

SampledFunction SampledFunction::constant(Complex c, std::size_t count) {
  return SampledFunction(std::vector<Complex>(count, c));
}

double SampledFunction::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

SampledFunction& SampledFunction::operator*=(Complex c) {
  for (Complex& v : values_) v *= c;
  return *this;
}

SampledFunction pointwise_product(const SampledFunction& a,
                                  const SampledFunction& b) {
  require_same_size(a, b);
  std::vector<Complex> out(a.sample_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return SampledFunction(std::move(out));
}

SampledFunction SampledFunction::pointwise_pow(int k) const {
  std::vector<Complex> out(values_.size(), Complex(1.0));
  for (int step = 0; step < k; ++step)
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] *= values_[i];
  return SampledFunction(std::move(out));
}

double sup_distance(const SampledFunction& a, const SampledFunction& b) {
  require_same_size(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.sample_count(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace bulab::algebra
