#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bulab::algebra {

using Complex = std::complex<double>;

// Complex values of a function on an indexed finite sample set (mesh
// vertices, group-algebra support, ...). The discrete stand-in for an
// element of C(X); all algebra is pointwise.
class SampledFunction {
 public:
  SampledFunction() = default;
  explicit SampledFunction(std::vector<Complex> values);  // rejects NaN/Inf

  static SampledFunction constant(Complex c, std::size_t count);
  static SampledFunction zero(std::size_t count) { return constant(0.0, count); }

  std::size_t sample_count() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }

  double sup_norm() const;

  SampledFunction& operator+=(const SampledFunction& rhs);
  SampledFunction& operator-=(const SampledFunction& rhs);
  SampledFunction& operator*=(Complex c);

  friend SampledFunction operator+(SampledFunction a, const SampledFunction& b) {
    a += b;
    return a;
  }
  friend SampledFunction operator-(SampledFunction a, const SampledFunction& b) {
    a -= b;
    return a;
  }
  friend SampledFunction operator*(Complex c, SampledFunction f) {
    f *= c;
    return f;
  }

  // Pointwise product; the algebra multiplication of C(X) models.
  friend SampledFunction pointwise_product(const SampledFunction& a,
                                           const SampledFunction& b);

  SampledFunction pointwise_pow(int k) const;

 private:
  std::vector<Complex> values_;
};

// Largest pointwise deviation between two functions on the same sample set.
double sup_distance(const SampledFunction& a, const SampledFunction& b);

}  // namespace bulab::algebra
