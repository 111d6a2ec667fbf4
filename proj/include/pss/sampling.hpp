#ifndef PSS_SAMPLING_HPP
#define PSS_SAMPLING_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pss/random.hpp"

namespace pss
{

/// Row-major rows x cols matrix of coefficients in [0,1).
class CoefficientMatrix
{
public:
  CoefficientMatrix() = default;
  CoefficientMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const noexcept { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return values_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept
  {
    return {values_.data() + r * cols_, cols_};
  }

  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const CoefficientMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// i.i.d. U[0,1) matrix; consumes exactly rows*cols draws in row-major order.
CoefficientMatrix uniform_matrix(RandomStream& stream, std::size_t rows, std::size_t cols);

/// lower + u * (upper - lower).
double scale_to_interval(double u, double lower, double upper);

enum class SamplingMethod
{
  monte_carlo,
  latin_hypercube,
};

/// Design-of-experiments method that fills the per-iteration coefficient matrix.
class Sampler
{
public:
  virtual ~Sampler() = default;
  virtual CoefficientMatrix sample(RandomStream& stream, std::size_t rows, std::size_t cols) = 0;
  virtual SamplingMethod method() const noexcept = 0;
};

class MonteCarloSampler final : public Sampler
{
public:
  CoefficientMatrix sample(RandomStream& stream, std::size_t rows, std::size_t cols) override
  {
    return uniform_matrix(stream, rows, cols);
  }

  SamplingMethod method() const noexcept override { return SamplingMethod::monte_carlo; }
};

/// Only monte_carlo is available; latin_hypercube throws std::logic_error.
std::unique_ptr<Sampler> make_sampler(SamplingMethod method);

}  // namespace pss

#endif  // PSS_SAMPLING_HPP
