#include "pss/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pss
{

CoefficientMatrix::CoefficientMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), values_(rows * cols, 0.0)
{}

CoefficientMatrix uniform_matrix(RandomStream& stream, std::size_t rows, std::size_t cols)
{
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("uniform_matrix: rows and cols must be at least 1 (got " +
                                std::to_string(rows) + "x" + std::to_string(cols) + ")");

  CoefficientMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = stream.uniform();
  return m;
}

double scale_to_interval(double u, double lower, double upper)
{
  if (lower > upper)
    throw std::invalid_argument("scale_to_interval: lower bound exceeds upper bound");
  const double x = lower + u * (upper - lower);
  // rounding can land on upper for u just below 1
  if (x >= upper && lower < upper)
    return std::nextafter(upper, lower);
  return x;
}

std::unique_ptr<Sampler> make_sampler(SamplingMethod method)
{
  switch (method) {
    case SamplingMethod::monte_carlo:
      return std::make_unique<MonteCarloSampler>();
    case SamplingMethod::latin_hypercube:
      break;
  }
  throw std::logic_error("make_sampler: latin hypercube sampling is not implemented");
}

}  // namespace pss
