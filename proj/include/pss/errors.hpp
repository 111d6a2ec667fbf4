#ifndef PSS_ERRORS_HPP
#define PSS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pss
{

/// Objective returned NaN; carries the offending point.
class EvaluationError : public std::runtime_error
{
public:
  EvaluationError(const std::string& what, std::vector<double> point)
    : std::runtime_error(what), point_(std::move(point))
  {}

  const std::vector<double>& point() const noexcept { return point_; }

private:
  std::vector<double> point_;
};

/// Unknown problem id or no published optimum for the requested dimension.
class LookupError : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/// Experiment configuration rejected before any run starts.
class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Report could not be written or read; the message includes the path.
class ExportError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed command line.
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pss

#endif  // PSS_ERRORS_HPP
