#pragma once

#include <stdexcept>
#include <string>

namespace endtangle {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownFamily : Error {
  using Error::Error;
};
struct InvalidParam : Error {
  using Error::Error;
};
struct ResourceBudgetExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct HorizonTooSmall : Error {
  using Error::Error;
};
struct WindowTooSmall : Error {
  using Error::Error;
};
struct EmptySource : Error {
  using Error::Error;
};
struct DominatedEnd : Error {
  using Error::Error;
};
struct CountTooLarge : Error {
  using Error::Error;
};
struct InsufficientCohesion : Error {
  using Error::Error;
};
struct CohesionTooHigh : Error {
  using Error::Error;
};
struct Inconclusive : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct NotAnOrientation : Error {
  using Error::Error;
};

}  // namespace endtangle
