#include "rshds/params.hpp"

#include <string>

#include "rshds/errors.hpp"

namespace rshds {

namespace {

void requireEven(std::int64_t h, const char* op) {
  if (h < 2) throw InvalidArgument(std::string(op) + ": h must be at least 2");
  if (h % 2 != 0) throw InvalidArgument(std::string(op) + ": h must be even (h = " + std::to_string(h) + ")");
  if (h > (std::int64_t{1} << 20)) throw InvalidArgument(std::string(op) + ": h too large");
}

}  // namespace

ParameterSet parameterFormulas(std::int64_t h) {
  requireEven(h, "parameterFormulas");
  return {h, h * h, h * (h - 1) / 2, h * (h - 2) / 4, 0};
}

std::int64_t mBound(std::int64_t h) {
  requireEven(h, "mBound");
  return (h - 1) / 4;
}

}  // namespace rshds
