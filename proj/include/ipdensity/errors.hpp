#pragma once

#include <stdexcept>
#include <string>

namespace ipd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct RankError : Error {
  using Error::Error;
};

struct ContainmentError : Error {
  using Error::Error;
};

struct MembershipError : Error {
  using Error::Error;
};

struct InvalidObjectiveError : Error {
  using Error::Error;
};

struct UniquenessError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct IncompleteTableError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line) : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

}  // namespace ipd
