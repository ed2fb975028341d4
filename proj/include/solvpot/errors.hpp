#pragma once

#include <stdexcept>
#include <string>

namespace solvpot {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at (or within the guard radius of) a pole or singular point.
class NearPole : public Error {
 public:
  explicit NearPole(const std::string& what) : Error("near pole: " + what) {}
};

/// A family specification violates its kind's constraints.
class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& what) : Error("invalid spec: " + what) {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& what) : Error("out of domain: " + what) {}
};

/// Coordinate-map integration cannot start from the requested point.
class BadStart : public Error {
 public:
  explicit BadStart(const std::string& what) : Error("bad start: " + what) {}
};

/// Step-size control collapsed below the floor while solving a map.
class StalledMap : public Error {
 public:
  explicit StalledMap(const std::string& what) : Error("stalled map: " + what) {}
};

class NotCollapsible : public Error {
 public:
  explicit NotCollapsible(const std::string& what) : Error("not collapsible: " + what) {}
};

class NotConverged : public Error {
 public:
  explicit NotConverged(const std::string& what) : Error("not converged: " + what) {}
};

}  // namespace solvpot
