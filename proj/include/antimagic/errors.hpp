#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected input: malformed text, ids out of range, or a graph outside the
// odd-regular hypothesis. The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

class NotRegularError : public ValidationError {
 public:
  NotRegularError(int v1, int v2, int d1, int d2)
      : ValidationError("not regular: degree(" + std::to_string(v1) + ") = " +
                        std::to_string(d1) + " but degree(" +
                        std::to_string(v2) + ") = " + std::to_string(d2)),
        v1(v1), v2(v2), d1(d1), d2(d2) {}
  int v1, v2, d1, d2;
};

class EvenDegreeError : public ValidationError {
 public:
  explicit EvenDegreeError(int k)
      : ValidationError("degree " + std::to_string(k) +
                        " is even; need odd degree k >= 3"),
        k(k) {}
  int k;
};

class DegreeTooSmallError : public ValidationError {
 public:
  explicit DegreeTooSmallError(int k)
      : ValidationError("degree " + std::to_string(k) +
                        " < 3; need odd degree k >= 3"),
        k(k) {}
  int k;
};

class ParityError : public ValidationError {
 public:
  ParityError(int n, int k)
      : ValidationError("n*k must be even, got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k)),
        n(n), k(k) {}
  int n, k;
};

class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(int vertex)
      : Error("graph is not connected: vertex " + std::to_string(vertex) +
              " is unreachable from the root"),
        vertex(vertex) {}
  int vertex;
};

class RetriesExhaustedError : public Error {
 public:
  RetriesExhaustedError(int n, int k, int retries)
      : Error("random_regular(" + std::to_string(n) + ", " +
              std::to_string(k) + ") failed after " + std::to_string(retries) +
              " attempts") {}
};

// An edge spans layers that differ by two or more; the layering is corrupt.
class LayerSkipError : public Error {
 public:
  LayerSkipError(int edge, int u, int v)
      : Error("edge " + std::to_string(edge) + " (" + std::to_string(u) + "," +
              std::to_string(v) + ") skips a layer"),
        edge(edge) {}
  int edge;
};

// A slice vertex on the upper side has no slice edge, so no sigma edge exists.
class IsolatedUError : public Error {
 public:
  explicit IsolatedUError(int u)
      : Error("upper vertex " + std::to_string(u) + " has no slice edge"),
        u(u) {}
  int u;
};

// Artifacts handed to the auditor do not belong to the graph/labels given.
class ArtifactMismatchError : public Error {
 public:
  using Error::Error;
};

// Bug trap: a postcondition the construction guarantees failed to hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace antimagic
