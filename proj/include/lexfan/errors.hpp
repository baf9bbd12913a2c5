#pragma once

#include <stdexcept>
#include <string>

namespace lexfan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands disagree on the lattice rank n or the value-group length k.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class EmptyPolyhedron : public Error {
 public:
  explicit EmptyPolyhedron(const std::string& what = "polyhedron is empty") : Error(what) {}
};

/// Raised by operations that need a pointed polyhedron or cone.
class NotPointed : public Error {
 public:
  explicit NotPointed(const std::string& what = "polyhedron has lineality") : Error(what) {}
};

/// An affine functional has no finite infimum over the polyhedron.
class UnboundedBelow : public Error {
 public:
  explicit UnboundedBelow(const std::string& what) : Error("unbounded below: " + what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Malformed external input. `path` locates the offending field, e.g. "cells[2][0].gamma[1]".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace lexfan
