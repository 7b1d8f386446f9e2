#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace continuum {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- lattice_core ----

struct UnknownElement : Error {
  explicit UnknownElement(const std::string& name)
      : Error("unknown element: " + name), element(name) {}
  std::string element;
};

struct NotAPartialOrder : Error {
  NotAPartialOrder(std::string a, std::string b)
      : Error("not a partial order: cycle through " + a + " and " + b),
        first(std::move(a)), second(std::move(b)) {}
  std::string first, second;
};

struct NotALattice : Error {
  NotALattice(std::string a, std::string b, const std::string& what_missing)
      : Error("not a lattice: pair (" + a + ", " + b + ") lacks a " + what_missing),
        first(std::move(a)), second(std::move(b)) {}
  std::string first, second;
};

struct NotDistributive : Error {
  NotDistributive(std::string x, std::string y, std::string z)
      : Error("not distributive: witness triple (" + x + ", " + y + ", " + z + ")"),
        a(std::move(x)), b(std::move(y)), c(std::move(z)) {}
  std::string a, b, c;
};

// ---- finite_space ----

struct UnknownPoint : Error {
  explicit UnknownPoint(const std::string& name)
      : Error("unknown point: " + name), point(name) {}
  std::string point;
};

struct MissingEmptyOrFull : Error {
  MissingEmptyOrFull() : Error("opens must contain the empty set and the full point set") {}
};

struct NotClosedUnderUnion : Error {
  NotClosedUnderUnion(std::string u, std::string v)
      : Error("opens not closed under union: " + u + " \xE2\x88\xAA " + v + " is missing"),
        first(std::move(u)), second(std::move(v)) {}
  std::string first, second;
};

struct NotClosedUnderIntersection : Error {
  NotClosedUnderIntersection(std::string u, std::string v)
      : Error("opens not closed under intersection: " + u + " \xE2\x88\xA9 " + v + " is missing"),
        first(std::move(u)), second(std::move(v)) {}
  std::string first, second;
};

struct OpenMentionsUnknownPoint : Error {
  explicit OpenMentionsUnknownPoint(const std::string& name)
      : Error("an open mentions an unknown point: " + name), point(name) {}
  std::string point;
};

struct NotAPreorder : Error {
  using Error::Error;
};

struct NotAnOpen : Error {
  explicit NotAnOpen(const std::string& subset)
      : Error("not an open of the space: " + subset) {}
};

// ---- interval_line ----

struct MalformedRegion : Error {
  using Error::Error;
};

struct PointNotInteriorToRegion : Error {
  explicit PointNotInteriorToRegion(const std::string& at)
      : Error("point " + at + " is not interior to the region") {}
};

struct NotPiecewiseLinear : Error {
  using Error::Error;
};

struct NotContinuousOnInterval : Error {
  using Error::Error;
};

struct TargetOutOfRange : Error {
  using Error::Error;
};

// ---- axioms_core ----

struct EmptySampleRegion : Error {
  explicit EmptySampleRegion(std::size_t index)
      : Error("sample region #" + std::to_string(index) + " is empty"), sample(index) {}
  std::size_t sample;
};

// ---- sheaf_engine ----

struct MissingSectionSet : Error {
  explicit MissingSectionSet(const std::string& open)
      : Error("no section set declared for open " + open) {}
};

struct MissingRestriction : Error {
  MissingRestriction(const std::string& from, const std::string& to)
      : Error("missing restriction " + from + " -> " + to) {}
};

struct IdentityViolated : Error {
  explicit IdentityViolated(const std::string& open)
      : Error("restriction " + open + " -> " + open + " is not the identity") {}
};

struct CompositionViolated : Error {
  CompositionViolated(const std::string& w, const std::string& v, const std::string& u)
      : Error("restriction " + w + " -> " + u + " disagrees with the composite through " + v) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& subset)
      : Error("subset " + subset + " is not closed (its complement is not an open)") {}
};

struct EmptySubset : Error {
  EmptySubset() : Error("subset must be nonempty") {}
};

struct NotAHomeomorphism : Error {
  using Error::Error;
};

// ---- nilpotent ----

struct OrderMismatch : Error {
  OrderMismatch(int a, int b)
      : Error("truncation order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// ---- logic ----

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t at)
      : Error("syntax error at offset " + std::to_string(at) + ": " + what), offset(at) {}
  std::size_t offset;
};

struct UnassignedAtom : Error {
  explicit UnassignedAtom(const std::string& name)
      : Error("no value assigned to atom: " + name), atom(name) {}
  std::string atom;
};

struct TooManyAtoms : Error {
  using Error::Error;
};

// ---- cli / io ----

struct InputParseError : Error {
  InputParseError(const std::string& file, std::size_t at, const std::string& what)
      : Error(file + ": parse error at byte " + std::to_string(at) + ": " + what),
        file_name(file), position(at) {}
  std::string file_name;
  std::size_t position;
};

}  // namespace continuum
