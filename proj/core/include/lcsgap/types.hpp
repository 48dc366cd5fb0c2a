#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace lcsgap {

/// Alphabet symbol. Family strings use 0..|alphabet|-1; vertex symbols use
/// the vertex labels 1..n.
using Symbol = std::int32_t;
using Sequence = std::vector<Symbol>;

/// Vertex label, 1-based.
using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;

/// Exact rational used for every threshold comparison.
using Rational = boost::rational<std::int64_t>;

enum class ErrorKind {
  kParameter,
  kDegenerate,
  kPrecondition,
  kStructure,
  kWitness,
  kDomain,
  kCertification,
  kBudget,
  kParse,
  kIo,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parses "p/q" or a plain integer "p". Throws kParse on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering (always with a denominator).
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace lcsgap
