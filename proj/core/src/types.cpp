#include "lcsgap/types.hpp"

#include <charconv>

namespace lcsgap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kStructure: return "structure";
    case ErrorKind::kWitness: return "witness";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kCertification: return "certification";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::kParse,
                "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace lcsgap
