#include "omegalie/rational.hpp"

#include <cctype>
#include <cmath>

#include "omegalie/error.hpp"

namespace omegalie {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::AxiomViolation: return "AXIOM_VIOLATION";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::EmptyDecomposition: return "EMPTY_DECOMPOSITION";
    case ErrorCode::EmptyParameterSpace: return "EMPTY_PARAMETER_SPACE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownKind: return "UNKNOWN_KIND";
  }
  return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat value(p, q);
  value.canonicalize();
  return value;
}

std::string format_rat(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rationalize(double x, long max_denominator) {
  if (!std::isfinite(x)) throw Error(ErrorCode::Precondition, "cannot rationalize a non-finite value");
  if (max_denominator < 1) throw Error(ErrorCode::Precondition, "max_denominator must be positive");
  // Exact binary value of x, then the usual bounded continued-fraction walk.
  Rat target(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = target.get_num(), d = target.get_den();
  const mpz_class bound = max_denominator;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > bound) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class rem = n - a * d;
    n = d;
    d = rem;
    if (d == 0) break;
  }
  Rat best(p1, q1);
  best.canonicalize();
  if (q1 == 0) best = Rat(p0, q0);
  if (d != 0) {
    // Semiconvergent with the largest admissible partial quotient.
    mpz_class k = (bound - q0) / q1;
    Rat semi(p0 + k * p1, q0 + k * q1);
    semi.canonicalize();
    if (abs(semi - target) < abs(best - target)) best = semi;
  }
  return best;
}

}  // namespace omegalie
