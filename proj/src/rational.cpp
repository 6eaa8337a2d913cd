#include "fairdiv/rational.hpp"

#include <cctype>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP bridging assumes LP64");

Rational::Rational(std::int64_t num) : value_(static_cast<long>(num)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw FairDivError(Errc::kInvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw FairDivError(Errc::kParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  const std::string num_s(num[0] == '+' ? num.substr(1) : num);
  const std::string den_s(den[0] == '+' ? den.substr(1) : den);
  mpz_class d(den_s);
  if (d == 0) {
    throw FairDivError(Errc::kParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(mpq_class(mpz_class(num_s), d));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

bool Rational::fits_int64() const {
  return value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p();
}

std::int64_t Rational::numerator_i64() const {
  if (!fits_int64()) throw FairDivError(Errc::kTooLarge, "numerator exceeds 64 bits");
  return value_.get_num().get_si();
}

std::int64_t Rational::denominator_i64() const {
  if (!fits_int64()) throw FairDivError(Errc::kTooLarge, "denominator exceeds 64 bits");
  return value_.get_den().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw FairDivError(Errc::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

Rational pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

Rational lcm_denominator(const Rational& a, const Rational& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.value_.get_den_mpz_t(), b.value_.get_den_mpz_t());
  return Rational(mpq_class(l));
}

}  // namespace fairdiv
