#include "hermlie/scalar.hpp"

#include "hermlie/error.hpp"

#include <cctype>

namespace hermlie {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorCode::InvalidInput, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_scalar(text);
    Scalar d{std::string(den)};
    if (d == 0) bad_scalar(text);
    value = Scalar(std::string(num)) / d;
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_scalar(text);
    Scalar scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = (whole.empty() ? Scalar(0) : Scalar(std::string(whole))) +
            Scalar(std::string(frac)) / scale;
  } else {
    if (!all_digits(body)) bad_scalar(text);
    value = Scalar(std::string(body));
  }
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& x) { return x.str(); }

double to_double(const Scalar& x) { return x.convert_to<double>(); }

}  // namespace hermlie
