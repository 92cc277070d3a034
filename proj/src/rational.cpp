#include "fixcomb/rational.hpp"

#include <stdexcept>

namespace fixcomb {

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(s), BigInt(1));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    // The two-argument constructor canonicalizes; the string constructor of
    // mpq_rational does not, so never parse "p/q" in one go.
    return Rat(BigInt(num), d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

Point negated(const Point& p) {
  Point q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
  return q;
}

Rat dot(const Point& a, const Point& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat l1_norm(const Point& p) {
  Rat s = 0;
  for (const Rat& x : p) s += abs(x);
  return s;
}

Rat linf_norm(const Point& p) {
  Rat s = 0;
  for (const Rat& x : p)
    if (abs(x) > s) s = abs(x);
  return s;
}

Rat coord_sum(const Point& p) {
  Rat s = 0;
  for (const Rat& x : p) s += x;
  return s;
}

std::string point_to_string(const Point& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(p[i]);
  }
  return out + ")";
}

}  // namespace fixcomb
