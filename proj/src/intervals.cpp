#include "zflab/intervals.hpp"

#include <algorithm>
#include <cctype>

namespace zflab {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  auto digits = [&](std::int64_t& out) {
    const std::size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (out > (INT64_MAX - 9) / 10) throw ParseError("rational literal out of range", start);
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    if (i == start) throw ParseError("expected digits", i);
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t at = i;
    digits(den);
    if (den == 0) throw ParseError("zero denominator", at);
  }
  if (i != text.size()) throw ParseError("trailing input in rational", i);
  return Rational(neg ? -num : num, den);
}

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Interval::Interval(const IntervalBounds& b) : b_(b) {
  if ((!b_.lo && b_.lo_closed) || (!b_.hi && b_.hi_closed)) {
    throw InvalidArgument("infinite interval ends must be open");
  }
  if (b_.lo && b_.hi) {
    if (*b_.lo > *b_.hi) throw EmptyInterval("lower end exceeds upper end");
    if (*b_.lo == *b_.hi && !(b_.lo_closed && b_.hi_closed)) {
      throw EmptyInterval("a point interval must be closed at both ends");
    }
  }
}

bool Interval::contains(const Rational& x) const {
  if (b_.lo && (b_.lo_closed ? x < *b_.lo : x <= *b_.lo)) return false;
  if (b_.hi && (b_.hi_closed ? x > *b_.hi : x >= *b_.hi)) return false;
  return true;
}

std::string Interval::to_string() const {
  std::string s = b_.lo_closed ? "[" : "(";
  s += b_.lo ? zflab::to_string(*b_.lo) : "-inf";
  s += ",";
  s += b_.hi ? zflab::to_string(*b_.hi) : "+inf";
  s += b_.hi_closed ? "]" : ")";
  return s;
}

Interval parse_interval(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 5) throw ParseError("interval literal too short", 0);
  IntervalBounds b;
  if (text.front() != '(' && text.front() != '[') throw ParseError("expected '(' or '['", 0);
  if (text.back() != ')' && text.back() != ']') throw ParseError("expected ')' or ']'", text.size() - 1);
  b.lo_closed = text.front() == '[';
  b.hi_closed = text.back() == ']';
  const std::string_view body = text.substr(1, text.size() - 2);
  const std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected ','", 1);
  const std::string_view lo = body.substr(0, comma);
  const std::string_view hi = body.substr(comma + 1);
  try {
    if (lo != "-inf") b.lo = parse_rational(lo);
  } catch (const ParseError& e) {
    throw ParseError("bad lower end", 1 + e.position());
  }
  try {
    if (hi != "+inf") b.hi = parse_rational(hi);
  } catch (const ParseError& e) {
    throw ParseError("bad upper end", 2 + comma + e.position());
  }
  return Interval(b);
}

Rational choice_value(const Interval& i) {
  if (!i.lo() && !i.hi()) return Rational(0);
  if (i.lo() && i.hi()) return (*i.lo() + *i.hi()) / 2;
  if (i.hi()) return *i.hi() - 1;
  return *i.lo() + 1;
}

bool phi2_holds(const Interval& i, const Rational& x) {
  // One disjunct per shape of interval.
  const bool lower = i.lo().has_value();
  const bool upper = i.hi().has_value();
  if (!lower && !upper) return x == Rational(0);
  if (!lower && upper) return x == *i.hi() - 1;
  if (lower && !upper) return x == *i.lo() + 1;
  return x == (*i.lo() + *i.hi()) / 2;
}

bool pol_compare(const Rational& a_star, const Rational& x, const Rational& y) {
  const Rational dx = boost::abs(x - a_star);
  const Rational dy = boost::abs(y - a_star);
  return dx <= dy && (dx != dy || x <= y);
}

SampleReport sample_check_pol(const Interval& i, std::vector<Rational> sample) {
  for (const auto& x : sample) {
    if (!i.contains(x)) {
      throw SampleOutsideInterval(to_string(x) + " is not in " + i.to_string());
    }
  }
  const Rational a_star = choice_value(i);
  sample.push_back(a_star);
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

  BoolMatrix m(sample.size());
  for (std::size_t x = 0; x < sample.size(); ++x) {
    for (std::size_t y = 0; y < sample.size(); ++y) m.set(x, y, pol_compare(a_star, sample[x], sample[y]));
  }
  const auto p = matrix_properties(m);
  SampleReport r{p.reflexive, p.antisymmetric, p.transitive, p.total, std::nullopt, sample};
  if (p.least) r.least = sample[*p.least];
  return r;
}

bool is_pol_with_chosen_least(const SampleReport& r, const Interval& i) {
  return r.reflexive && r.antisymmetric && r.transitive && r.total && r.least &&
         *r.least == choice_value(i);
}

std::vector<Rational> hyper_choice(std::span<const Interval> components) {
  std::vector<Rational> out;
  for (const auto& c : components) out.push_back(choice_value(c));
  return out;
}

std::vector<Rational> hyper_choice(std::span<const IntervalBounds> components) {
  std::vector<Interval> valid;
  for (std::size_t k = 0; k < components.size(); ++k) {
    try {
      valid.emplace_back(components[k]);
    } catch (const EmptyInterval& e) {
      throw EmptyInterval("component " + std::to_string(k) + ": " + e.what(), k);
    }
  }
  return hyper_choice(std::span<const Interval>(valid));
}

namespace {

Rational random_grid_point(Rng& rng, std::int64_t radius) {
  const std::int64_t den = uniform_int(rng, 1, 4);
  return Rational(uniform_int(rng, -radius * den, radius * den), den);
}

}  // namespace

Interval random_interval(Rng& rng) {
  while (true) {
    IntervalBounds b;
    if (uniform_int(rng, 0, 4) != 0) {
      b.lo = random_grid_point(rng, 10);
      b.lo_closed = uniform_int(rng, 0, 1) == 1;
    }
    if (uniform_int(rng, 0, 4) != 0) {
      b.hi = random_grid_point(rng, 10);
      b.hi_closed = uniform_int(rng, 0, 1) == 1;
    }
    if (b.lo && b.hi && *b.lo > *b.hi) std::swap(b.lo, b.hi);
    try {
      return Interval(b);
    } catch (const EmptyInterval&) {
      // Open point intervals; draw again.
    }
  }
}

std::vector<Rational> random_sample(const Interval& i, std::size_t max_size, Rng& rng) {
  const auto target = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_size)));
  std::vector<Rational> out;
  for (int attempt = 0; attempt < 200 && out.size() < target; ++attempt) {
    Rational x;
    if (i.lo() && i.hi()) {
      x = *i.lo() + (*i.hi() - *i.lo()) * Rational(uniform_int(rng, 0, 16), 16);
    } else if (i.lo()) {
      x = *i.lo() + Rational(uniform_int(rng, 0, 80), 4);
    } else if (i.hi()) {
      x = *i.hi() - Rational(uniform_int(rng, 0, 80), 4);
    } else {
      x = random_grid_point(rng, 20);
    }
    if (i.contains(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace zflab
