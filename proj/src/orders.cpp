#include "zflab/orders.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zflab {

BoolMatrix BoolMatrix::from_mask(std::size_t n, std::uint64_t mask) {
  BoolMatrix m(n);
  for (std::size_t k = 0; k < n * n; ++k) m.bits_[k] = mask >> k & 1;
  return m;
}

MatrixProperties matrix_properties(const BoolMatrix& m) {
  const std::size_t n = m.size();
  MatrixProperties p;
  p.reflexive = true;
  p.antisymmetric = true;
  p.transitive = true;
  p.total = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!m(i, i)) p.reflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j) && !m(j, i)) p.total = false;
      if (i != j && m(i, j) && m(j, i)) p.antisymmetric = false;
      if (!m(i, j)) continue;
      for (std::size_t k = 0; k < n && p.transitive; ++k) {
        if (m(j, k) && !m(i, k)) p.transitive = false;
      }
    }
  }
  std::size_t universal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < n && all; ++j) all = m(i, j);
    if (all) {
      ++universal;
      p.least = i;
    }
  }
  if (universal != 1) p.least.reset();
  return p;
}

namespace {

bool properties_satisfy(const MatrixProperties& p, std::size_t n, OrderKind kind) {
  switch (kind) {
    case OrderKind::WellOrder:
      return p.total && p.antisymmetric && p.transitive;
    case OrderKind::PartialOrderWithLeast:
      return p.reflexive && p.antisymmetric && p.transitive && (n == 0 || p.least.has_value());
    case OrderKind::UniqueUniversal:
      return p.least.has_value();
  }
  return false;
}

std::size_t index_in(const HfSet& carrier, const HfSet& x) {
  auto m = carrier.members();
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x) return carrier.size();
  return static_cast<std::size_t>(it - m.begin());
}

}  // namespace

Relation Relation::over(const HfSet& carrier, const HfSet& pairs) {
  Relation r;
  r.carrier_ = carrier;
  r.pairs_ = pairs;
  r.matrix_ = BoolMatrix(carrier.size());
  for (const auto& p : pairs.members()) {
    OrderedPairView v;
    try {
      v = unpair(p);
    } catch (const NotAPair&) {
      throw PairOutOfCarrier(p.to_string() + " is not an ordered pair");
    }
    const std::size_t i = index_in(carrier, v.first);
    const std::size_t j = index_in(carrier, v.second);
    if (i == carrier.size() || j == carrier.size()) {
      throw PairOutOfCarrier("pair " + p.to_string() + " leaves carrier " + carrier.to_string());
    }
    r.matrix_.set(i, j);
  }
  return r;
}

Relation Relation::from_matrix(const HfSet& carrier, const BoolMatrix& matrix) {
  if (matrix.size() != carrier.size()) throw InvalidArgument("matrix size differs from carrier");
  std::vector<HfSet> pairs;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      if (matrix(i, j)) pairs.push_back(ordered_pair(carrier[i], carrier[j]));
    }
  }
  Relation r;
  r.carrier_ = carrier;
  r.pairs_ = make_set(std::move(pairs));
  r.matrix_ = matrix;
  return r;
}

std::optional<std::size_t> Relation::index_of(const HfSet& x) const {
  const std::size_t i = index_in(carrier_, x);
  if (i == carrier_.size()) return std::nullopt;
  return i;
}

bool Relation::relates(const HfSet& x, const HfSet& y) const {
  auto i = index_of(x);
  auto j = index_of(y);
  return i && j && matrix_(*i, *j);
}

Relation identity_relation(const HfSet& carrier) {
  BoolMatrix m(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) m.set(i, i);
  return Relation::from_matrix(carrier, m);
}

PropertyReport relation_properties(const Relation& r) {
  const auto p = matrix_properties(r.matrix());
  PropertyReport out{p.reflexive, p.antisymmetric, p.transitive, p.total, std::nullopt};
  if (p.least) out.least = r.element(*p.least);
  return out;
}

bool satisfies(const Relation& r, OrderKind kind) {
  return properties_satisfy(matrix_properties(r.matrix()), r.size(), kind);
}

bool well_order_literal(const Relation& r, const Caps& caps) {
  const std::size_t n = r.size();
  if (n > caps.powerset || n >= 63) {
    throw CapExceeded("subset clause over " + std::to_string(n) + " elements exceeds cap");
  }
  const auto& m = r.matrix();
  const auto p = matrix_properties(m);
  if (!(p.total && p.antisymmetric && p.transitive)) return false;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (!(sub >> i & 1)) continue;
      bool least = true;
      for (std::size_t j = 0; j < n && least; ++j) {
        if (sub >> j & 1) least = m(i, j);
      }
      found = least;
    }
    if (!found) return false;
  }
  return true;
}

HfSet least_element(const Relation& r) {
  const auto p = matrix_properties(r.matrix());
  if (!p.least) throw NoLeast("no unique element of " + r.carrier().to_string() + " relates to all");
  return r.element(*p.least);
}

Relation order_from_formula(const HfSet& carrier, const Formula& phi, const Env& env,
                            std::string_view var) {
  Env scoped = env;
  scoped.insert_or_assign("A", carrier);
  const HfSet witnesses = separation(carrier, var, phi, scoped);
  if (witnesses.size() != 1) {
    throw NotUniquelySatisfied("formula holds at " + std::to_string(witnesses.size()) +
                               " elements of " + carrier.to_string());
  }
  const std::size_t n = carrier.size();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool w = witnesses.contains(carrier[i]);
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, i == j || w);
  }
  return Relation::from_matrix(carrier, m);
}

std::vector<Relation> enumerate_orders(const HfSet& carrier, OrderKind kind, OrderEnumeration how) {
  const std::size_t n = carrier.size();
  if (n > kMaxEnumeratedCarrier) {
    throw CapExceeded("order enumeration over " + std::to_string(n) + " elements exceeds cap " +
                      std::to_string(kMaxEnumeratedCarrier));
  }
  std::vector<Relation> out;
  if (kind == OrderKind::WellOrder && how == OrderEnumeration::Auto) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      BoolMatrix m(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) m.set(perm[a], perm[b]);
      }
      out.push_back(Relation::from_matrix(carrier, m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      auto m = BoolMatrix::from_mask(n, mask);
      if (properties_satisfy(matrix_properties(m), n, kind)) {
        out.push_back(Relation::from_matrix(carrier, m));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Relation& a, const Relation& b) { return a.pairs() < b.pairs(); });
  return out;
}

Relation lift_order(const Relation& r, const HfSet& a) {
  if (r.carrier() != a) throw InvalidArgument("relation carrier differs from " + a.to_string());
  std::vector<HfSet> pairs;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.matrix()(i, j)) {
        pairs.push_back(ordered_pair(ordered_pair(a, r.element(i)), ordered_pair(a, r.element(j))));
      }
    }
  }
  return Relation::over(cartesian(singleton(a), a), make_set(std::move(pairs)));
}

Relation project_order(const Relation& q, const HfSet& a) {
  if (q.carrier() != cartesian(singleton(a), a)) {
    throw NotLiftShaped("carrier " + q.carrier().to_string() + " is not {A} x A");
  }
  std::vector<HfSet> pairs;
  for (const auto& p : q.pairs().members()) {
    const auto outer = unpair(p);
    const auto u = unpair(outer.first);
    const auto v = unpair(outer.second);
    if (u.first != a || v.first != a) {
      throw NotLiftShaped("pair " + p.to_string() + " is not tagged with " + a.to_string());
    }
    pairs.push_back(ordered_pair(u.second, v.second));
  }
  return Relation::over(a, make_set(std::move(pairs)));
}

}  // namespace zflab
