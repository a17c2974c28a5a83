#include "mps/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mps/error.hpp"

namespace mps {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked_exponent(std::uint64_t e) {
  if (e > kMaxExponent) throw Error(ErrorKind::ExponentOverflow, "exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

// Compares a and b on the positions i with (mask empty or mask[i] == want).
std::strong_ordering compare_on(const Monomial& a, const Monomial& b, MonomialOrder::Kind kind,
                                const std::vector<bool>& mask, bool want) {
  const std::size_t n = a.size();
  auto included = [&](std::size_t i) { return mask.empty() || mask[i] == want; };
  if (kind == MonomialOrder::Kind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!included(i)) continue;
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  std::uint64_t da = 0, db = 0;
  if (mask.empty()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (!included(i)) continue;
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = n; i-- > 0;) {
    if (!included(i)) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(Storage exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::pow(std::uint64_t n) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && n > kMaxExponent / exps_[i]) {
      throw Error(ErrorKind::ExponentOverflow, "exponent overflow");
    }
    out.exps_[i] = static_cast<Exponent>(exps_[i] * n);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = other.exps_[i] - exps_[i];
  out.degree_ = other.degree_ - degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::without(std::size_t index) const {
  Storage e(exps_.begin(), exps_.end());
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return Monomial(std::move(e));
}

MonomialOrder MonomialOrder::block(std::vector<bool> eliminated, Kind inner) {
  MonomialOrder o(Kind::Block);
  o.inner_ = inner == Kind::Block ? Kind::DegRevLex : inner;
  o.eliminated_ = std::move(eliminated);
  return o;
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "dp") return degrevlex();
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + name + "'");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Block: {
      std::string s = "block(";
      for (bool b : eliminated_) s += b ? '1' : '0';
      return s + "," + (inner_ == Kind::Lex ? "lex" : "degrevlex") + ")";
    }
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != Kind::Block) return compare_on(a, b, kind_, {}, true);
  if (auto c = compare_on(a, b, inner_, eliminated_, true); c != 0) return c;
  return compare_on(a, b, inner_, eliminated_, false);
}

MonomialOrder MonomialOrder::without(std::size_t index) const {
  MonomialOrder o = *this;
  if (kind_ == Kind::Block) {
    o.eliminated_.erase(o.eliminated_.begin() + static_cast<std::ptrdiff_t>(index));
    if (std::none_of(o.eliminated_.begin(), o.eliminated_.end(), [](bool b) { return b; })) {
      return MonomialOrder(inner_);
    }
  }
  return o;
}

MonomialOrder MonomialOrder::appended() const {
  MonomialOrder o = *this;
  if (kind_ == Kind::Block) o.eliminated_.push_back(false);
  return o;
}

}  // namespace mps
