#include "rsurf/lattice.hpp"

#include <sstream>

#include "rsurf/errors.hpp"

namespace rsurf {

namespace {

void check_k(int k) {
  if (k < kMinBlowups || k > kMaxBlowups) {
    throw DimensionError("blow-up count must lie in 1..8, got " + std::to_string(k));
  }
}

void check_same_k(int k1, int k2) {
  if (k1 != k2) {
    throw DimensionError("lattice rank mismatch: k=" + std::to_string(k1) +
                         " vs k=" + std::to_string(k2));
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t to_int64(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw PreconditionError("coefficient " + to_string(q) + " is not integral");
  }
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

}  // namespace

HomologyClass::HomologyClass(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  check_k(static_cast<int>(coeffs_.size()) - 1);
}

HomologyClass HomologyClass::zero(int k) {
  check_k(k);
  return HomologyClass(std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
}

HomologyClass HomologyClass::line(int k) {
  auto h = zero(k);
  h.coeffs_[0] = 1;
  return h;
}

HomologyClass HomologyClass::exceptional(int i, int k) {
  auto e = zero(k);
  if (i < 1 || i > k) {
    throw DimensionError("E_" + std::to_string(i) + " does not exist for k=" + std::to_string(k));
  }
  // E_i = 0*H - (-1) E_i
  e.coeffs_[static_cast<std::size_t>(i)] = -1;
  return e;
}

HomologyClass HomologyClass::operator-() const {
  auto out = *this;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
  check_same_k(k(), other.k());
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

HomologyClass HomologyClass::operator-(const HomologyClass& other) const {
  return *this + (-other);
}

HomologyClass HomologyClass::operator*(std::int64_t scale) const {
  auto out = *this;
  for (auto& v : out.coeffs_) v *= scale;
  return out;
}

SymplecticVector::SymplecticVector(Rational nu, std::vector<Rational> c)
    : nu_(std::move(nu)), c_(std::move(c)) {
  check_k(k());
  if (nu_ <= 0) {
    throw PreconditionError("area of H must be positive, got " + to_string(nu_));
  }
}

SymplecticVector SymplecticVector::normalized() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x /= nu_;
  return SymplecticVector(Rational(1), std::move(c));
}

std::int64_t pairing(const HomologyClass& x, const HomologyClass& y) {
  check_same_k(x.k(), y.k());
  std::int64_t s = x.a() * y.a();
  for (int i = 1; i <= x.k(); ++i) s -= x.b(i) * y.b(i);
  return s;
}

HomologyClass canonical_class(int k) {
  check_k(k);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, -1);
  coeffs[0] = -3;
  return HomologyClass(std::move(coeffs));
}

Rational area(const SymplecticVector& w, const HomologyClass& x) {
  check_same_k(w.k(), x.k());
  Rational s = w.nu() * x.a();
  for (int i = 1; i <= x.k(); ++i) s -= w.c(i) * x.b(i);
  return s;
}

BFVector to_bf_basis(const HomologyClass& x) {
  if (x.k() < 2) throw DimensionError("S^2 x S^2 basis needs k >= 2");
  // x = aH - sum b_i E_i with H = B + F - E'_1, E_1 = B - E'_1, E_2 = F - E'_1.
  BFVector v;
  v.mu = x.a() - x.b(1);
  v.f = x.a() - x.b(2);
  v.a.push_back(Rational(x.a() - x.b(1) - x.b(2)));
  for (int i = 3; i <= x.k(); ++i) v.a.push_back(Rational(x.b(i)));
  return v;
}

BFVector to_bf_basis(const SymplecticVector& w) {
  if (w.k() < 2) throw DimensionError("S^2 x S^2 basis needs k >= 2");
  BFVector v;
  v.mu = w.nu() - w.c(2);  // omega(B)
  v.f = w.nu() - w.c(1);   // omega(F)
  v.a.push_back(w.nu() - w.c(1) - w.c(2));
  for (int i = 3; i <= w.k(); ++i) v.a.push_back(w.c(i));
  return v;
}

HomologyClass class_from_bf_basis(const BFVector& v) {
  if (v.a.empty()) throw DimensionError("BF vector needs at least E'_1");
  // Inverse of to_bf_basis: a = mu + f - a_1, b_1 = f - a_1, b_2 = mu - a_1.
  std::vector<std::int64_t> coeffs;
  coeffs.push_back(to_int64(v.mu + v.f - v.a[0]));
  coeffs.push_back(to_int64(v.f - v.a[0]));
  coeffs.push_back(to_int64(v.mu - v.a[0]));
  for (std::size_t i = 1; i < v.a.size(); ++i) coeffs.push_back(to_int64(v.a[i]));
  return HomologyClass(std::move(coeffs));
}

SymplecticVector form_from_bf_basis(const BFVector& v) {
  if (v.a.empty()) throw DimensionError("BF vector needs at least E'_1");
  std::vector<Rational> c;
  c.push_back(v.mu - v.a[0]);  // omega(E_1) = omega(B) - omega(E'_1)
  c.push_back(v.f - v.a[0]);   // omega(E_2) = omega(F) - omega(E'_1)
  for (std::size_t i = 1; i < v.a.size(); ++i) c.push_back(v.a[i]);
  return SymplecticVector(v.mu + v.f - v.a[0], std::move(c));
}

BFVector normalize_bf(const BFVector& v) {
  if (v.f == 0) {
    throw PreconditionError("class on wall: omega(F) = nu - c_1 = 0, normalization undefined");
  }
  BFVector out;
  out.mu = v.mu / v.f;
  out.f = 1;
  for (const auto& x : v.a) out.a.push_back(x / v.f);
  return out;
}

HomologyClass parse_class(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw ParseError("class must look like 'a;b1,...,bk', got '" + std::string(text) + "'");
  }
  const auto to_int = [&](std::string_view part) {
    const std::string t = trim(part);
    const Rational q = parse_rational(t);
    if (boost::multiprecision::denominator(q) != 1) {
      throw ParseError("class coefficients must be integers, got '" + t + "'");
    }
    return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
  };
  std::vector<std::int64_t> coeffs{to_int(text.substr(0, semi))};
  std::string_view rest = text.substr(semi + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    coeffs.push_back(to_int(rest.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int k = static_cast<int>(coeffs.size()) - 1;
  if (k < kMinBlowups || k > kMaxBlowups) {
    throw ParseError("class must have 1..8 E-coefficients, got " + std::to_string(k));
  }
  return HomologyClass(std::move(coeffs));
}

SymplecticVector parse_form(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("form must look like 'nu|c1,...,ck', got '" + std::string(text) + "'");
  }
  Rational nu = parse_rational(trim(text.substr(0, bar)));
  std::vector<Rational> c;
  std::string_view rest = text.substr(bar + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    c.push_back(parse_rational(trim(rest.substr(start, comma - start))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int k = static_cast<int>(c.size());
  if (k < kMinBlowups || k > kMaxBlowups) {
    throw ParseError("form must have 1..8 areas after '|', got " + std::to_string(k));
  }
  if (nu <= 0) {
    throw ParseError("area of H must be positive, got " + to_string(nu));
  }
  return SymplecticVector(std::move(nu), std::move(c));
}

std::string to_string(const HomologyClass& x) {
  std::ostringstream os;
  os << x.a() << ';';
  for (int i = 1; i <= x.k(); ++i) os << (i > 1 ? "," : "") << x.b(i);
  return os.str();
}

std::string to_string(const SymplecticVector& w) {
  std::string s = to_string(w.nu()) + "|";
  for (int i = 1; i <= w.k(); ++i) {
    if (i > 1) s += ',';
    s += to_string(w.c(i));
  }
  return s;
}

std::string to_symbolic(const HomologyClass& x) {
  std::ostringstream os;
  bool first = true;
  const auto term = [&](std::int64_t coef, const std::string& name) {
    if (coef == 0) return;
    if (coef < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const auto mag = coef < 0 ? -coef : coef;
    if (mag != 1) os << mag;
    os << name;
    first = false;
  };
  term(x.a(), "H");
  for (int i = 1; i <= x.k(); ++i) term(-x.b(i), "E" + std::to_string(i));
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyClass& x) { return os << to_string(x); }

std::ostream& operator<<(std::ostream& os, const SymplecticVector& w) { return os << to_string(w); }

}  // namespace rsurf
