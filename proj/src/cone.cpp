#include "rsurf/cone.hpp"

#include <algorithm>

#include "rsurf/cremona.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

namespace rsurf {

namespace {

constexpr std::string_view kLetters = "OABCDEFG";

void check_face_k(int k) {
  if (k < 2 || k > kMaxBlowups) {
    throw DimensionError("faces of the reduced cone are supported for 2 <= k <= 8, got k=" +
                         std::to_string(k));
  }
}

std::vector<Rational> vertex_coords(int i, int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
  if (i == 2) {
    c[0] = 1;
  } else if (i == 3) {
    c[0] = c[1] = Rational(1, 2);
  } else if (i >= 4) {
    for (int j = 0; j < i - 1; ++j) c[static_cast<std::size_t>(j)] = Rational(1, 3);
  }
  return c;
}

// Convex combination of M (weight m_weight) and G_i (weights[i]).
SymplecticVector combine(int k, const std::vector<int>& positive, std::int64_t m_weight,
                         const std::vector<std::int64_t>& weights) {
  std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
  Rational total = m_weight;
  for (auto& x : c) x += Rational(m_weight, 3);
  for (std::size_t n = 0; n < positive.size(); ++n) {
    const auto g = vertex_coords(positive[n], k);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += weights[n] * g[j];
    total += weights[n];
  }
  for (auto& x : c) x /= total;
  return SymplecticVector(Rational(1), std::move(c));
}

// P_2 is the triangle with vertices O = (0,0), A = (1,0), B = (1/2,1/2) minus
// the edge OA; "OB" is the open edge and "BOA" the open triangle.
SymplecticVector combine_k2(bool generic, std::int64_t wo, std::int64_t wa, std::int64_t wb) {
  if (!generic) wa = 0;
  const Rational total = wo + wa + wb;
  const Rational c1 = (Rational(wa) + Rational(wb, 2)) / total;
  const Rational c2 = Rational(wb, 2) / total;
  return SymplecticVector(Rational(1), {c1, c2});
}

}  // namespace

char vertex_letter(int i) {
  if (i < 1 || i > kMaxBlowups) throw DimensionError("no vertex G_" + std::to_string(i));
  return kLetters[static_cast<std::size_t>(i - 1)];
}

FaceLabel::FaceLabel(int k, std::vector<int> positive) : k_(k), positive_(std::move(positive)) {
  check_face_k(k);
  std::sort(positive_.begin(), positive_.end());
  if (std::adjacent_find(positive_.begin(), positive_.end()) != positive_.end()) {
    throw ParseError("face label repeats a vertex");
  }
  const int lo = (k == 2) ? 2 : 1;
  for (int i : positive_) {
    if (i < lo || i > k) {
      throw ParseError("vertex index " + std::to_string(i) + " invalid for k=" + std::to_string(k));
    }
  }
}

FaceLabel FaceLabel::parse(int k, std::string_view text) {
  check_face_k(k);
  if (k == 2) {
    if (text == "OB") return FaceLabel(2, {});
    if (text == "BOA") return FaceLabel(2, {2});
    throw ParseError("k=2 faces are OB and BOA, got '" + std::string(text) + "'");
  }
  if (text.empty() || text[0] != 'M') {
    throw ParseError("face label must start with M, got '" + std::string(text) + "'");
  }
  std::vector<int> positive;
  for (char ch : text.substr(1)) {
    const auto pos = kLetters.find(ch);
    if (pos == std::string_view::npos) {
      throw ParseError("unknown vertex letter '" + std::string(1, ch) + "'");
    }
    positive.push_back(static_cast<int>(pos) + 1);
  }
  return FaceLabel(k, std::move(positive));
}

std::vector<FaceLabel> FaceLabel::all(int k) {
  check_face_k(k);
  if (k == 2) return {FaceLabel(2, {}), FaceLabel(2, {2})};
  std::vector<FaceLabel> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> positive;
    for (int i = 1; i <= k; ++i) {
      if (mask & (1u << (i - 1))) positive.push_back(i);
    }
    out.emplace_back(k, std::move(positive));
  }
  std::stable_sort(out.begin(), out.end(), [](const FaceLabel& x, const FaceLabel& y) {
    if (x.positive().size() != y.positive().size()) return x.positive().size() < y.positive().size();
    return x.positive() < y.positive();
  });
  return out;
}

bool FaceLabel::contains(int i) const {
  return std::binary_search(positive_.begin(), positive_.end(), i);
}

std::string FaceLabel::str() const {
  if (k_ == 2) return positive_.empty() ? "OB" : "BOA";
  std::string s = "M";
  for (int i : positive_) s += vertex_letter(i);
  return s;
}

std::vector<SymplecticVector> vertices(int k) {
  if (k < 3 || k > kMaxBlowups) {
    throw DimensionError("P_k has the explicit vertex description for 3 <= k <= 8");
  }
  std::vector<SymplecticVector> out;
  out.emplace_back(Rational(1), std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, 3)));
  for (int i = 1; i <= k; ++i) out.emplace_back(Rational(1), vertex_coords(i, k));
  return out;
}

FaceLabel classify_face(const SymplecticVector& w) {
  check_face_k(w.k());
  const SymplecticVector v = w.normalized();
  if (const auto why = reduced_violation(v)) {
    throw PreconditionError("not a reduced form: " + *why);
  }
  std::vector<int> positive;
  for (int i = (v.k() >= 3 ? 1 : 2); i <= v.k(); ++i) {
    const Rational s = area(v, simple_root(i, v.k()));
    if (s < 0) throw ConsistencyError("reduced form pairs negatively with l_" + std::to_string(i));
    if (s > 0) positive.push_back(i);
  }
  return FaceLabel(v.k(), std::move(positive));
}

SymplecticVector sample_face(const FaceLabel& label) {
  if (label.k() == 2) return combine_k2(!label.positive().empty(), 10, 11, 12);
  std::vector<std::int64_t> weights;
  for (int i : label.positive()) weights.push_back(10 + i);
  return combine(label.k(), label.positive(), 10, weights);
}

SymplecticVector sample_face(const FaceLabel& label, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(1, 1000);
  if (label.k() == 2) return combine_k2(!label.positive().empty(), dist(rng), dist(rng), dist(rng));
  const std::int64_t m_weight = dist(rng);
  std::vector<std::int64_t> weights;
  for (std::size_t n = 0; n < label.positive().size(); ++n) weights.push_back(dist(rng));
  return combine(label.k(), label.positive(), m_weight, weights);
}

bool is_representable(const SymplecticVector& w) {
  Rational square = w.nu() * w.nu();
  for (const auto& c : w.cs()) square -= c * c;
  if (square <= 0) return false;
  const SymplecticVector r = reduce(w).output;
  if (!is_reduced(r)) return false;
  if (r.k() <= 2) {
    const Rational c2 = r.k() == 2 ? r.c(2) : Rational(0);
    return r.nu() > r.c(1) + c2;
  }
  return true;
}

}  // namespace rsurf
