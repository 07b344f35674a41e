#include "prodquot/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "prodquot/error.hpp"

namespace prodquot {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::invalid_parameters, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(const Rational& a, const Rational& b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

void BranchSignature::validate() const {
  if (base_genus != 0 && base_genus != 1)
    throw Error(ErrorCode::invalid_parameters, "base genus must be 0 or 1");
  for (int m : periods)
    if (m < 2) throw Error(ErrorCode::invalid_parameters, "branching periods must be at least 2");
}

std::string BranchSignature::to_string() const {
  return "(" + std::to_string(base_genus) + "|" + format_periods(periods) + ")";
}

std::string format_periods(const std::vector<int>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out;
}

std::string format_periods_compact(const std::vector<int>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(m[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<int> parse_periods(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) {
      if (text.find_first_not_of(" ") == std::string::npos) break;
      throw Error(ErrorCode::invalid_parameters, "empty period in '" + text + "'");
    }
    int value = 0, reps = 1;
    try {
      const auto caret = item.find('^');
      std::size_t used = 0;
      value = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument("trailing");
      if (caret != std::string::npos) {
        reps = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1) throw std::invalid_argument("trailing");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_parameters, "cannot parse period '" + item + "'");
    }
    if (value < 2 || reps < 1 || reps > 64)
      throw Error(ErrorCode::invalid_parameters, "invalid period '" + item + "'");
    out.insert(out.end(), reps, value);
  }
  return out;
}

Rational theta(const std::vector<int>& m) {
  Rational t(-2);
  for (int x : m) {
    if (x < 1) throw Error(ErrorCode::invalid_parameters, "periods must be positive");
    t = t + Rational(x - 1, x);
  }
  return t;
}

Rational alpha(const std::vector<int>& m) {
  const Rational t = theta(m);
  if (t <= Rational(0))
    throw Error(ErrorCode::nonhyperbolic_signature,
                "theta(" + format_periods(m) + ") = " + t.to_string() + " is not positive");
  return Rational(2) / t;
}

int rh_genus(int base_genus, std::int64_t group_order, const std::vector<int>& m) {
  if (group_order < 1) throw Error(ErrorCode::invalid_parameters, "group order must be positive");
  Rational rhs(2 * base_genus - 2);
  for (int x : m) rhs = rhs + Rational(x - 1, x);
  // 2g - 2 = |G| * rhs
  const Rational two_g = Rational(group_order) * rhs + Rational(2);
  if (!two_g.is_integer() || two_g.num() % 2 != 0 || two_g.num() < 0)
    throw Error(ErrorCode::non_integral_genus,
                "Riemann-Hurwitz gives 2g = " + two_g.to_string() + " for |G| = " +
                    std::to_string(group_order) + ", periods (" + format_periods(m) + ")");
  return static_cast<int>(two_g.num() / 2);
}

SurfaceInvariants surface_invariants(int g_C, int g_F, std::int64_t group_order) {
  if (group_order < 1) throw Error(ErrorCode::invalid_parameters, "group order must be positive");
  const std::int64_t prod = static_cast<std::int64_t>(g_C - 1) * (g_F - 1);
  if (prod % group_order != 0)
    throw Error(ErrorCode::non_integral_invariant,
                "|G| = " + std::to_string(group_order) + " does not divide (g_C-1)(g_F-1) = " +
                    std::to_string(prod));
  SurfaceInvariants s;
  s.chi = prod / group_order;
  s.K2 = 8 * s.chi;
  return s;
}

namespace {

// Depth-first over nondecreasing tuples. `sum` is sum (1 - 1/m_i) so far;
// theta = sum - 2 must stay at most 2 for alpha >= 1, so sum <= 4.
void extend(std::vector<int>& m, Rational sum, int alpha_cap, std::vector<AdmissibleTuple>& out) {
  if (!m.empty()) {
    const Rational t = sum - Rational(2);
    if (t > Rational(0)) {
      const Rational a = Rational(2) / t;
      if (a.is_integer() && a.num() <= alpha_cap &&
          std::all_of(m.begin(), m.end(), [&](int x) { return a.num() % x == 0; }))
        out.push_back({m, static_cast<int>(a.num())});
    }
  }
  if (m.size() == 8) return;
  const int lo = m.empty() ? 2 : m.back();
  for (int x = lo; x <= alpha_cap; ++x) {
    const Rational term(x - 1, x);
    // x divides alpha, so alpha >= x and the final theta is at most 2/x; later
    // entries only add to the sum, and both sides move the wrong way as x grows.
    if (sum + term > Rational(2) + Rational(2, x)) break;
    m.push_back(x);
    extend(m, sum + term, alpha_cap, out);
    m.pop_back();
  }
}

}  // namespace

std::vector<AdmissibleTuple> enumerate_admissible_tuples(int alpha_cap) {
  std::vector<AdmissibleTuple> out;
  if (alpha_cap < 2) return out;
  std::vector<int> m;
  extend(m, Rational(0), alpha_cap, out);
  std::sort(out.begin(), out.end(), [](const AdmissibleTuple& a, const AdmissibleTuple& b) {
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    if (a.m.size() != b.m.size()) return a.m.size() < b.m.size();
    return a.m < b.m;
  });
  return out;
}

std::string to_string(const AdmissibleTuple& t) {
  return "(" + format_periods(t.m) + ")_" + std::to_string(t.alpha);
}

}  // namespace prodquot
