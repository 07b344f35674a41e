#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace prodquot {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

/// (g' | m_1, ..., m_r)
struct BranchSignature {
  int base_genus = 0;
  std::vector<int> periods;

  auto operator<=>(const BranchSignature&) const = default;

  /// Throws Error(invalid_parameters) for a base genus other than 0/1 or a period below 2.
  void validate() const;
  /// "(0|2,4,12)"
  std::string to_string() const;
};

/// "2,4,12"
std::string format_periods(const std::vector<int>& m);
/// "2^2,4^2"
std::string format_periods_compact(const std::vector<int>& m);
/// Parses "2,4,12" or "2^2,4^2"; the empty string gives no periods.
std::vector<int> parse_periods(const std::string& text);

/// -2 + sum (1 - 1/m_i)
Rational theta(const std::vector<int>& m);
/// 2 / theta(m). Throws Error(nonhyperbolic_signature) when theta(m) <= 0.
Rational alpha(const std::vector<int>& m);

/// Genus g of a G-cover of a genus-g' curve branched with periods m:
/// 2g - 2 = |G| (2g' - 2 + sum (1 - 1/m_i)).
/// Throws Error(non_integral_genus) if g is not a nonnegative integer.
int rh_genus(int base_genus, std::int64_t group_order, const std::vector<int>& m);

struct SurfaceInvariants {
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
};

/// chi = (g_C - 1)(g_F - 1)/|G|, K^2 = 8 chi.
/// Throws Error(non_integral_invariant) unless |G| divides (g_C - 1)(g_F - 1).
SurfaceInvariants surface_invariants(int g_C, int g_F, std::int64_t group_order);

struct AdmissibleTuple {
  std::vector<int> m;
  int alpha = 0;
  auto operator<=>(const AdmissibleTuple&) const = default;
};

/// All nondecreasing m with r <= 8 and m_i >= 2 such that theta(m) > 0,
/// alpha(m) is an integer at most alpha_cap, and every m_i divides alpha(m).
/// Sorted by decreasing alpha, then by length, then lexicographically.
std::vector<AdmissibleTuple> enumerate_admissible_tuples(int alpha_cap);

/// "(2,4,12)_12"
std::string to_string(const AdmissibleTuple& t);

}  // namespace prodquot
