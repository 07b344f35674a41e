#include "prodquot/constructors.hpp"

#include <numeric>
#include <string>

#include "prodquot/error.hpp"
#include "prodquot/permutation.hpp"

namespace prodquot {

GroupTable cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "cyclic group order must be positive");
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  std::vector<Element> hint;
  if (n > 1) hint.push_back(1);
  return GroupTable::from_table(static_cast<std::size_t>(n), std::move(t), std::move(hint));
}

GroupTable metacyclic(int p, int q, int r) {
  if (p < 1 || q < 1)
    throw Error(ErrorCode::invalid_parameters, "metacyclic parameters must be positive");
  const long long rr = ((r % q) + q) % q;
  long long rp = 1 % q;
  for (int i = 0; i < p; ++i) rp = rp * rr % q;
  if (rp != 1 % q)
    throw Error(ErrorCode::invalid_parameters,
                "metacyclic(" + std::to_string(p) + "," + std::to_string(q) + "," +
                    std::to_string(r) + "): r^p is not 1 mod q");
  // powers[a] = r^a mod q
  std::vector<long long> powers(p);
  powers[0] = 1 % q;
  for (int a = 1; a < p; ++a) powers[a] = powers[a - 1] * rr % q;

  const int n = p * q;
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  // (y^b x^a)(y^d x^c) = y^(b + d r^a) x^(a+c)
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < q; ++d) {
          const int nb = static_cast<int>((b + d * powers[a]) % q);
          const int na = (a + c) % p;
          t[(a * q + b) * n + (c * q + d)] = static_cast<Element>(na * q + nb);
        }
  std::vector<Element> hint;
  if (p > 1) hint.push_back(static_cast<Element>(q));
  if (q > 1) hint.push_back(1);
  return GroupTable::from_table(static_cast<std::size_t>(n), std::move(t), std::move(hint));
}

GroupTable dihedral(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "dihedral parameter must be positive");
  return metacyclic(2, n, n - 1);
}

GroupTable quaternion8() {
  PermGenSet p;
  p.degree = 8;
  p.generators = {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}};
  return group_from_permutations(p);
}

GroupTable symmetric(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::invalid_parameters, "symmetric(n) requires 1 <= n <= 5");
  PermGenSet p;
  p.degree = static_cast<std::size_t>(n);
  if (n >= 2) {
    Permutation t(n), c(n);
    std::iota(t.begin(), t.end(), std::uint16_t{0});
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
    p.generators = {t, c};
  }
  return group_from_permutations(p);
}

GroupTable alternating(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::invalid_parameters, "alternating(n) requires 1 <= n <= 5");
  PermGenSet p;
  p.degree = static_cast<std::size_t>(n);
  for (int k = 2; k < n; ++k) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), std::uint16_t{0});
    c[0] = 1;
    c[1] = static_cast<std::uint16_t>(k);
    c[k] = 0;
    p.generators.push_back(c);
  }
  return group_from_permutations(p);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> t(n * n);
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t b1 = 0; b1 < k; ++b1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b2 = 0; b2 < k; ++b2)
          t[(a1 * k + b1) * n + (a2 * k + b2)] = static_cast<Element>(
              g.mul(static_cast<Element>(a1), static_cast<Element>(a2)) * k +
              h.mul(static_cast<Element>(b1), static_cast<Element>(b2)));
  std::vector<Element> hint;
  for (auto x : g.generator_hint()) hint.push_back(static_cast<Element>(x * k + h.identity()));
  for (auto y : h.generator_hint()) hint.push_back(static_cast<Element>(g.identity() * k + y));
  return GroupTable::from_table(n, std::move(t), std::move(hint));
}

GroupTable semidirect_product(const GroupTable& a, const GroupTable& b,
                              const std::vector<Automorphism>& action) {
  if (action.size() != a.order())
    throw Error(ErrorCode::invalid_parameters, "action must give one automorphism per element");
  for (const auto& phi : action)
    if (!is_homomorphic_bijection(b, b, phi.image))
      throw Error(ErrorCode::invalid_parameters, "action contains a non-automorphism");
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < a.order(); ++y)
      if (action[a.mul(static_cast<Element>(x), static_cast<Element>(y))] != action[x] * action[y])
        throw Error(ErrorCode::invalid_parameters, "action is not a homomorphism into Aut(B)");

  const std::size_t m = a.order(), k = b.order(), n = m * k;
  std::vector<Element> t(n * n);
  // (b1 a1)(b2 a2) = b1 (a1 b2 a1^-1) a1 a2
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t b1 = 0; b1 < k; ++b1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b2 = 0; b2 < k; ++b2) {
          const Element nb = b.mul(static_cast<Element>(b1), action[a1](static_cast<Element>(b2)));
          const Element na = a.mul(static_cast<Element>(a1), static_cast<Element>(a2));
          t[(a1 * k + b1) * n + (a2 * k + b2)] = static_cast<Element>(na * k + nb);
        }
  std::vector<Element> hint;
  for (auto y : b.generator_hint()) hint.push_back(static_cast<Element>(a.identity() * k + y));
  for (auto x : a.generator_hint()) hint.push_back(static_cast<Element>(x * k + b.identity()));
  return GroupTable::from_table(n, std::move(t), std::move(hint));
}

}  // namespace prodquot
