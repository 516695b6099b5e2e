#include <doctest.h>

#include "hhsl2/character.hpp"
#include "hhsl2/lie.hpp"
#include "hhsl2/linalg.hpp"
#include "hhsl2/module.hpp"

using namespace hhsl2;

namespace {

Character q(std::initializer_list<std::pair<int, long long>> terms) {
  Character c;
  for (auto [w, m] : terms) c.add(w, m);
  return c;
}

long long digit_product(int lambda, int p) {
  long long d = 1;
  for (; lambda > 0; lambda /= p) d *= lambda % p + 1;
  return d;
}

}  // namespace

TEST_CASE("restricted structure of sl2, b and u") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (const auto& a : {sl2(p), borel(p), nilradical(p)}) {
      CHECK(check_jacobi(a));
      CHECK(check_restricted(a));
      CHECK(check_weight_additive(a));
    }
  CHECK_THROWS_AS(sl2(6), std::invalid_argument);
}

TEST_CASE("sl2 relations") {
  const auto g = sl2(5);
  const auto e = *g.index_of(Gen::E), h = *g.index_of(Gen::H), f = *g.index_of(Gen::F);
  Vector hv(3, 0);
  hv[h] = 1;
  CHECK(g.bracket(e, f) == hv);
  CHECK(sl2(3).ad(*sl2(3).index_of(Gen::E)).pow(3).is_zero());

  // ad(h^[7]) = (ad h)^7; both are diag(2, 0, -2) because 2^7 = 2 mod 7.
  const auto g7 = sl2(7);
  const auto adh = g7.ad(*g7.index_of(Gen::H));
  CHECK(adh.pow(7) == adh);
  CHECK(g7.ad(g7.p_power(*g7.index_of(Gen::H))) == adh);
}

TEST_CASE("borel and nilradical") {
  const auto b = borel(3);
  CHECK(b.dim() == 2);
  std::vector<int> w;
  for (std::size_t i = 0; i < b.dim(); ++i) w.push_back(b.weight(i));
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<int>{-2, 0});

  const auto u = nilradical(5);
  CHECK(u.dim() == 1);
  CHECK(u.bracket(0, 0) == Vector{0});
  CHECK(u.p_power(0) == Vector{0});

  const auto b2 = borel(2);
  CHECK(b2.bracket(*b2.index_of(Gen::H), *b2.index_of(Gen::F)) == Vector{0, 0});
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(casimir_operator(trivial_module(5)).is_zero());
  // Oracle: lambda (lambda + 2) / 2 on the highest weight vector of nabla(lambda).
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int lambda = 0; lambda < static_cast<int>(p); ++lambda) {
      const auto m = nabla_model(lambda, p);
      const auto c = casimir_operator(m);
      const PrimeField k(p);
      const Scalar expect = k.mul(k.reduce(lambda * (lambda + 2)), k.inv(2));
      CHECK(c == Matrix::identity(k, m.dim()).scaled(expect));
      for (Gen x : kAllGens) CHECK(c * m.action(x) == m.action(x) * c);
    }
  const auto adj = truncated_sym(sl2(5), 1);
  CHECK(casimir_operator(adj) == Matrix::identity(PrimeField(5), 3).scaled(4));
  CHECK(casimir_operator(simple_model(5, 7)).is_zero());  // lambda = p - 2
}

TEST_CASE("Weyl characters") {
  CHECK(weyl_chi(2) == q({{2, 1}, {0, 1}, {-2, 1}}));
  CHECK(weyl_chi(-1).is_zero());
  CHECK(weyl_chi(-4) == -1 * weyl_chi(2));
  for (int l = 0; l < 20; ++l) CHECK(weyl_chi(l).dimension() == l + 1);
}

TEST_CASE("Pieri rule for all integer weights") {
  const Character l1 = weyl_chi(1);
  for (int l = -12; l <= 12; ++l) CHECK(weyl_chi(l) * l1 == weyl_chi(l + 1) + weyl_chi(l - 1));
}

TEST_CASE("simple characters") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int l = 0; l < static_cast<int>(p); ++l) CHECK(simple_char(l, p) == weyl_chi(l));
    for (int l = 0; l < 60; ++l) CHECK(simple_char(l, p).dimension() == digit_product(l, p));
    const int top = 2 * static_cast<int>(p) - 2;
    CHECK(simple_char(top, p) == weyl_chi(p - 2) * weyl_chi(1).scaled_weights(p));
    CHECK(simple_char(top, p).dimension() == 2 * (p - 1));
  }
  CHECK(simple_char(4, 3).dimension() == 4);
}

TEST_CASE("tilting characters") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(tilting_char(2 * p - 2, p).dimension() == 2 * p);
  CHECK(tilting_char(4, 5) == weyl_chi(4));
  CHECK(tilting_char(8, 5) == weyl_chi(8) + weyl_chi(0));
  CHECK(tilting_char(8, 5).dimension() == 10);
  CHECK_THROWS_AS(tilting_char(9, 5), std::out_of_range);
}

TEST_CASE("nabla decomposition") {
  const auto d = decompose_nabla(sym_power(sl2(7), 3).character());
  CHECK(d.to_string() == "Nabla(6)+Nabla(2)");
  CHECK(decompose_nabla(weyl_chi(0)).to_string() == "Nabla(0)");
  CHECK(decompose_nabla(truncated_sym(sl2(5), 4).character()).to_string() == "Nabla(8)+Nabla(4)+Nabla(0)");
}

TEST_CASE("tilting decomposition") {
  CHECK(decompose_tilting_greedy(sym_power(sl2(5), 4).character(), 5).to_string() == "T(8)+T(4)");
  CHECK(decompose_tilting_greedy(truncated_sym(sl2(7), 6).character(), 7).to_string() == "T(12)+T(8)");
  CHECK(decompose_tilting_greedy(weyl_chi(0), 3).to_string() == "T(0)");

  // Symmetric powers below p are tilting.
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int n = 0; n < static_cast<int>(p); ++n) {
      const auto d = decompose_tilting_greedy(sym_power(sl2(p), n).character(), p);
      CHECK(d.exact());
      CHECK_FALSE(d.is_virtual());
    }
}

TEST_CASE("simple decomposition") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CHECK(decompose_simples(weyl_chi(1), p).to_string() == "L(1)");
    const int top = 2 * static_cast<int>(p) - 2;
    CHECK(decompose_simples(simple_char(top, p), p).to_string() == "L(" + std::to_string(top) + ")");
    // nabla(2p-2) = [L(2p-2)] + [L(0)], so T(2p-2) = [L(2p-2)] + 2[L(0)].
    const auto d = decompose_simples(tilting_char(top, p), p);
    CHECK(d.to_string() == "L(" + std::to_string(top) + ")+2*L(0)");
    CHECK(expand(d, p) == tilting_char(top, p));
  }
}

TEST_CASE("decompositions re-expand to their input") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (int n = 0; n <= 3 * static_cast<int>(p - 1); ++n) {
      const auto ch = truncated_sym(sl2(p), n).character();
      const auto dn = decompose_nabla(ch);
      CHECK(dn.exact());
      CHECK(expand(dn, p) == ch);
      const auto ds = decompose_simples(ch, p);
      CHECK(ds.exact());
      CHECK(expand(ds, p) == ch);
      const auto dt = decompose_tilting_or_simple(ch, p);
      CHECK(expand(dt, p) == ch);  // expand includes the remainder
    }
}

TEST_CASE("Euler induction") {
  CHECK(euler_induction(Character::monomial(-1)).character.is_zero());
  const auto two = euler_induction(q({{2, 1}, {0, 1}}));
  CHECK(two.character == weyl_chi(2) + weyl_chi(0));
  CHECK(two.character.dimension() == 4);
  CHECK(two.dominant);
  CHECK_FALSE(euler_induction(Character::monomial(-3)).dominant);
  // (S^m(u*) (x) omega) (x) L(1) untwisted has weights {2m+2, 2m}.
  for (int m = 0; m < 6; ++m)
    CHECK(euler_induction(q({{2 * m + 2, 1}, {2 * m, 1}})).character.dimension() == 2 * (2 * m + 2));
}

TEST_CASE("coordinate ring of the nilpotent cone") {
  Character total;
  for (int i = 0; i < 8; ++i) {
    CHECK(weyl_chi(2 * i).dimension() == 2 * i + 1);
    total += weyl_chi(2 * i);
  }
  CHECK(total.dimension() == 64);
}

TEST_CASE("character parsing and printing round-trip") {
  const auto c = q({{-4, 2}, {0, 1}, {6, 3}});
  CHECK(c.to_string() == "-4:2,0:1,6:3");
  CHECK(Character::parse(c.to_string()) == c);
  CHECK(Character().to_string() == "-");
  CHECK(Character::parse("-").is_zero());
  CHECK(weyl_chi(4).is_w_invariant());
  CHECK_FALSE(Character::monomial(2).is_w_invariant());
}
