#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhsl2 {

/// Finitely supported integer function on the weight lattice Z, written as a
/// Laurent polynomial sum_w m_w q^w. Zero coefficients are never stored.
class Character {
 public:
  Character() = default;
  static Character monomial(int weight, long long multiplicity = 1);
  static Character from_weights(const std::vector<int>& weights);

  long long operator[](int weight) const;
  void add(int weight, long long multiplicity);
  const std::map<int, long long>& terms() const { return terms_; }

  /// Sum of coefficients (the dimension for genuine characters).
  long long dimension() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_genuine() const;
  /// Symmetric under w -> -w.
  bool is_w_invariant() const;
  std::optional<int> top_weight() const;
  std::optional<int> bottom_weight() const;

  Character scaled_weights(int factor) const;
  /// Divides every weight by `divisor`; nullopt if some weight is not divisible.
  std::optional<Character> divided_weights(int divisor) const;
  Character shifted(int by) const;
  Character negated_weights() const;
  /// Keeps only weights w with pred(w).
  template <class Pred>
  Character filtered(Pred pred) const {
    Character out;
    for (const auto& [w, m] : terms_)
      if (pred(w)) out.terms_.emplace(w, m);
    return out;
  }

  /// "w1:m1,w2:m2,..." sorted by weight; the zero character prints as "-".
  std::string to_string() const;
  static Character parse(const std::string& text);

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend Character operator*(long long s, const Character& a);
  friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, long long> terms_;
};

enum class Family { Nabla, Delta, Simple, Tilting };

struct Summand {
  Family family;
  int highest_weight;
  long long multiplicity = 1;
  friend bool operator==(const Summand&, const Summand&) = default;
};

std::string summand_label(Family family, int highest_weight);

/// Result of peeling a character from the top. `remainder` is what could not
/// be expressed; it is zero exactly when the decomposition is exact.
struct Decomposition {
  std::vector<Summand> summands;
  Character remainder;

  bool exact() const { return remainder.is_zero(); }
  bool is_virtual() const;
  /// Multiset form, e.g. "T(8)+L(6)+T(4)"; multiplicities > 1 as "2*L(0)".
  std::string to_string() const;
};

/// Euler characteristic of the line bundle of weight lambda on P^1:
/// q^l + q^(l-2) + ... + q^-l for l >= 0, 0 for l = -1, -chi(-l-2) for l <= -2.
Character weyl_chi(int lambda);

/// Character of L(lambda) by Steinberg's tensor product theorem.
Character simple_char(int lambda, std::uint32_t p);

/// Character of T(m) for 0 <= m <= 2p-2. Throws std::out_of_range otherwise.
Character tilting_char(int m, std::uint32_t p);

Decomposition decompose_nabla(const Character& c);
/// Greedy peel by tilting characters. Weights must lie in [-(2p-2), 2p-2]
/// (std::out_of_range otherwise). Stops with a nonzero remainder as soon as a
/// peel would leave a negative coefficient.
Decomposition decompose_tilting_greedy(const Character& c, std::uint32_t p);
Decomposition decompose_simples(const Character& c, std::uint32_t p);
/// Peels T(top) when that leaves a genuine character and L(top) otherwise.
Decomposition decompose_tilting_or_simple(const Character& c, std::uint32_t p);

Character expand(const Decomposition& d, std::uint32_t p);
Character summand_char(const Summand& s, std::uint32_t p);

struct InducedCharacter {
  Character character;
  /// All weights of the input are >= -1, so higher derived induction vanishes
  /// and the Euler characteristic is the character of ind itself.
  bool dominant;
};

/// sum_mu c(mu) * weyl_chi(mu).
InducedCharacter euler_induction(const Character& c);

}  // namespace hhsl2
