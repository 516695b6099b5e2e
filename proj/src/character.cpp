#include "hhsl2/character.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hhsl2 {

Character Character::monomial(int weight, long long multiplicity) {
  Character c;
  c.add(weight, multiplicity);
  return c;
}

Character Character::from_weights(const std::vector<int>& weights) {
  Character c;
  for (int w : weights) c.add(w, 1);
  return c;
}

long long Character::operator[](int weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add(int weight, long long multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(weight, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

long long Character::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : terms_) d += m;
  return d;
}

bool Character::is_genuine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool Character::is_w_invariant() const {
  for (const auto& [w, m] : terms_)
    if ((*this)[-w] != m) return false;
  return true;
}

std::optional<int> Character::top_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> Character::bottom_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Character Character::scaled_weights(int factor) const {
  Character out;
  for (const auto& [w, m] : terms_) out.add(w * factor, m);
  return out;
}

std::optional<Character> Character::divided_weights(int divisor) const {
  Character out;
  for (const auto& [w, m] : terms_) {
    if (w % divisor != 0) return std::nullopt;
    out.add(w / divisor, m);
  }
  return out;
}

Character Character::shifted(int by) const {
  Character out;
  for (const auto& [w, m] : terms_) out.add(w + by, m);
  return out;
}

Character Character::negated_weights() const { return scaled_weights(-1); }

std::string Character::to_string() const {
  if (terms_.empty()) return "-";
  std::string out;
  for (const auto& [w, m] : terms_) {
    if (!out.empty()) out += ',';
    out += fmt::format("{}:{}", w, m);
  }
  return out;
}

Character Character::parse(const std::string& text) {
  Character c;
  if (text == "-" || text.empty()) return c;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("Character::parse: expected w:m in '" + item + "'");
    c.add(std::stoi(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
  }
  return c;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [w1, m1] : a.terms_)
    for (const auto& [w2, m2] : b.terms_) out.add(w1 + w2, m1 * m2);
  return out;
}

Character operator*(long long s, const Character& a) {
  Character out;
  if (s == 0) return out;
  for (const auto& [w, m] : a.terms_) out.add(w, s * m);
  return out;
}

std::string summand_label(Family family, int highest_weight) {
  switch (family) {
    case Family::Nabla: return fmt::format("Nabla({})", highest_weight);
    case Family::Delta: return fmt::format("Delta({})", highest_weight);
    case Family::Simple: return fmt::format("L({})", highest_weight);
    case Family::Tilting: return fmt::format("T({})", highest_weight);
  }
  return "?";
}

bool Decomposition::is_virtual() const {
  return std::any_of(summands.begin(), summands.end(), [](const Summand& s) { return s.multiplicity < 0; });
}

std::string Decomposition::to_string() const {
  if (summands.empty()) return "0";
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += '+';
    if (s.multiplicity != 1) out += fmt::format("{}*", s.multiplicity);
    out += summand_label(s.family, s.highest_weight);
  }
  return out;
}

Character weyl_chi(int lambda) {
  Character c;
  if (lambda >= 0) {
    for (int w = -lambda; w <= lambda; w += 2) c.add(w, 1);
    return c;
  }
  if (lambda == -1) return c;
  return -1 * weyl_chi(-lambda - 2);
}

Character simple_char(int lambda, std::uint32_t p) {
  if (lambda < 0) throw std::invalid_argument("simple_char: negative highest weight");
  Character out = Character::monomial(0);
  long long scale = 1;
  int rest = lambda;
  while (rest > 0) {
    const int digit = rest % static_cast<int>(p);
    out = out * weyl_chi(digit).scaled_weights(static_cast<int>(scale));
    rest /= static_cast<int>(p);
    scale *= p;
  }
  return out;
}

Character tilting_char(int m, std::uint32_t p) {
  const int pp = static_cast<int>(p);
  if (m < 0 || m > 2 * pp - 2)
    throw std::out_of_range(fmt::format("tilting_char: T({}) outside supported range [0, {}]", m, 2 * pp - 2));
  if (m <= pp - 1) return weyl_chi(m);
  return weyl_chi(m) + weyl_chi(2 * pp - 2 - m);
}

Character summand_char(const Summand& s, std::uint32_t p) {
  Character base;
  switch (s.family) {
    case Family::Nabla:
    case Family::Delta: base = weyl_chi(s.highest_weight); break;
    case Family::Simple: base = simple_char(s.highest_weight, p); break;
    case Family::Tilting: base = tilting_char(s.highest_weight, p); break;
  }
  return s.multiplicity * base;
}

Character expand(const Decomposition& d, std::uint32_t p) {
  Character out = d.remainder;
  for (const auto& s : d.summands) out += summand_char(s, p);
  return out;
}

namespace {

template <class CharOf>
Decomposition peel(Character rest, Family family, CharOf char_of, bool stop_on_negative) {
  Decomposition out;
  while (auto top = rest.top_weight()) {
    if (*top < 0) break;
    const long long mult = rest[*top];
    const Character next = rest - mult * char_of(*top);
    if (stop_on_negative && (mult < 0 || !next.is_genuine())) break;
    out.summands.push_back({family, *top, mult});
    rest = next;
  }
  out.remainder = rest;
  return out;
}

}  // namespace

Decomposition decompose_nabla(const Character& c) {
  return peel(c, Family::Nabla, [](int t) { return weyl_chi(t); }, false);
}

Decomposition decompose_tilting_greedy(const Character& c, std::uint32_t p) {
  const int bound = 2 * static_cast<int>(p) - 2;
  for (const auto& [w, m] : c.terms())
    if (w > bound || w < -bound)
      throw std::out_of_range(fmt::format("decompose_tilting_greedy: weight {} outside [-{}, {}]", w, bound, bound));
  return peel(c, Family::Tilting, [p](int t) { return tilting_char(t, p); }, true);
}

Decomposition decompose_simples(const Character& c, std::uint32_t p) {
  return peel(c, Family::Simple, [p](int t) { return simple_char(t, p); }, false);
}

Decomposition decompose_tilting_or_simple(const Character& c, std::uint32_t p) {
  const int bound = 2 * static_cast<int>(p) - 2;
  Decomposition out;
  Character rest = c;
  while (auto top = rest.top_weight()) {
    const long long mult = rest[*top];
    if (*top < 0 || mult < 0) break;
    if (*top <= bound) {
      const Character next = rest - mult * tilting_char(*top, p);
      if (next.is_genuine()) {
        out.summands.push_back({Family::Tilting, *top, mult});
        rest = next;
        continue;
      }
    }
    const Character next = rest - mult * simple_char(*top, p);
    if (!next.is_genuine()) break;
    out.summands.push_back({Family::Simple, *top, mult});
    rest = next;
  }
  out.remainder = rest;
  return out;
}

InducedCharacter euler_induction(const Character& c) {
  InducedCharacter out{Character{}, true};
  for (const auto& [w, m] : c.terms()) {
    out.character += m * weyl_chi(w);
    if (w < -1) out.dominant = false;
  }
  return out;
}

}  // namespace hhsl2
