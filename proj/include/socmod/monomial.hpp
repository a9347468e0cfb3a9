#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace socmod {

// Exponent vector of a monomial in d variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exp_.size(); }
  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<int>& exponents() const { return exp_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const;

 private:
  std::vector<int> exp_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Degree reverse lexicographic comparison with x_1 > x_2 > ... > x_d.
// Equal lengths are a precondition of the hot path; use compare_monomials for
// the checked version.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

enum class ModuleRule { position_over_term, term_over_position };

// Monomial order on S and on free modules over S. Only grevlex is offered;
// positions are ranked e_1 > e_2 > ... (ascending index wins).
struct MonomialOrder {
  ModuleRule module_rule = ModuleRule::position_over_term;

  std::strong_ordering compare(std::size_t pos_a, const Monomial& a, std::size_t pos_b,
                               const Monomial& b) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// Checked grevlex comparison; throws StructuralError on length mismatch.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// All monomials of total degree `deg` in `nvars` variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg);

}  // namespace socmod
