#pragma once

#include "veronese/partition.hpp"
#include "veronese/tableau.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace veronese {

/// Exponent vector of a torus weight of GL_n.
using Weight = std::vector<int>;

/// Raised by schur_decompose when the remainder goes negative, i.e. the input
/// was not the character of a polynomial representation.
class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_dominant(const Weight& w);
Weight dominant_representative(Weight w);
/// Size of the S_n-orbit of w.
BigInt orbit_size(const Weight& w);

/// Degree-d monomial exponent vectors in n variables, decreasing lex order.
std::vector<Weight> monomials(int d, int n);

/// Character restricted to dominant weights; zero entries are never stored.
class WeightTable {
 public:
  using Entries = std::map<Weight, BigInt, std::greater<>>;

  WeightTable(int n, long degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  long degree() const { return degree_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Adds to the entry at a dominant weight of the right degree.
  void add(const Weight& w, const BigInt& m);
  /// Multiplicity at any weight, via its dominant representative.
  BigInt at(const Weight& w) const;
  /// Sum of multiplicities over all weights (orbits included).
  BigInt dimension() const;

  friend bool operator==(const WeightTable&, const WeightTable&) = default;

 private:
  int n_;
  long degree_;
  Entries entries_;
};

/// The full (non-symmetrized) character; internal working form for products.
class FullCharacter {
 public:
  using Entries = std::unordered_map<Weight, BigInt, VectorHash>;

  FullCharacter(int n, long degree) : n_(n), degree_(degree) {}
  static FullCharacter unit(int n);
  static FullCharacter sym(int d, int n);
  static FullCharacter from_table(const WeightTable& t);

  int n() const { return n_; }
  long degree() const { return degree_; }
  const Entries& entries() const { return entries_; }
  void add(const Weight& w, const BigInt& m);

  FullCharacter times(const FullCharacter& other, const ResourceLimits& limits = {}) const;
  WeightTable dominant_part() const;

 private:
  int n_;
  long degree_;
  Entries entries_;
};

/// Multiset of Schur functors at a fixed n; terms in decreasing lex order.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, BigInt, std::greater<>>;

  SchurExpansion(int n, long degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  long degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Partition& lambda, const BigInt& m);
  BigInt multiplicity(const Partition& lambda) const;
  /// sum_lambda m_lambda * dim S_lambda(C^n)
  BigInt dimension() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int n_;
  long degree_;
  Terms terms_;
};

/// Character of the tensor product S^{a_1} (x) ... (x) S^{a_k} of C^n.
WeightTable char_sym_product(const std::vector<int>& degrees, int n, const ResourceLimits& limits = {});
/// Character of (x)^p S^d C^n.
WeightTable char_tensor_sym(int p, int d, int n, const ResourceLimits& limits = {});
/// Character of wedge^p (S^d C^n); empty when p > dim S^d C^n.
WeightTable char_wedge_sym(int p, int d, int n, const ResourceLimits& limits = {});
/// Character of S^p (S^d C^n).
WeightTable char_sym_sym(int p, int d, int n, const ResourceLimits& limits = {});
/// Character of S_lambda(C^n): Kostka numbers on dominant weights.
WeightTable schur_character(const Partition& lambda, int n);
/// Product of two characters at the same n.
WeightTable char_multiply(const WeightTable& a, const WeightTable& b, const ResourceLimits& limits = {});

/// Peels off the lex-greatest dominant weight repeatedly, subtracting the
/// corresponding Kostka column. Throws NotACharacter on a negative remainder.
SchurExpansion schur_decompose(const WeightTable& w);

/// Tensor with S^b by Pieri's rule; partitions longer than n are dropped.
SchurExpansion tensor_with_sym(const SchurExpansion& e, int b);

BigInt total_multiplicity(const SchurExpansion& e);
BigInt complexity(const SchurExpansion& e);

}  // namespace veronese
