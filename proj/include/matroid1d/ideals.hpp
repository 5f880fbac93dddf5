// Copyright 2025 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID1D_IDEALS_HPP_
#define MATROID1D_IDEALS_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "matroid1d/complex.hpp"
#include "matroid1d/partition.hpp"

namespace matroid1d {

/// Monomial in a fixed number of variables, stored by exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial squarefree_from_mask(Mask m, int vars);

  const std::vector<int>& exponents() const { return exps_; }
  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  std::string to_string() const;  // "x1^2*x3", constant is "1"

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
};

/// Monomial ideal given by its minimal generators (an antichain under
/// divisibility); construction minimalizes whatever it is handed.
class MonomialIdeal {
 public:
  MonomialIdeal(int vars, std::vector<Monomial> generators);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  /// Artinian iff some pure power of every variable lies in the ideal.
  bool is_artinian() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int vars_;
  std::vector<Monomial> gens_;
};

/// Minimal generators = minimal non-faces of the complex.  For a dim-1
/// matroid the degree-2 generators are exactly the pairs inside the
/// anti-clique blocks of λ_Δ and the degree-3 generators the transversal
/// triples; this block shape is verified internally.
MonomialIdeal stanley_reisner(const SimplicialComplex& c);

/// Inverse of stanley_reisner for squarefree ideals: faces are the
/// squarefree monomials outside the ideal.  `max_dim` >= 0 demands the
/// resulting complex have at most that dimension.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     int max_dim = -1);

/// The artinian monomial ideal J_λ whose quotient realizes h(λ) as a pure
/// O-sequence.  ℓ(λ) >= 2: in n-2 variables, blocks of size λ_i - 1 packed
/// consecutively from variable 1, all degree-2 monomials inside each block
/// plus every degree-3 monomial.  λ = (n): all degree-2 monomials in n-1
/// variables.  λ = (n-1)+1: all degree-2 monomials in n-2 variables.
MonomialIdeal witness_ideal(const Partition& lambda);

/// Hilbert function of the artinian quotient by standard-monomial count,
/// up to the last non-zero degree.
std::vector<long long> hilbert_function(const MonomialIdeal& ideal);

struct SocleReport {
  std::vector<Monomial> socle;   // divisibility-maximal standard monomials
  std::vector<int> degrees;      // distinct socle degrees, ascending
  bool is_pure = false;
  bool is_level = false;         // same flag for artinian monomial ideals
};

SocleReport socle_and_purity(const MonomialIdeal& ideal);

std::string ideal_to_text(const MonomialIdeal& ideal);  // one generator/line
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json socle_to_json(const SocleReport& r);

}  // namespace matroid1d

#endif  // MATROID1D_IDEALS_HPP_
