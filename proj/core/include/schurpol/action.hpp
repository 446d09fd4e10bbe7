#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schurpol/field.hpp"
#include "schurpol/monomial_module.hpp"

namespace schurpol {

enum class ActionKind { gl_conjugation, slsl_leftright, sl2_vector, cyclic_unipotent };

/// A linear group action on V together with a number of copies of V.
///
///  - gl_conjugation(n): V = n x n matrices, g . X = g X g^-1
///  - slsl_leftright(n): V = n x n matrices, (A, B) . X = A X B^-1
///  - sl2_vector: V = K^2 with the natural SL_2 action
///  - cyclic_unipotent(p): V = K^2 over F_p, generator acting by [[1,1],[0,1]]
///
/// Matrix coordinates X[a][b] are numbered a * n + b.
class ActionSpec {
 public:
  static ActionSpec gl_conjugation(int n, int copies, FieldSpec field);
  static ActionSpec slsl_leftright(int n, int copies, FieldSpec field);
  static ActionSpec sl2_vector(int copies, FieldSpec field);
  static ActionSpec cyclic_unipotent(int p, int copies, FieldSpec field);
  /// Accepts "conj:<n>", "slsl:<n>", "sl2vec" or "cyclic:<p>".
  static ActionSpec parse(std::string_view text, int copies, FieldSpec field);

  ActionKind kind() const { return kind_; }
  int n() const { return n_; }
  int copies() const { return copies_; }
  const FieldSpec& field() const { return field_; }
  int dim_v() const;
  bool connected() const { return kind_ != ActionKind::cyclic_unipotent; }

  ActionSpec with_copies(int copies) const;
  ActionSpec with_field(FieldSpec field) const;

  /// Substitutions of the V coordinates generating the group: the root
  /// subgroups for connected kinds, the single generator for the cyclic kind.
  std::vector<OneParamFamily> generators() const;

  /// Torus weight of each coordinate function.
  std::vector<std::vector<int>> coordinate_weights() const;
  /// Whether a monomial of the given total torus weight is torus-invariant.
  bool torus_allows(const std::vector<int>& weight) const;

  std::string to_string() const;

 private:
  ActionSpec(ActionKind kind, int n, int copies, FieldSpec field);
  ActionKind kind_;
  int n_;
  int copies_;
  FieldSpec field_;
};

}  // namespace schurpol
