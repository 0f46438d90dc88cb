#pragma once

// Vectors of the unramified principal series: functions f on GL_2(Q_p) with
// f(b g) = (chi delta_B^{1/2})(b) f(g), right invariant under some K_n.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/laurent.hpp"
#include "toric/localfield.hpp"

namespace toric {

/// Coefficient setting: the field values live in and the element of it that
/// plays the role of q. Symbolic keeps q formal in Q(q); numeric works over Q
/// with q = p.
struct Context {
  Field field;
  Scalar q;
  std::optional<int> prime;

  static Context symbolic();
  static Context numeric(int p);

  bool is_symbolic() const { return !prime.has_value(); }
  /// Prime used where only valuation patterns matter (symbolic mode).
  int working_prime() const { return prime.value_or(2); }
};

/// (chi delta_B^{1/2})(diag(p^a1, p^a2)) = Y1^a1 Y2^a2 q^a2.
LaurentA chi_delta_value(int a1, int a2, const Context& ctx);

class PSVector {
 public:
  enum class Kind { Sph, IwahoriPhiW, Table, Translate, LinComb };
  using TableValues = std::map<P1Class, LaurentA>;
  using Terms = std::vector<std::pair<LaurentA, PSVector>>;

  /// The zero vector (an empty combination).
  PSVector();

  static PSVector sph();
  /// The Iwahori vector supported on B w I, normalized by f(w) = 1.
  static PSVector phi_w();
  /// Requires a value for every class of P^1(Z/p^n), all over one field.
  static PSVector table(int p, int n, Field field, TableValues values);
  /// (g . inner)(x) = inner(x g).
  static PSVector translate(const PadicMatrix& g, PSVector inner);
  static PSVector lincomb(Terms terms);

  Kind kind() const;
  bool is_zero_combination() const;

  /// Smallest n with right K_n-invariance guaranteed by construction
  /// (0 for the spherical vector).
  int level() const;
  /// Prime fixed by a table or translate inside the tree, if any.
  std::optional<int> prime() const;

  // Accessors for the node payload (valid for the matching kind).
  int table_prime() const;
  int table_level() const;
  Field table_field() const;
  const TableValues& table_values() const;
  const PadicMatrix& translate_matrix() const;
  const PSVector& translate_inner() const;
  const Terms& terms() const;

  std::string describe() const;

 private:
  struct Node;
  explicit PSVector(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

PSVector operator*(const LaurentA& c, const PSVector& f);

/// f(g), evaluated through the Iwasawa decomposition of g.
LaurentA evaluate(const PSVector& f, const PadicMatrix& g, const Context& ctx);

/// Table form of phi_w at level n: zero exactly on the classes (u : 1) with
/// p | u.
PSVector f0_table(int p, int n);

struct BigCellSplit {
  LaurentA a_f;
  PSVector f_w;
};

/// f = a_f f^sph + f_w with a_f = f(1); f_w vanishes on B(Q_p).
BigCellSplit big_cell_split(const PSVector& f, const Context& ctx);

/// Collects the coefficients of Sph and IwahoriPhiW leaves and drops zero
/// terms in nested combinations.
PSVector simplify(const PSVector& f);

struct RandomTableOptions {
  bool all_zero = false;
};

/// Deterministic seeded table over Q: every class value has at most three
/// terms, exponents in [-2, 2], coefficients in {+-1, +-2, +-1/2, +-1/3}.
PSVector random_table(int p, int n, std::uint64_t seed, RandomTableOptions opts = {});

}  // namespace toric
