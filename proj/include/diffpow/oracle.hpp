#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "diffpow/monomial_ideal.hpp"

namespace diffpow::oracle {

/// Exact integer coefficients: iterated derivatives produce falling
/// factorials, which outgrow any fixed width almost immediately.
using Coefficient = boost::multiprecision::cpp_int;

/// A polynomial with exact integer coefficients, used only by the
/// ground-truth engine. Terms are kept in canonical (lex) order with no
/// zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(int d);

  static Polynomial monomial(const ExponentVector& exponents, Coefficient coeff = 1);

  int dim() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVector, Coefficient>& terms() const { return terms_; }

  /// Adds c * x^e, merging with an existing term and dropping zeros.
  void add_term(const ExponentVector& exponents, const Coefficient& coeff);

  /// Componentwise maximum over the term exponents (zero if no terms).
  ExponentVector exponent_extent() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;

  bool operator==(const Polynomial&) const = default;

 private:
  int d_;
  std::map<ExponentVector, Coefficient> terms_;
};

/// Applies the operator d^beta = d_1^{b_1} ... d_d^{b_d} to f. On a term
/// c x^g this yields c * prod_i g_i (g_i - 1) ... (g_i - b_i + 1) x^{g - b}
/// when b <= g and zero otherwise, extended linearly.
Polynomial differentiate(const Polynomial& f, const ExponentVector& beta);

/// Exact binomial coefficient (for the Leibniz cross-check).
Coefficient binomial(std::int64_t n, std::int64_t k);

/// Evidence that f fails level-n membership: an operator of order < n and
/// a term of the derivative whose monomial escapes the ideal.
struct MembershipWitness {
  ExponentVector op;
  ExponentVector term;
  Coefficient coeff;
};

/// Membership of f in the n-th differential power of I, decided directly
/// from the definition: every operator d^beta with |beta| <= n-1 must send
/// f into I. Operators beyond the exponent extent of f annihilate it and
/// are skipped. Returns the first failing (operator, term) pair, or
/// nullopt when f is a member.
std::optional<MembershipWitness> membership_counterexample(const Polynomial& f,
                                                           const MonomialIdeal& ideal,
                                                           std::int64_t n);

bool bruteforce_membership(const Polynomial& f, const MonomialIdeal& ideal, std::int64_t n);

/// The n-th differential power of I by exhaustive search over the box
/// [0, box]: tests every monomial, verifies the member set is upward
/// closed inside the box (it must be an ideal), and returns its minimal
/// elements. Throws BoxTooSmallError when a minimal element touches the
/// box boundary, since the truncated answer would be untrustworthy.
MonomialIdeal bruteforce_diffpower(const MonomialIdeal& ideal, std::int64_t n,
                                   const ExponentVector& box,
                                   kernels::Exec exec = kernels::Exec::Auto);

/// Box guaranteed to contain all minimal generators of the n-th
/// differential power: per-variable generator maximum plus n + 1.
ExponentVector default_box(const MonomialIdeal& ideal, std::int64_t n);

}  // namespace diffpow::oracle
