#include "diffpow/oracle.hpp"

#include <algorithm>
#include <string>

namespace diffpow::oracle {

namespace {

std::string vector_to_string(const ExponentVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Coefficient falling_factorial(std::int64_t g, std::int64_t b) {
  Coefficient acc = 1;
  for (std::int64_t j = 0; j < b; ++j) acc *= g - j;
  return acc;
}

/// Enumerates all beta with |beta| <= budget and beta <= clip, in lex
/// order, invoking visit(beta); stops early when visit returns false.
bool for_each_operator(const ExponentVector& clip, std::int64_t budget,
                       std::vector<std::int64_t>& beta, int pos,
                       const std::function<bool(const ExponentVector&)>& visit) {
  if (pos == clip.dim()) return visit(ExponentVector(beta));
  const std::int64_t top = std::min<std::int64_t>(clip[pos], budget);
  for (std::int64_t b = 0; b <= top; ++b) {
    beta[static_cast<std::size_t>(pos)] = b;
    if (!for_each_operator(clip, budget - b, beta, pos + 1, visit)) return false;
  }
  beta[static_cast<std::size_t>(pos)] = 0;
  return true;
}

}  // namespace

Polynomial::Polynomial(int d) : d_(d) {
  if (d < 1) throw DimensionMismatchError("dimension must be positive");
}

Polynomial Polynomial::monomial(const ExponentVector& exponents, Coefficient coeff) {
  Polynomial p(exponents.dim());
  p.add_term(exponents, coeff);
  return p;
}

void Polynomial::add_term(const ExponentVector& exponents, const Coefficient& coeff) {
  if (exponents.dim() != d_) throw DimensionMismatchError("term dimension differs");
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentVector Polynomial::exponent_extent() const {
  ExponentVector ext = ExponentVector::zero(d_);
  for (const auto& [e, c] : terms_) ext = component_max(ext, e);
  return ext;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.d_ != d_) throw DimensionMismatchError("polynomial dimension differs");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.d_ != d_) throw DimensionMismatchError("polynomial dimension differs");
  Polynomial out(d_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Polynomial differentiate(const Polynomial& f, const ExponentVector& beta) {
  if (beta.dim() != f.dim()) throw DimensionMismatchError("operator dimension differs");
  Polynomial out(f.dim());
  for (const auto& [g, c] : f.terms()) {
    const auto shifted = g.minus(beta);
    if (!shifted) continue;  // some b_i > g_i: the operator kills this term
    Coefficient coeff = c;
    for (int i = 0; i < f.dim(); ++i) coeff *= falling_factorial(g[i], beta[i]);
    out.add_term(*shifted, coeff);
  }
  return out;
}

Coefficient binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Coefficient num = 1, den = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

std::optional<MembershipWitness> membership_counterexample(const Polynomial& f,
                                                           const MonomialIdeal& ideal,
                                                           std::int64_t n) {
  if (f.dim() != ideal.dim()) throw DimensionMismatchError("polynomial vs ideal dimension");
  if (n < 1) throw PreconditionError("membership level must be >= 1");
  if (f.is_zero()) return std::nullopt;

  std::optional<MembershipWitness> witness;
  std::vector<std::int64_t> beta(static_cast<std::size_t>(f.dim()), 0);
  for_each_operator(f.exponent_extent(), n - 1, beta, 0,
                    [&](const ExponentVector& op) {
                      const Polynomial df = differentiate(f, op);
                      for (const auto& [e, c] : df.terms()) {
                        if (!ideal.contains(e)) {
                          witness = MembershipWitness{op, e, c};
                          return false;
                        }
                      }
                      return true;
                    });
  return witness;
}

bool bruteforce_membership(const Polynomial& f, const MonomialIdeal& ideal, std::int64_t n) {
  return !membership_counterexample(f, ideal, n).has_value();
}

MonomialIdeal bruteforce_diffpower(const MonomialIdeal& ideal, std::int64_t n,
                                   const ExponentVector& box, kernels::Exec exec) {
  if (!ideal.is_proper()) throw PreconditionError("differential power needs a proper ideal");
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  if (box.dim() != ideal.dim()) throw DimensionMismatchError("box dimension differs");
  for (int i = 0; i < box.dim(); ++i)
    if (box[i] < 1) throw PreconditionError("box entries must be >= 1");
  if (!kernels::box_volume(box, kernels::kGridVolumeLimit))
    throw PreconditionError("search box exceeds the enumeration volume limit");

  kernels::ExponentGrid grid(box);
  grid.fill(
      [&](const ExponentVector& gamma) {
        return bruteforce_membership(Polynomial::monomial(gamma), ideal, n);
      },
      exec);

  // The member set must be an ideal, hence upward closed inside the box.
  if (!grid.is_upward_closed())
    throw std::logic_error("differential-power member set is not upward closed");

  auto minimal = grid.minimal_true_cells();
  if (minimal.empty())
    throw BoxTooSmallError("no members found inside box " + vector_to_string(box) +
                           "; enlarge the box");
  for (const ExponentVector& m : minimal) {
    for (int i = 0; i < box.dim(); ++i) {
      if (m[i] == box[i])
        throw BoxTooSmallError("minimal generator " + vector_to_string(m) +
                               " touches the box boundary " + vector_to_string(box) +
                               "; enlarge the box");
    }
  }
  return MonomialIdeal::from_generators(ideal.dim(), std::move(minimal), exec);
}

ExponentVector default_box(const MonomialIdeal& ideal, std::int64_t n) {
  if (n < 1) throw PreconditionError("differential power requires n >= 1");
  const ExponentVector ext = ideal.generator_extent();
  std::vector<std::int64_t> box(static_cast<std::size_t>(ideal.dim()));
  for (int i = 0; i < ideal.dim(); ++i) {
    const std::int64_t v = ext[i] + n + 1;
    if (v > kMaxExponent) throw OverflowError("default box entry exceeds exponent cap");
    box[static_cast<std::size_t>(i)] = v;
  }
  return ExponentVector(std::move(box));
}

}  // namespace diffpow::oracle
