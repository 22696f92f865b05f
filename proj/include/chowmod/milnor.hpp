#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowmod/error.hpp"
#include "chowmod/param_curve.hpp"
#include "chowmod/ratfunc.hpp"
#include "chowmod/zero_cycle.hpp"

namespace chowmod {

inline bool entry_is_one(const Element& x) { return x.is_one(); }
inline bool entry_is_zero(const Element& x) { return x.is_zero(); }
inline bool entry_is_one(const RatFunc& f) { return f.is_constant() && f.constant_value().is_one(); }
inline bool entry_is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string entry_string(const Element& x) { return x.to_string(); }
inline std::string entry_string(const RatFunc& f) { return f.to_string(); }

/// Formal Z-combination of Milnor symbols {a1, ..., an} of a fixed length n.
/// Symbols with an entry equal to 1 are dropped on insertion; nothing else
/// is rewritten.
template <class Entry>
class SymbolSum {
 public:
  using Symbol = std::vector<Entry>;
  using Terms = std::map<Symbol, long>;

  SymbolSum() = default;
  SymbolSum(FieldPtr field, unsigned n) : field_(std::move(field)), n_(n) {}

  void add(const Symbol& s, long mult = 1);

  const FieldPtr& field() const { return field_; }
  unsigned n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymbolSum& operator+=(const SymbolSum& o) {
    for (const auto& [s, m] : o.terms_) add(s, m);
    return *this;
  }
  SymbolSum& operator-=(const SymbolSum& o) {
    for (const auto& [s, m] : o.terms_) add(s, -m);
    return *this;
  }
  friend SymbolSum operator+(SymbolSum a, const SymbolSum& b) { return a += b; }
  friend SymbolSum operator-(SymbolSum a, const SymbolSum& b) { return a -= b; }
  SymbolSum scaled(long k) const {
    SymbolSum out(field_, n_);
    for (const auto& [s, m] : terms_) out.add(s, m * k);
    return out;
  }
  friend bool operator==(const SymbolSum& a, const SymbolSum& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const SymbolSum& a, const SymbolSum& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  unsigned n_ = 0;
  Terms terms_;
};

template <class Entry>
void SymbolSum<Entry>::add(const Symbol& s, long mult) {
  if (mult == 0) return;
  if (s.size() != n_) fail(ErrorCode::InvalidArgument, "symbol of the wrong length");
  for (const auto& x : s) {
    if (entry_is_zero(x)) fail(ErrorCode::ZeroElement, "symbol with a zero entry");
    if (entry_is_one(x)) return;
  }
  auto [it, inserted] = terms_.try_emplace(s, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

template <class Entry>
std::string SymbolSum<Entry>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, m] : terms_) {
    long a = m < 0 ? -m : m;
    if (out.empty())
      out = m < 0 ? "-" : "";
    else
      out += m < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    std::string body;
    for (const auto& x : s) body += (body.empty() ? "" : ", ") + entry_string(x);
    out += "{" + body + "}";
  }
  return out;
}

/// Element of K^M_n over an explicit field.
using MilnorElement = SymbolSum<Element>;
/// Element of K^M_n(k(t)).
using FunctionMilnorElement = SymbolSum<RatFunc>;

/// Builds a sum holding one symbol; throws ZeroElement on a zero entry.
MilnorElement make_symbol(const FieldPtr& field, const std::vector<Element>& entries, long mult = 1);
FunctionMilnorElement make_function_symbol(const FieldPtr& base, const std::vector<RatFunc>& entries,
                                           long mult = 1);

struct ReduceResult {
  MilnorElement value;
  /// "exact", "theorem-backed (Steinberg)" or "oracle-certified (K2 presentation)".
  std::string status;
};

/// Safe rewrites: over finite fields n >= 2 vanishes (by theorem, or by the
/// K2 oracle in certificate mode); for n = 1 the sum merges into the single
/// symbol {prod a^m}; over Q and its extensions n >= 2 only sorts entries
/// with the anticommutativity sign.
ReduceResult symbol_reduce(const MilnorElement& e, bool certificate_mode = false);

/// For n = 1: the product of entries^mult, i.e. the value in k^x.
Element k1_value(const MilnorElement& e);

/// Tame symbol at v, landing in K_{n-1} of the residue field. Convention:
/// the uniformizer goes last, d{u1, ..., u_{n-1}, pi} = {u1bar, ..., u_{n-1}bar}.
MilnorElement tame_symbol(const Place& v, const FunctionMilnorElement& s);

/// Tame symbols at every place in the support of the entries, plus infinity.
std::map<Place, MilnorElement> total_delta(const FunctionMilnorElement& s);

/// Norm of an n = 1 element from the residue field of a place to the base
/// field (the identity for degree-1 places).
Element norm_k1_to_base(const MilnorElement& e, const FieldPtr& base);

/// Weil reciprocity: product over places of the norms of d_v{f, g}.
Element weil_product(const RatFunc& f, const RatFunc& g);

struct K2Result {
  mpz_class q;
  /// Nontrivial invariant factors; empty means the trivial group.
  std::vector<mpz_class> invariants;
  std::size_t generators = 0;
  std::size_t relations = 0;
};

/// K2 of F_q from the exponent lattice: one generator {g, g}, relations
/// (q - 1){g, g} and log(a) log(1 - a){g, g}; Smith normal form. q <= 64.
K2Result k2_presentation_oracle(const mpz_class& q);

/// Base point (t-coordinates) of a closed point, canonicalized.
ClosedPoint base_point(const ClosedPoint& p);

/// phi: symbol of the y-coordinates at the base point, normed down to the
/// base point's residue field. Finite fields with n >= 2 give 0.
std::map<ClosedPoint, MilnorElement> phi_map(const ZeroCycle& z);

/// psi-tilde: the point (x; f1, ..., fn), or the empty cycle if some fi = 1.
ZeroCycle psi_map(const ClosedPoint& x, const MilnorElement& s, Model model = Model::Original);

/// theta on a curve over A^1 whose base coordinate is the parameter:
/// the symbol of the component functions. A constant base gives 0; other
/// bases are NotAGraph.
FunctionMilnorElement theta_map(const ParamCurve& c);

/// The value of delta(theta) re-indexed by closed points of A^1, with
/// entries moved along with the canonical Frobenius conjugate of the point.
std::map<ClosedPoint, MilnorElement> delta_by_points(const FunctionMilnorElement& s, bool finite_places_only = true);

}  // namespace chowmod
