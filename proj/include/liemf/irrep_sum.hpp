#pragma once

#include <optional>
#include <string>

#include "liemf/character.hpp"

namespace liemf {

// A formal integer combination of irreducible highest weights.  Genuine
// modules have all multiplicities positive; virtual combinations arise in
// construction formulas and Adams operations.
struct IrrepSum {
  SystemPtr sys;
  WeightOrderedMap<Mult> terms;

  static IrrepSum zero(SystemPtr s) { return IrrepSum{std::move(s), {}}; }
  static IrrepSum irrep(SystemPtr s, const Weight& hw, Mult mult = 1);
  static IrrepSum trivial(SystemPtr s) { return irrep(std::move(s), Weight::Zero(s ? s->rank() : 0)); }

  bool genuine() const {
    for (auto& [w, m] : terms)
      if (m < 0) return false;
    return true;
  }
  bool is_mf() const {
    for (auto& [w, m] : terms)
      if (m != 1) return false;
    return true;
  }
  bool empty() const { return terms.empty(); }
  Mult mult_of(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }

  void add(const Weight& w, Mult m);
  IrrepSum& operator+=(const IrrepSum& o);
  IrrepSum& operator-=(const IrrepSum& o);
  friend IrrepSum operator+(IrrepSum a, const IrrepSum& b) { return a += b; }
  friend IrrepSum operator-(IrrepSum a, const IrrepSum& b) { return a -= b; }
  bool operator==(const IrrepSum& o) const { return terms == o.terms; }

  std::string str() const;
};

BigInt dim(const IrrepSum& m);

// Dominant character of the (virtual) module.
DominantCharacter char_of(const IrrepSum& m, const Limits& lim = {});

// Highest-weight peeling of a virtual character.
IrrepSum decompose(const DominantCharacter& c, const Limits& lim = {});

// Klimyk tensor product, bilinear in both arguments.
IrrepSum tensor(const IrrepSum& a, const IrrepSum& b, const Limits& lim = {});

// Newton-identity symmetric and exterior powers of a genuine module.
IrrepSum sym_power(long k, const IrrepSum& m, const Limits& lim = {});
IrrepSum ext_power(long k, const IrrepSum& m, const Limits& lim = {});
// All exterior powers 0..k in one recursion pass (level streams reuse these).
std::vector<IrrepSum> ext_powers_up_to(long k, const IrrepSum& m, const Limits& lim = {});

IrrepSum dual(const IrrepSum& m);

// Max coordinate sum over the support (S-value of a module).
Coord s_value(const IrrepSum& m);

} // namespace liemf
