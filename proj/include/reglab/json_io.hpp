#pragma once

#include <json.hpp>

#include "reglab/cyclic.hpp"
#include "reglab/deligne.hpp"
#include "reglab/dirac.hpp"
#include "reglab/regulator.hpp"

namespace reglab {

using json = nlohmann::json;

// CZValue: {"re": float, "im": float} of the canonical representative.
json to_json(const CZValue& v);
CZValue czvalue_from_json(const json& j);

json to_json(const cplx& z);
cplx cplx_from_json(const json& j);

// TrigPoly: {"dim": k, "coeffs": [{"n": [..], "re":, "im":}]} with the
// coefficients materialized (the scale prefactor is folded in).
json to_json(const TrigPoly& f);
TrigPoly trigpoly_from_json(const json& j);

// UnitFunction: {"winding": [..], "log": TrigPoly}.
json to_json(const UnitFunction& u);
UnitFunction unit_from_json(const json& j);

// Form: {"dim": k, "degree": r, "components": [{"axes": [..], "poly": TrigPoly}]}.
json to_json(const Form& f);
Form form_from_json(const json& j);

// PeriodicFamily: {"truncation": str, "entries": [{"p": int, "forms": [Form]}]}.
json to_json(const PeriodicFamily& fam);
PeriodicFamily family_from_json(const json& j);

// ProductClass: {"f": TrigPoly, "units": [UnitFunction]}.
json to_json(const ProductClass& x);
ProductClass product_class_from_json(const json& j);

// GradedBundle: {"summands": [{"v_re":, "v_im":, "eps":}]}.
json to_json(const GradedBundle& v);
GradedBundle bundle_from_json(const json& j);

// ArcCover: {"m": int, "cuts": [..]}.
json to_json(const ArcCover& c);
ArcCover cover_from_json(const json& j);

// CyclicChain: {"n": int, "terms": [{"k": int, "word": [TrigPoly], "coeff": {..}}]}.
json to_json(const CyclicChain& c);
CyclicChain chain_from_json(const json& j);

}  // namespace reglab
