// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// JSON forms of the library types.
//
//   context     {"p": 3, "m": 2, "modulus": [1, 0, 1]}   (little-endian, monic)
//   element     [c_0, ..., c_{m-1}]                       (coordinates over F_p)
//   polynomial  [element, ...]                            (index = exponent)
//   rational    {"num": "32", "den": "7"}
//   spec        {"p", "ctx", "functions": [poly, ...], "V": [element, ...]}
//
// Readers throw InvalidJson on malformed input.

#pragma once

#include <json.hpp>  // nlohmann, vendored

#include "bigaction/bounds.hpp"
#include "bigaction/classify.hpp"
#include "bigaction/cover.hpp"
#include "bigaction/oracle.hpp"
#include "bigaction/ore.hpp"

namespace bigaction {

using Json = nlohmann::ordered_json;

Json to_json(const FieldCtx& ctx);
// Only the modulus the library itself picks for (p, m) is accepted.
const FieldCtx& ctx_from_json(const Json& j);

Json to_json(const FieldElem& x);
// Also accepts a bare integer, read as the base-p digits of the coordinates.
FieldElem elem_from_json(const FieldCtx& ctx, const Json& j);

Json to_json(const Poly& f);
Poly poly_from_json(const FieldCtx& ctx, const Json& j);
Json to_json(const AdditivePoly& a);
AdditivePoly additive_from_json(const FieldCtx& ctx, const Json& j);

Json to_json(const Int& n);
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Surd& s);

Json to_json(const CoverSpec& spec);
CoverSpec spec_from_json(const Json& j);

Json to_json(const BigActionReport& r);
Json to_json(const GroupReport& r);
Json to_json(const CaseReport& r);
Json to_json(const SpecialReport& r);

// {"ctx", "s", "d", "S", "values", "choices", "constraints"}; every key but
// the field is optional. Without "ctx", `m` (default 1) and the given p name
// the field.
Json to_json(const CaseParams& params);
CaseParams params_from_json(const Json& j, uint32_t p = 0);

}  // namespace bigaction
