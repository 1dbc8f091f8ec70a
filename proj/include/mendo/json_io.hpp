#pragma once

#include <json.hpp>

#include "mendo/audit.hpp"
#include "mendo/ffworld.hpp"
#include "mendo/homext.hpp"
#include "mendo/msystems.hpp"
#include "mendo/symgroup.hpp"
#include "mendo/szmielew.hpp"
#include "mendo/termlang.hpp"

/*
 * Canonical JSON: object keys sorted, no floats.  Integers of magnitude
 * below 2^53 are numbers and larger ones decimal strings; rationals are
 * always strings ("-12", "3/4").  Readers accept either a string or an
 * integral number wherever an integer is expected.  Malformed input throws
 * Error(InvalidArgument).
 */
namespace mendo::json_io {

using Json = nlohmann::json;

Int to_int(const Json& j);
Json from_int(const Int& v);
Rat to_rat(const Json& j);
Json from_rat(const Rat& v);
std::uint64_t to_u64(const Json& j);

IntVector to_int_vector(const Json& j);
Json from_int_vector(const IntVector& v);
/* {"rows": n, "cols": m, "entries": [["1", "2"], ...]} */
IntMatrix to_matrix(const Json& j);
Json from_matrix(const IntMatrix& m);

FreePart to_free(const Json& j);
Json from_free(const FreePart& f);
/* {"torsion": "1/3", "free": {"x": "3/4"}, "char": 0}; "char" defaults to fallback */
SymElement to_sym(const Json& j, Characteristic fallback = 0);
Json from_sym(const SymElement& x);
std::vector<SymElement> to_sym_list(const Json& j, Characteristic fallback = 0);
Json from_sym_list(const std::vector<SymElement>& xs);
/* list of free parts spanning C */
DivSubgroup to_div(const Json& j, Characteristic p);
Json from_div(const DivSubgroup& c);

CompleteSystem to_system(const Json& j, Characteristic fallback = 0);
Json from_system(const CompleteSystem& s);
Json from_presentation(const std::vector<PresentationEquation>& pres);
std::vector<PresentationEquation> to_presentation(const Json& j, Characteristic fallback = 0);

/* {"char", "domain": [free parts], "torsion_exponent", "torsion_family"?,
 *  "free_images": {pivot: element}, "lifts"?: {pivot: rational},
 *  "generators"?, "generator_images"?} */
GroupHom to_hom(const Json& j);
Json from_hom(const GroupHom& h);

Json from_linear_system(const LinearSystem& s);

/* {"p": 2, "levels": [1, 2, 4], "residues": {"1": "0", ...}} */
ExponentFamily to_endo(const Json& j);
Json from_endo(const ExponentFamily& e);
Elem to_elem(const Json& j, const FiniteFieldCtx& ctx);
Json from_elem(Elem a, const FiniteFieldCtx& ctx);
Json from_ctx(const FiniteFieldCtx& ctx);
IntPoly to_poly(const Json& j);

/* {"primes": {"2": {"finite": [[3, 1]], "lambda": 0, "nu": 0}}, "epsilon": "omega"} */
SzmielewInvariants to_szmielew(const Json& j);
Json from_szmielew(const SzmielewInvariants& g);
Json from_verdict(const PsfcVerdict& v);
Json from_classification(const Classification& c);

AuditConfig to_audit_config(const Json& j);
Json from_audit_report(const AuditReport& r, const FiniteFieldCtx& ctx);

/* Parses text, mapping parse errors to InvalidArgument. */
Json parse(const std::string& text);
/* Two-space indented canonical form with a trailing newline. */
std::string dump(const Json& j);

}  // namespace mendo::json_io
