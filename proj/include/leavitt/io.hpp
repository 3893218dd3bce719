#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "leavitt/repmod.hpp"

namespace leavitt {

// Element grammar (postfix ' is the ghost/star, * is multiplication):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := name ['^' int] ["'"] | '(' expr ')' ["'"] | int ['/' int]
// A bare number is that multiple of the algebra identity.
AlgebraElement parse_element(std::string_view text, const SessionPtr& session);
std::string format_element(const AlgebraElement& x);
std::string format_monomial(const Monomial& m);
std::string format_path(const Path& p);

// Polynomial text form: `1 - x - x^2`, `1 - 2/3*x`; over F_p the
// coefficients are integers reduced mod p.
Poly parse_poly(std::string_view text, Field field);
std::string format_poly(const Poly& f);

// Module elements: the element grammar extended with the generator name `z`,
// which may appear only as the last factor of a term (e.g. `2*z + e1*z`).
SfcElement parse_sfc_element(std::string_view text, const SfcSpecPtr& spec);
// `[alpha](residue)` terms joined by ` + ` in index order; zero prints as 0
std::string format_sfc_element(const SfcElement& m);
std::string format_rip(const RationalInfinitePath& p);
std::string format_chen_element(const ChenElement& m);

// `Q` or `Fp:<prime>`
Field parse_field(std::string_view text);

// Automorphism file: lines `vertex <name> = <expr>`, `edge <name> = <expr>`,
// `ghost <name> = <expr>`; omitted generators default to themselves;
// `#` comments and blank lines ignored. Result is unverified.
GenMap parse_genmap_file(std::string_view text, const SessionPtr& session);

// `anick:p=<expr>,e1=<name>,e2=<name>` -> sigma_p (verified); e1/e2 default
// to the first two declared edges
GenMap parse_anick_descriptor(std::string_view text, const SessionPtr& session);

struct ModuleDescriptor {
    SfcSpecPtr spec;
    std::optional<AlgebraElement> twist;
};

// `sfc:c=<path expr>,f=<poly>[,twist=<expr>]`
ModuleDescriptor parse_module_descriptor(std::string_view text, const SessionPtr& session,
                                         bool assume_irreducible);

} // namespace leavitt
