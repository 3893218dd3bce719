#pragma once

#include <random>
#include <string>

#include "leavitt/io.hpp"
#include "leavitt/oracle.hpp"

namespace t {

using namespace leavitt;

inline SessionPtr rose_q(int n) { return make_session(Graph::rose(n), Field::rationals()); }

inline SessionPtr rose_fp(int n, std::uint64_t p) {
    return make_session(Graph::rose(n), Field::fp(p));
}

inline AlgebraElement el(const SessionPtr& s, const std::string& text) {
    return parse_element(text, s);
}

inline Poly poly_q(const std::string& text) { return parse_poly(text, Field::rationals()); }

inline SfcSpecPtr sfc_q(const SessionPtr& s, const std::string& c, const std::string& f) {
    return parse_module_descriptor("sfc:c=" + c + ",f=" + f, s, false).spec;
}

inline Scalar q(long long n, long long d = 1) {
    return Scalar::of_fraction(Field::rationals(), n, d);
}

} // namespace t
