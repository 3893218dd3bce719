#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "leavitt/repmod.hpp"

namespace leavitt {

/// Deterministic sampling configuration; identical configs reproduce
/// identical samples and suite outcomes.
struct SampleConfig {
    std::uint64_t seed = 42;
    int max_len = 6;
    int samples = 1000;
    SessionPtr session;
};

Monomial random_monomial(const SessionPtr& s, std::mt19937_64& rng, int max_len);
AlgebraElement random_element(const SessionPtr& s, std::mt19937_64& rng, int max_len,
                              int max_terms = 4);
// signed combination of <= 4 random monomials; cfg.samples == 0 gives zero
AlgebraElement random_element(const SampleConfig& cfg);

// Reduces the raw combination under both rewrite strategies on the session
// table and under the alternate (first-declared) special-edge table; true iff
// the two strategies produce identical normal forms and all three agree on
// zero-ness.
bool cross_check_zero_raw(const SessionPtr& s, const std::vector<RawTerm>& raw);
bool cross_check_zero(const AlgebraElement& x);

struct SuiteReport {
    std::string suite;
    int samples = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// sampled associativity, normal-form idempotence, involution and grading laws
SuiteReport check_assoc_suite(const SampleConfig& cfg);
// every instance of the defining relations (1)-(4) on the session graph
SuiteReport check_relations_suite(const SampleConfig& cfg);
// two-strategy/two-table agreement on random raw combinations and forced zeros
SuiteReport check_confluence_suite(const SampleConfig& cfg);
// relation check plus sampled multiplicativity of apply_hom
SuiteReport check_hom_suite(const SampleConfig& cfg, const GenMap& m);
// module axioms, f(c)z = 0, z = c f_1(c) z, witness soundness, endomorphism
// centrality and injectivity
SuiteReport check_module_suite(const SampleConfig& cfg, const SfcSpecPtr& spec);

// 5-vertex test graph: a 3-cycle with a chord, a loop, and an acyclic tail to
// a sink
GraphPtr mixed_test_graph();

} // namespace leavitt
