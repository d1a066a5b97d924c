#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sls/lattice.hpp"
#include "sls/pauli.hpp"

namespace sls {

/// Thrown when a gauge generator list does not define a valid subsystem code
/// (non-Hermitian generator, or a phase lands in the derived center).
struct InvalidCodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subsystem stabilizer code given by its gauge generator list.
struct SubsystemCode {
    std::size_t n = 0;
    std::vector<PauliOperator> gauge_generators;
    std::string name;
    std::optional<Lattice2D> geometry;
};

/// X-like / Z-like pair of anticommuting class representatives.
struct OperatorPair {
    PauliOperator x_like;
    PauliOperator z_like;
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t g = 0;
    std::optional<std::size_t> d;    // unset until a distance search ran
};

/// Full decomposition of a subsystem code: stabilizer center, bare logical
/// pairs and gauge pairs, all as phase-canonical (+1 sign) representatives.
struct CodeAnalysis {
    std::vector<PauliOperator> stabilizer_generators;
    std::vector<OperatorPair> logical_pairs;
    std::vector<OperatorPair> gauge_pairs;
    CodeParams params;

    std::size_t s() const { return stabilizer_generators.size(); }
};

/// Independent generating set of the center of the gauge group modulo phases.
/// Throws InvalidCodeError if -1 (or +-i) is a product of gauge generators.
std::vector<PauliOperator> center(const SubsystemCode& code);

/// Stabilizer generators, k logical pairs and g gauge pairs via symplectic
/// Gram-Schmidt, with n = k + s + g.
CodeAnalysis analyze(const SubsystemCode& code);

/// Smallest weight of a Pauli commuting with the whole stabilizer but outside
/// the gauge group (a dressed logical), searched by increasing weight.
/// Returns nullopt when no such operator exists up to max_weight.
std::optional<std::size_t> distance(const SubsystemCode& code, std::size_t max_weight);
std::optional<std::size_t> distance(const SubsystemCode& code, const CodeAnalysis& analysis,
                                    std::size_t max_weight);

/// Representatives of N(G)/<i>S, one X/Z pair per logical qubit; every
/// returned operator commutes with all gauge generators.
std::vector<OperatorPair> bare_logicals(const SubsystemCode& code);

/// An element of p's class (modulo the stabilizer, or modulo the gauge group
/// when use_gauge) supported inside `allowed`, or nullopt if none exists.
std::optional<PauliOperator> reduce_to_support(const PauliOperator& p, const SubsystemCode& code,
                                               const CodeAnalysis& analysis,
                                               const std::set<std::size_t>& allowed,
                                               bool use_gauge);

/// Phase-canonical representative: same bits, sign forced to +1.
inline PauliOperator canonical(const PauliOperator& p) { return p.unsigned_rep(); }

}  // namespace sls
