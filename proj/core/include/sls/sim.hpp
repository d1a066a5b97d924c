#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sls/code.hpp"
#include "sls/surgery.hpp"

namespace sls {

/// Counter-based deterministic bit stream (splitmix64 of seed + counter).
struct Rng {
    uint64_t seed = 0;
    uint64_t counter = 0;

    uint64_t next_u64();
    bool next_bit() { return next_u64() & 1; }
};

struct MeasurementRecord {
    PauliOperator op;
    int outcome = +1;
    bool deterministic = false;
    std::string step_label;
};

enum class Eigenstate { Zp, Zm, Xp, Xm, Yp, Ym };

char eigenstate_pauli(Eigenstate e);
int eigenstate_sign(Eigenstate e);
std::string to_string(Eigenstate e);
std::optional<Eigenstate> parse_eigenstate(const std::string& text);    // "Z+", "X-", ...
inline const Eigenstate kAllEigenstates[6] = {Eigenstate::Zp, Eigenstate::Zm, Eigenstate::Xp,
                                              Eigenstate::Xm, Eigenstate::Yp, Eigenstate::Ym};

/// Pure stabilizer state tracked as n independent, pairwise-commuting,
/// sign-carrying generators.
class StabilizerState {
  public:
    StabilizerState(std::size_t n, std::vector<PauliOperator> generators, uint64_t seed);

    std::size_t n() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return gens_; }
    uint64_t seed() const { return rng_.seed; }

    /// Projective measurement of a Hermitian Pauli. Random outcomes come from
    /// the seeded stream; deterministic ones from an exact signed group solve.
    MeasurementRecord measure(const PauliOperator& p, std::string step_label);

    /// Conjugates the state by a Pauli (error injection / frame correction).
    void apply_pauli(const PauliOperator& e);

    /// +1 or -1 when p is sharp on this state, nullopt when the outcome
    /// would be random.
    std::optional<int> expectation(const PauliOperator& p) const;

  private:
    std::size_t n_;
    std::vector<PauliOperator> gens_;
    Rng rng_;
};

/// The chosen signed eigen-operator of a pair: Z uses z_like, X uses x_like,
/// Y uses i * x_like * z_like; the sign is the eigenvalue.
PauliOperator signed_logical(const OperatorPair& pair, Eigenstate e);

/// Codestate with every stabilizer generator at +1 and one eigenstate choice
/// per logical and per gauge pair (s + k + g = n generators).
StabilizerState encode(const SubsystemCode& code, const CodeAnalysis& analysis,
                       const std::vector<Eigenstate>& logical_basis,
                       const std::vector<Eigenstate>& gauge_fixing, uint64_t seed);

/// Pre-merge product state on the merged indexing: A in the chosen logical
/// eigenstate, B likewise, all gauge pairs fixed to Z+, ancillas in |+>.
StabilizerState encode_product(const MergeResult& merge, Eigenstate input_a, Eigenstate input_b,
                               uint64_t seed);

struct MergeRun {
    int m1 = +1;
    std::vector<MeasurementRecord> records;
};

/// Measures the N merging operators in seam order (m1 = outcome product),
/// then performs `rounds` full sweeps of the merged stabilizer generators,
/// checking each outcome is deterministic and stable, and +1 for the product
/// stabilizers untouched by the merge. Throws std::logic_error on violation.
MergeRun run_merge_schedule(StabilizerState& state, const MergeResult& merge,
                            const CodeAnalysis& merged_analysis, std::size_t rounds);

struct SplitRun {
    std::vector<int> ancilla_outcomes;
    PauliOperator frame;    // applied correction, supported on code qubits
    std::vector<MeasurementRecord> records;
};

/// Measures all ancillas in X, re-measures the stabilizers of A and B, and
/// applies a solved Pauli frame returning every one of them to +1 without
/// touching the bare logicals of either code.
SplitRun run_split_schedule(StabilizerState& state, const MergeResult& merge);

struct TeleportReport {
    uint64_t seed = 0;
    Eigenstate input = Eigenstate::Zp;
    int m1 = +1, m2 = +1;
    std::vector<int> ancilla_outcomes;
    PauliOperator frame;
    std::string correction;                 // applied logical corrections on B
    int final_x = 0, final_y = 0, final_z = 0;    // 0 = indeterminate
    int want_x = 0, want_y = 0, want_z = 0;
    bool pass = false;
    std::vector<MeasurementRecord> records;
};

/// Full logical teleportation A -> B: encode the input eigenstate on A and
/// |+> on B, merge-measure (m1), split, measure X_L^A (m2), then apply the
/// conditional X_L^B / Z_L^B corrections and read out B's logical triple.
TeleportReport teleport(const MergeResult& merge, Eigenstate input, uint64_t seed,
                        std::size_t rounds);

}  // namespace sls
