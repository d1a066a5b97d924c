#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sls/builders.hpp"
#include "sls/code.hpp"

namespace sls {

/// Everything needed to merge two codes along facing boundary logicals.
struct MergeSpec {
    SubsystemCode code_a, code_b;
    BoundaryLogical logical_a, logical_b;
    bool with_ancillas = false;
};

/// A merged subsystem code plus the bookkeeping the verification and
/// simulation layers consume. Qubit indexing of `merged` is A-qubits, then
/// B-qubits, then ancillas.
struct MergeResult {
    MergeSpec spec;
    SubsystemCode merged;
    std::vector<PauliOperator> merging_operators;        // N seam operators
    std::vector<std::size_t> merging_generator_indices;  // W, indices into the above
    std::size_t delta_g = 0;                             // |W|
    PauliOperator joint_logical;                         // P_L^A P_L^B, merged indexing
    std::vector<std::size_t> a_to_merged, b_to_merged;
    std::vector<std::size_t> ancilla_qubits;             // merged indices
    MergedLayout layout;

    std::size_t n_merging() const { return merging_operators.size(); }
};

/// The N seam operators: component i of each boundary logical on its embedded
/// qubit, dressed with the adjacent ancilla Z pair when ancillas are in play
/// (the boundary terms drop one Z each).
std::vector<PauliOperator> merging_operators(const MergeSpec& spec, const MergedLayout& layout);

/// Assembles the merged code (embedded generators of A and B, all merging
/// operators, single-qubit ancilla X operators) and computes W and delta_g as
/// the rank of the merging operators modulo G^A x G^B x <P_L^A P_L^B>.
/// The scan runs ends-inward (1, N, 2, N-1, ...) so the retained generators
/// sit at the seam ends whenever the interior ones are products of them.
MergeResult build_merged_code(const MergeSpec& spec);

/// For each retained merging generator, a stabilizer of the pre-merge product
/// code anticommuting with it and commuting with every other one. Throws
/// InvalidCodeError when no witness exists (the merge spec is pathological).
std::vector<std::pair<PauliOperator, PauliOperator>> verify_lemma2(const MergeResult& result);

/// Ledger check of the merged code against the pre-merge analyses.
struct MergedParamsReport {
    std::size_t n = 0, k = 0, g = 0, s = 0;
    std::size_t expected_k = 0, expected_g = 0, ancillas = 0;
    std::size_t delta_g = 0;
    std::size_t d_min = 0;                  // min of the input distances
    std::optional<std::size_t> d_merged;    // oracle value up to max_weight
    int r_before = 0, r_after = 0;
    bool ok = false;
    std::vector<std::string> violations;
};

/// Asserts n, k, g against the merge ledger, d_merged >= d_min via the
/// distance oracle, and that the merged interaction range grew by at most 2.
/// Ancillas add no net gauge qubits: each brings one qubit and one
/// independent X generator, which cancel in g = rank - n + k.
MergedParamsReport verify_merged_parameters(const MergeResult& result, std::size_t max_weight);

/// Enlarges the stabilizer by fix_set; the new gauge group is the centralizer
/// of fix_set inside the old one. Logical count is unchanged.
SubsystemCode gauge_fix(const SubsystemCode& merged, const std::vector<PauliOperator>& fix_set);

/// The split outcome: the two original codes plus the joint stabilizer record
/// on the product-code indexing (A-qubits then B-qubits).
struct SplitResult {
    SubsystemCode code_a, code_b;
    PauliOperator joint_record;    // P_L^A P_L^B on n_A + n_B qubits
};

SplitResult split(const MergeResult& result);

/// Unsigned gauge-group equality (both inclusions) between the merged code
/// and a reference code, after collapsing the empty seam column so the merged
/// lattice lands on the reference grid. Used for the Bacon-Shor closure
/// check: 3x3 + 3x3 merged equals the 6x3 code.
bool gauge_groups_equal_after_seam_collapse(const MergeResult& result, const SubsystemCode& ref);

}  // namespace sls
