#pragma once

#include <cstdint>

#include "pargeo/descriptor.hpp"
#include "pargeo/report.hpp"

namespace pargeo {

/// Pipeline depth for a descriptor run; each stage implies the ones it needs
/// (einstein pulls in the grading and the candidate, cone pulls in einstein).
enum class Stage { algebra, grade, cotrans, involution, einstein, cone };

/// Executes the pipeline for one descriptor. Precondition failures (missing
/// descriptor parts, rejected constructions) become failing records with the
/// thrown message as witness; only descriptor parsing throws.
Report run_pipeline(const RunDescriptor& d, Stage stage, std::uint64_t seed);

/// The batch suite: reproduces every anchored number across the catalog
/// (classification table, rank bound, image degrees, Einstein gate, the
/// theorem clause suite with the reduction-table instances, the hand-computed
/// 2x2 anchor, cone decompositions, the quaternionic form identities and the
/// structural invariants). Record ids are prefixed c1..c9 by criterion.
Report verify_paper(std::uint64_t seed);

}  // namespace pargeo
