#pragma once

#include <vector>

#include "sipq/partitions.hpp"
#include "sipq/report.hpp"
#include "sipq/series.hpp"

namespace sipq {

// λ = β + μ row by row, with β in the basis and μ a partition into multiples
// of the modulus having no more rows than β.
struct SipDecomposition {
  Partition beta;
  Partition mu;
  int modulus = 2;
};

// Modulus 2. `c` is one of G1, G2, P1, P2. Throws NotInClass if λ is not a
// member, InternalError if the remainder fails to be a partition.
SipDecomposition decompose(PartitionClass c, const Partition& lambda);

// Row-wise sum. Throws NotInClass if β is not in the basis of `c`,
// NonEvenMu for an odd part of μ, LengthViolation if μ has more rows than β.
Partition compose(PartitionClass c, const Partition& beta, const Partition& mu);

// Round trip plus uniqueness of (β, μ) for every member of weight <= weight_max.
// Uniqueness is checked by composing every basis element with every admissible
// μ and counting preimages.
CheckReport verify_sip_property(PartitionClass c, PartitionClass basis, int modulus, int weight_max);

// Counts of the class by weight against sum_n B(n;q) / (q^k;q^k)_n, where
// B(n;q) enumerates basis members of length n.
CheckReport sip_gf_single_variable(PartitionClass c, PartitionClass basis, int modulus, int weight_max);

// Entry m is the sum of ω(β) over basis members of length m and weight at most
// `trunc`, for m = 0..trunc.
std::vector<Series> basis_length_polynomials(PartitionClass basis, int trunc);

// Four-parameter generating function assembled from basis polynomials:
// sum B(2n)/((ab;Q)_n (Q;Q)_n) + sum B(2n+1)/((ab;Q)_{n+1} (Q;Q)_n).
Series sip_gf_four_parameter(PartitionClass c, int trunc);

// Compares sip_gf_four_parameter with enumeration, slice by slice.
CheckReport check_sip_gf_four_parameter(PartitionClass c, int trunc);

}  // namespace sipq
