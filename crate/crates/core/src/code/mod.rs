//! The BCH code C(q, q+1, 4, 1) and its dual.

pub mod dual;
pub mod linear;
pub mod low_weight;
pub mod nmds;
pub mod poly;
pub mod weights;

pub use dual::{dual_codeword, dual_min_weight_from_block, dual_trace_scan, dual_weight_distribution, DualMethod, DualScan, TraceTriple};
pub use linear::{
    build_code, full_support_count, kernel_to_subfield_solution, m_matrix, m_rank, subfield_kernel_basis, Codeword,
    LinearCodeSpec, MMatrix, H_ROWS,
};
pub use low_weight::{enumerate_low_weight, LowWeightScan, ScanMethod};
pub use nmds::{nmds_pairing_check, NmdsReport};
pub use poly::{bch_generator, beta, cyclotomic_cosets, minimal_poly, CyclotomicCoset, PolyGFq};
pub use weights::{assmus_mattson_check, classify_mds, macwilliams_transform, AmReport, MdsClass, WeightDistribution};
