//! Generators for concrete character graphs: `PSL2(q)` from its component
//! structure, `S_n` from hook lengths, and the arithmetic certificates for
//! odd cycles in the complement.

mod cycle_cert;
mod psl2;
mod symmetric;

pub use cycle_cert::{
    check_cycle_certificate, cycle_certificate_for, find_certificate_for_cycle,
    is_complement_cycle, odd_complement_cycles, GroupVariant, Psl2CycleCertificate,
    ALPHA_SEARCH_BOUND,
};
pub use psl2::{prime_powers_in, psl2_graph, Psl2Case, Psl2Spec};
pub use symmetric::{factorial, partitions, sn_degrees, Partition, MAX_SN};
