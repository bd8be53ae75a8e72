//! Character-degree graphs of finite groups, with exact checks for perfection,
//! clique, independence and chromatic numbers.
//!
//! Arithmetic, graphs and degree sets are generic over the unsigned integer
//! type used for degrees and prime labels ([`arith::Integer`]). The aliases
//! below fix it to `u128`, which is what the file formats and the CLI use.

pub mod arith;
pub mod degrees;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod verify;

pub use error::{Error, Result};

/// Degree and label width used by the concrete aliases.
pub type Int = u128;

pub type PrimeGraph = graph::PrimeGraphOf<Int>;
pub type DegreeSet = degrees::DegreeSetOf<Int>;
pub type PrimeSet = degrees::PrimeSetOf<Int>;
pub type HoleCertificate = graph::HoleCertificate<Int>;
pub type ColoringResult = graph::ColoringResult<Int>;
pub type Psl2Spec = families::Psl2Spec<Int>;
pub type Psl2CycleCertificate = families::Psl2CycleCertificate<Int>;
pub type VerificationReport = verify::VerificationReport<Int>;

/// 64-bit variants, for callers that know their degrees fit.
pub type PrimeGraph64 = graph::PrimeGraphOf<u64>;
pub type DegreeSet64 = degrees::DegreeSetOf<u64>;
