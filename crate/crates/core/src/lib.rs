//! Exact topological and transverse-holomorphic invariants of links of
//! isolated weighted-homogeneous hypersurface singularities in four complex
//! variables.
//!
//! Given a weight system `(w0,w1,w2,w3; d)`, the crate computes the divisor
//! of the monodromy characteristic polynomial by the Milnor-Orlik product in
//! an exact group-ring calculus ([`divisor_ring`]), extracts the second Betti
//! number and Milnor number of the 5-dimensional link ([`milnor_orlik`]),
//! decides the diffeomorphism type when torsion-freeness is witnessed
//! ([`classify5`]), and evaluates the basic Hodge/Euler/signature relations,
//! the anticanonical degree and the Picard number of the leaf space
//! ([`surface_invariants`]). All arithmetic is in arbitrary-precision
//! rationals; nothing is ever rounded.
//!
//! [`root_oracle`] carries an independent brute-force model of the divisor
//! ring (multisets of roots of unity as exact rotation numbers) used by the
//! test suites to verify the ring arithmetic, and [`family_explorer`] walks
//! the Fano-index-two family `(1,1,1,k; k+1)` and enumerates fixed-index
//! weight systems in bulk.
//!
//! ```
//! use linkinv::{family_report, ratio};
//!
//! let r = family_report(7).unwrap();
//! assert_eq!(r.invariants.b2, 7);
//! assert_eq!(r.diffeo.to_string(), "7#(S2xS3)");
//! assert_eq!(r.c1_squared, ratio(32, 7));
//! assert_eq!(r.picard, 8);
//! ```

#![forbid(unsafe_code)]

pub mod classify5;
pub mod divisor_ring;
pub mod error;
pub mod family_explorer;
pub mod milnor_orlik;
pub mod rational;
pub mod root_oracle;
pub mod surface_invariants;
pub mod weight_system;

pub use classify5::{classify, DiffeoType};
pub use divisor_ring::DivisorElement;
pub use error::{Error, Result};
pub use family_explorer::{
    enumerate_index, enumerate_index_seq, family_report, moduli_real_dimension, rows_to_json,
    rows_to_tsv, EnumRow, Enumeration, FamilyReport,
};
#[cfg(feature = "parallel")]
pub use family_explorer::enumerate_index_par;
pub use milnor_orlik::{
    b2_of_link, char_poly_divisor, char_poly_divisor_raw, link_invariants, milnor_number,
    torsion_free_check, LinkInvariants, Spin, TorsionFree,
};
pub use rational::{fmt_rational, rat, ratio, Rational};
pub use root_oracle::{lambda_multiset, to_multiset, RootMultiset};
pub use surface_invariants::{
    c1_squared, genus_bound_holds, picard_number, transverse_betti, BasicHodgeData,
    TransverseBetti,
};
pub use weight_system::{Isolatedness, ReducedWeight, ReducedWeights, WeightSystem};
