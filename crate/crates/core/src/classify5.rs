//! Smale-type classification of simply connected spin 5-manifolds from link
//! invariants.
//!
//! A simply connected spin 5-manifold is determined by its second homology;
//! with torsion-free `H_2` of rank `k` it is the k-fold connected sum of
//! `S^2 x S^3` (the sphere when `k = 0`). Torsion summands are never
//! synthesized here: when the torsion criterion is inconclusive the result is
//! explicitly undetermined.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::milnor_orlik::{LinkInvariants, Spin, TorsionFree};

/// Diffeomorphism type of a simply connected spin 5-manifold, to the extent
/// the computed invariants pin it down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffeoType {
    /// The 5-sphere.
    Sphere5,
    /// `k#(S^2 x S^3)` with `k >= 1`.
    ConnectedSum(u64),
    /// Torsion-freeness could not be established; carries `b_2`.
    TorsionUndetermined(u64),
}

/// Classifies a link from its invariants.
///
/// Refuses when spinness is not implied: the classification used here
/// applies to spin manifolds only.
pub fn classify(inv: &LinkInvariants) -> Result<DiffeoType> {
    if inv.spin != Spin::Implied {
        return Err(Error::ClassificationPrecondition(format!(
            "spin is not implied for weight system {} (Fano index {})",
            inv.weight_system,
            inv.weight_system.fano_index()
        )));
    }
    Ok(match (inv.torsion_free, inv.b2) {
        (TorsionFree::Yes, 0) => DiffeoType::Sphere5,
        (TorsionFree::Yes, k) => DiffeoType::ConnectedSum(k),
        (TorsionFree::Unknown, b2) => DiffeoType::TorsionUndetermined(b2),
    })
}

impl DiffeoType {
    /// JSON object `{type, k?}`.
    pub fn to_json(&self) -> Value {
        match self {
            DiffeoType::Sphere5 => json!({ "type": "sphere5" }),
            DiffeoType::ConnectedSum(k) => json!({ "type": "connected_sum", "k": k }),
            DiffeoType::TorsionUndetermined(b2) => {
                json!({ "type": "torsion_undetermined", "k": b2 })
            }
        }
    }
}

/// Label grammar: `S^5` | `<k>#(S2xS3)` | `b2=<k>,torsion=?`.
impl fmt::Display for DiffeoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffeoType::Sphere5 => write!(f, "S^5"),
            DiffeoType::ConnectedSum(k) => write!(f, "{k}#(S2xS3)"),
            DiffeoType::TorsionUndetermined(b2) => write!(f, "b2={b2},torsion=?"),
        }
    }
}

impl FromStr for DiffeoType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "S^5" {
            return Ok(DiffeoType::Sphere5);
        }
        if let Some(k) = s.strip_suffix("#(S2xS3)") {
            let k: u64 = k
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("bad label {s:?}: {e}")))?;
            if k == 0 {
                return Err(Error::InvalidArgument(
                    "connected-sum count must be positive; the empty sum is S^5".into(),
                ));
            }
            return Ok(DiffeoType::ConnectedSum(k));
        }
        if let Some(rest) = s.strip_prefix("b2=") {
            if let Some(b2) = rest.strip_suffix(",torsion=?") {
                let b2: u64 = b2
                    .parse()
                    .map_err(|e| Error::InvalidArgument(format!("bad label {s:?}: {e}")))?;
                return Ok(DiffeoType::TorsionUndetermined(b2));
            }
        }
        Err(Error::InvalidArgument(format!(
            "unrecognized diffeomorphism label {s:?}"
        )))
    }
}
