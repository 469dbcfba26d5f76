//! End-to-end reports for the Fano-index-two family `(1,1,1,k; k+1)`, the
//! moduli-dimension count for its links, and bounded enumeration of weight
//! systems with a fixed Fano index.
//!
//! Enumeration rows are independent, so with the `parallel` feature they are
//! evaluated on the rayon thread pool; emission order is the lexicographic
//! (weights, degree) order either way.

use num_bigint::BigInt;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classify5::{classify, DiffeoType};
use crate::error::{Error, Result};
use crate::milnor_orlik::{link_invariants, LinkInvariants};
use crate::rational::{bigint_json, fmt_rational, rational_json, ratio, Rational};
use crate::surface_invariants::{c1_squared, picard_number};
use crate::weight_system::{Isolatedness, WeightSystem};

/// Everything this crate can say about one member of the family
/// `(1,1,1,k; k+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub k: u32,
    pub weight_system: WeightSystem,
    pub invariants: LinkInvariants,
    pub diffeo: DiffeoType,
    pub c1_squared: Rational,
    pub picard: u64,
    pub moduli_real_dim: u64,
}

impl FamilyReport {
    pub fn to_json(&self) -> Value {
        let mut record = self.invariants.to_json();
        let map = record.as_object_mut().expect("invariants render as object");
        map.insert("k".into(), json!(self.k));
        map.insert("diffeo".into(), self.diffeo.to_json());
        map.insert("c1_squared".into(), rational_json(&self.c1_squared));
        map.insert("picard".into(), json!(self.picard));
        map.insert("moduli_real_dim".into(), json!(self.moduli_real_dim));
        record
    }
}

/// Full report for the family member at `k >= 1`, with its closed-form
/// invariants re-derived and asserted along the way.
pub fn family_report(k: u32) -> Result<FamilyReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let degree = k
        .checked_add(1)
        .ok_or_else(|| Error::InvalidArgument("k + 1 overflows".into()))?;
    let ws = WeightSystem::new([1, 1, 1, k], degree)?;
    let invariants = link_invariants(&ws)?;
    if invariants.b2 != u64::from(k) {
        return Err(Error::InvariantViolation(format!(
            "family member k = {k} has b2 = {}, expected {k}",
            invariants.b2
        )));
    }
    let c1sq = c1_squared(&ws);
    let expected_c1sq = ratio(4 * (i64::from(k) + 1), i64::from(k));
    if c1sq != expected_c1sq {
        return Err(Error::InvariantViolation(format!(
            "family member k = {k} has c1^2 = {c1sq}, expected {expected_c1sq}"
        )));
    }
    let diffeo = classify(&invariants)?;
    Ok(FamilyReport {
        k,
        weight_system: ws,
        picard: picard_number(invariants.b2),
        moduli_real_dim: moduli_real_dimension(k),
        invariants,
        diffeo,
        c1_squared: c1sq,
    })
}

/// Real dimension of the space of inequivalent links in the family at `k`,
/// from the parameter count of the defining polynomials modulo the ambient
/// automorphism group.
///
/// The defining data has `N = C(k+3, 2) + 3` coefficients (a general degree
/// k+1 ternary form plus a linear one); the automorphism group contributes
/// `G = 9 + 1 + C(k+2, 2)` dimensions (GL(3), the scalar on the last
/// coordinate, and a degree-k ternary form). Projectivizing both sides leaves
/// `N - 1 - (G - 1) = N - G = k - 5` complex parameters, clamped at zero and
/// doubled to count real dimensions.
pub fn moduli_real_dimension(k: u32) -> u64 {
    let k = i128::from(k);
    let coefficients = (k + 3) * (k + 2) / 2 + 3;
    let group = 9 + 1 + (k + 2) * (k + 1) / 2;
    let complex_dim = coefficients - group;
    assert_eq!(complex_dim, k - 5, "binomial dimension count must telescope");
    u64::try_from(2 * complex_dim.max(0)).expect("clamped dimension is nonnegative")
}

/// Bounds for [`enumerate_index`]: all of them must be at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Fano index every emitted system must have.
    pub index: u64,
    /// Upper bound on each weight.
    pub max_weight: u32,
    /// Upper bound on the degree.
    pub max_degree: u32,
}

impl Enumeration {
    pub fn new(index: u64, max_weight: u32, max_degree: u32) -> Result<Self> {
        if index == 0 || max_weight == 0 || max_degree == 0 {
            return Err(Error::InvalidArgument(
                "index, max-weight and max-degree must all be at least 1".into(),
            ));
        }
        Ok(Enumeration {
            index,
            max_weight,
            max_degree,
        })
    }

    /// Weight systems with non-decreasing weights within the bounds whose
    /// Fano index equals `self.index`, in lexicographic order.
    fn candidates(&self) -> Vec<WeightSystem> {
        let mut out = Vec::new();
        let max_w = self.max_weight;
        for w0 in 1..=max_w {
            for w1 in w0..=max_w {
                for w2 in w1..=max_w {
                    for w3 in w2..=max_w {
                        let sum =
                            u64::from(w0) + u64::from(w1) + u64::from(w2) + u64::from(w3);
                        let degree = sum as i128 - self.index as i128;
                        if degree >= 1 && degree <= i128::from(self.max_degree) {
                            out.push(
                                WeightSystem::new([w0, w1, w2, w3], degree as u32)
                                    .expect("candidate weights are positive"),
                            );
                        }
                    }
                }
            }
        }
        out
    }
}

/// One emitted enumeration row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumRow {
    pub weight_system: WeightSystem,
    pub invariants: LinkInvariants,
    pub diffeo: DiffeoType,
    pub c1_squared: Rational,
    pub picard: u64,
    pub isolatedness: Isolatedness,
}

fn evaluate_candidate(ws: &WeightSystem) -> Result<Option<EnumRow>> {
    let invariants = match link_invariants(ws) {
        Ok(inv) => inv,
        // A non-integral monodromy divisor (or a divisor with negative
        // coefficient sum / weighted degree) means no isolated singularity
        // realizes this system, so it has no link to report.
        Err(Error::NonIntegralCoefficient { .. }) | Err(Error::InvariantViolation(_)) => {
            return Ok(None)
        }
        Err(other) => return Err(other),
    };
    let diffeo = classify(&invariants)?;
    Ok(Some(EnumRow {
        weight_system: *ws,
        picard: picard_number(invariants.b2),
        c1_squared: c1_squared(ws),
        isolatedness: ws.isolatedness(),
        invariants,
        diffeo,
    }))
}

/// Evaluates all candidate systems sequentially.
pub fn enumerate_index_seq(params: &Enumeration) -> Result<Vec<EnumRow>> {
    let rows: Vec<Option<EnumRow>> = params
        .candidates()
        .iter()
        .map(evaluate_candidate)
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Evaluates all candidate systems on the rayon thread pool. Row order is
/// unaffected by scheduling: the indexed map keeps candidate order.
#[cfg(feature = "parallel")]
pub fn enumerate_index_par(params: &Enumeration) -> Result<Vec<EnumRow>> {
    let rows: Vec<Option<EnumRow>> = params
        .candidates()
        .par_iter()
        .map(evaluate_candidate)
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Enumerates weight systems of the given Fano index within bounds, parallel
/// when the `parallel` feature is enabled.
pub fn enumerate_index(params: &Enumeration) -> Result<Vec<EnumRow>> {
    #[cfg(feature = "parallel")]
    {
        enumerate_index_par(params)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_index_seq(params)
    }
}

/// TSV table with a single header row, tab separators and LF line endings.
pub fn rows_to_tsv(rows: &[EnumRow]) -> String {
    let mut out = String::from(
        "weights\tdegree\tindex\tb2\tmilnor_number\ttorsion_free\tdiffeo\tc1_squared\tpicard\tisolatedness_flag\n",
    );
    for row in rows {
        let ws = &row.weight_system;
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            ws.weights_csv(),
            ws.degree(),
            ws.fano_index(),
            row.invariants.b2,
            row.invariants.milnor_number,
            row.invariants.torsion_free,
            row.diffeo,
            fmt_rational(&row.c1_squared),
            row.picard,
            row.isolatedness.flag(),
        ));
    }
    out
}

/// JSON array of row objects mirroring the TSV columns.
pub fn rows_to_json(rows: &[EnumRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let ws = &row.weight_system;
                json!({
                    "weights": ws.weights().to_vec(),
                    "degree": ws.degree(),
                    "index": ws.fano_index(),
                    "b2": row.invariants.b2,
                    "milnor_number":
                        bigint_json(&BigInt::from(row.invariants.milnor_number.clone())),
                    "torsion_free": row.invariants.torsion_free.label(),
                    "diffeo": row.diffeo.to_string(),
                    "c1_squared": rational_json(&row.c1_squared),
                    "picard": row.picard,
                    "isolatedness_flag": row.isolatedness.flag(),
                })
            })
            .collect(),
    )
}
