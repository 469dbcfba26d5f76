//! Validated weight/degree data for weighted-homogeneous polynomials in four
//! variables, with derived reduced rational weights and Fano index.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A weight vector `(w0, w1, w2, w3)` together with a degree `d`, all
/// positive. Weights are kept in the order given, no sorting.
///
/// Whether the weight system actually carries an isolated singularity is an
/// input assumption; see [`WeightSystem::isolatedness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: [u32; 4],
    degree: u32,
}

/// The four fractions `d/w_i` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedWeights {
    pairs: [ReducedWeight; 4],
}

/// One reduced fraction `d/w_i = num/den` with `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedWeight {
    pub num: u32,
    pub den: u32,
}

/// How (or whether) the isolated-singularity assumption is witnessed.
///
/// The paper-family and Brieskorn-Pham cases are the only ones this crate
/// verifies mechanically; everything else is an assumption recorded as such.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Isolatedness {
    /// Every weight divides the degree, so `sum_i z_i^{d/w_i}` realizes the
    /// system with an isolated singularity at the origin.
    BrieskornPham,
    /// The Fano-index-two family `(1,1,1,k; k+1)`, whose generic member has
    /// an isolated singularity.
    IndexTwoFamily,
    /// No witness; invariants are formal values under the isolatedness
    /// assumption.
    Assumed,
}

impl Isolatedness {
    pub fn is_verified(&self) -> bool {
        !matches!(self, Isolatedness::Assumed)
    }

    /// TSV flag value.
    pub fn flag(&self) -> &'static str {
        if self.is_verified() {
            "verified"
        } else {
            "assumed"
        }
    }
}

impl WeightSystem {
    /// Validates that all weights and the degree are positive.
    pub fn new(weights: [u32; 4], degree: u32) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidWeightSystem(
                "weights must be positive".into(),
            ));
        }
        if degree == 0 {
            return Err(Error::InvalidWeightSystem("degree must be positive".into()));
        }
        Ok(WeightSystem { weights, degree })
    }

    /// Parses the input syntax `"w0,w1,w2,w3:d"`.
    pub fn parse(text: &str) -> Result<Self> {
        let (weights_part, degree_part) = text.split_once(':').ok_or_else(|| {
            Error::InvalidWeightSystem(format!(
                "expected \"w0,w1,w2,w3:d\", got {text:?}"
            ))
        })?;
        let fields: Vec<&str> = weights_part.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::InvalidWeightSystem(format!(
                "expected 4 weights, got {}",
                fields.len()
            )));
        }
        let mut weights = [0u32; 4];
        for (slot, field) in weights.iter_mut().zip(&fields) {
            *slot = parse_positive(field, "weight")?;
        }
        let degree = parse_positive(degree_part, "degree")?;
        WeightSystem::new(weights, degree)
    }

    pub fn weights(&self) -> [u32; 4] {
        self.weights
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `w0 + w1 + w2 + w3`.
    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    /// Each `d/w_i` reduced to lowest terms.
    pub fn reduced_weights(&self) -> ReducedWeights {
        ReducedWeights {
            pairs: self.weights.map(|w| {
                let g = self.degree.gcd(&w);
                ReducedWeight {
                    num: self.degree / g,
                    den: w / g,
                }
            }),
        }
    }

    /// The Fano index `|w| - d`. Positive exactly when the transverse first
    /// Chern class is positive.
    pub fn fano_index(&self) -> i64 {
        self.weight_sum() as i64 - i64::from(self.degree)
    }

    /// True iff every weight divides the degree, so the system is realized by
    /// a sum of pure powers with an isolated singularity.
    pub fn is_brieskorn_pham_compatible(&self) -> bool {
        self.weights.iter().all(|&w| self.degree % w == 0)
    }

    /// The strongest isolatedness witness available for this system.
    pub fn isolatedness(&self) -> Isolatedness {
        if self.is_brieskorn_pham_compatible() {
            return Isolatedness::BrieskornPham;
        }
        let mut sorted = self.weights;
        sorted.sort_unstable();
        let k = sorted[3];
        if sorted[0] == 1
            && sorted[1] == 1
            && sorted[2] == 1
            && u64::from(self.degree) == u64::from(k) + 1
        {
            return Isolatedness::IndexTwoFamily;
        }
        Isolatedness::Assumed
    }

    /// Weights as `"w0,w1,w2,w3"`.
    pub fn weights_csv(&self) -> String {
        self.weights.map(|w| w.to_string()).join(",")
    }

    /// JSON object `{weights: [...], degree: d}`.
    pub fn to_json(&self) -> Value {
        json!({ "weights": self.weights.to_vec(), "degree": self.degree })
    }
}

fn parse_positive(field: &str, what: &str) -> Result<u32> {
    let value: u32 = field.trim().parse().map_err(|e| {
        Error::InvalidWeightSystem(format!("bad {what} {field:?}: {e}"))
    })?;
    if value == 0 {
        return Err(Error::InvalidWeightSystem(format!(
            "{what} must be positive"
        )));
    }
    Ok(value)
}

impl ReducedWeights {
    pub fn pairs(&self) -> [ReducedWeight; 4] {
        self.pairs
    }
}

impl FromStr for WeightSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WeightSystem::parse(s)
    }
}

/// Renders in the input syntax `w0,w1,w2,w3:d`.
impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.weights_csv(), self.degree)
    }
}
