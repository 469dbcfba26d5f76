//! Brute-force divisor representation as exact multisets of rotation numbers.
//!
//! A root of unity `e^{2 pi i q}` is stored as the rational `q` in `[0,1)`;
//! a divisor maps to the multiset of its roots with rational multiplicities.
//! Group-ring products become convolutions: roots multiply, so rotation
//! numbers add mod 1.
//!
//! This is a verifier for `divisor_ring`, not a production path: convolution
//! is quadratic in multiset size and materializing `L_n` takes `n` entries,
//! so it is only meant for small indices (a few dozen).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::divisor_ring::DivisorElement;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};

/// An exact multiset of rotation numbers in `[0,1)` with rational
/// multiplicities. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootMultiset {
    entries: BTreeMap<Rational, Rational>,
}

/// The multiset of all n-th roots of unity: `{j/n : j = 0..n-1}`, each with
/// multiplicity 1. Fails for `n = 0`.
pub fn lambda_multiset(n: u64) -> Result<RootMultiset> {
    if n == 0 {
        return Err(Error::InvalidIndex(
            "index must be a positive integer, got 0".into(),
        ));
    }
    let mut out = RootMultiset::default();
    for j in 0..n {
        out.accumulate(ratio(j as i64, n as i64), rat(1));
    }
    Ok(out)
}

/// Linear extension of [`lambda_multiset`] over a divisor's terms.
///
/// Panics if an index exceeds `u64`; such a multiset could not be
/// materialized anyway.
pub fn to_multiset(d: &DivisorElement) -> RootMultiset {
    let mut out = RootMultiset::default();
    for (n, c) in d.terms() {
        let n = u64::try_from(n).expect("oracle index exceeds u64");
        let base = lambda_multiset(n).expect("divisor indices are positive");
        for (q, m) in &base.entries {
            out.accumulate(q.clone(), m * c);
        }
    }
    out
}

impl RootMultiset {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending rotation-number order.
    pub fn entries(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.entries.iter()
    }

    /// Multiplicity of the rotation number `q`; zero when absent.
    pub fn multiplicity(&self, q: &Rational) -> Rational {
        self.entries.get(q).cloned().unwrap_or_else(Rational::zero)
    }

    /// Group-ring product: all pairwise sums of rotation numbers mod 1,
    /// multiplicities multiplied and accumulated.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out = RootMultiset::default();
        for (q1, m1) in &self.entries {
            for (q2, m2) in &other.entries {
                out.accumulate(frac(q1 + q2), m1 * m2);
            }
        }
        out
    }

    /// Multiplicity of rotation number 0, i.e. of the root 1.
    pub fn mult_at_zero(&self) -> Rational {
        self.multiplicity(&Rational::zero())
    }

    fn accumulate(&mut self, q: Rational, m: Rational) {
        if m.is_zero() {
            return;
        }
        match self.entries.entry(q) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + m;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }
}

fn frac(r: Rational) -> Rational {
    let f = r.floor();
    r - f
}

/// Debug rendering: `q:mult` pairs sorted by `q`.
impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .entries
            .iter()
            .map(|(q, m)| format!("{q}:{m}"))
            .collect();
        write!(f, "{{{}}}", rendered.join(", "))
    }
}
