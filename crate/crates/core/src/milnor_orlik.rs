//! The Milnor-Orlik calculus for links of weighted-homogeneous hypersurface
//! singularities in four variables.
//!
//! For a weight system with reduced rational weights `d/w_i = u_i/v_i`, the
//! divisor of the monodromy characteristic polynomial is the expanded product
//! `prod_i (L_{u_i}/v_i - 1)` in the divisor ring. Its coefficient sum is the
//! second Betti number of the link and its weighted degree is the Milnor
//! number; both are extracted with the integrality of the divisor checked,
//! never assumed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::divisor_ring::DivisorElement;
use crate::error::{Error, Result};
use crate::rational::{bigint_json, rat, ratio, Rational};
use crate::weight_system::WeightSystem;

/// Whether the link's second homology is known to be torsion-free.
///
/// The gcd criterion is sufficient only, so the negative outcome is
/// `Unknown`, never a definite "no".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionFree {
    Yes,
    Unknown,
}

impl TorsionFree {
    pub fn label(&self) -> &'static str {
        match self {
            TorsionFree::Yes => "yes",
            TorsionFree::Unknown => "unknown",
        }
    }
}

impl fmt::Display for TorsionFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Whether spinness of the link is implied by positivity of the transverse
/// first Chern class. When the Fano index is not positive the chain of
/// implications does not apply, so the field reports "not implied" rather
/// than claiming the link is non-spin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spin {
    Implied,
    NotImplied,
}

impl Spin {
    pub fn label(&self) -> &'static str {
        match self {
            Spin::Implied => "implied",
            Spin::NotImplied => "not_implied",
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Invariants of the 5-dimensional link of a weight system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkInvariants {
    pub weight_system: WeightSystem,
    /// Divisor of the monodromy characteristic polynomial, integral.
    pub divisor: DivisorElement,
    /// Second Betti number: the divisor's coefficient sum.
    pub b2: u64,
    /// Milnor number: the divisor's weighted degree, cross-checked against
    /// `prod_i (d - w_i) / w_i`.
    pub milnor_number: BigUint,
    pub torsion_free: TorsionFree,
    pub spin: Spin,
}

impl LinkInvariants {
    /// JSON record `{weights, degree, divisor, b2, milnor_number,
    /// torsion_free, spin}`.
    pub fn to_json(&self) -> Value {
        json!({
            "weights": self.weight_system.weights().to_vec(),
            "degree": self.weight_system.degree(),
            "divisor": self.divisor.to_json(),
            "b2": self.b2,
            "milnor_number": bigint_json(&BigInt::from(self.milnor_number.clone())),
            "torsion_free": self.torsion_free.label(),
            "spin": self.spin.label(),
        })
    }
}

/// The expanded product `prod_i (L_{u_i}/v_i - 1)` with rational
/// coefficients, before any integrality check.
///
/// The two divisor functionals used downstream are valid on this rational
/// form: the coefficient sum always equals the multiplicity of the trivial
/// root in the multiset picture, and the weighted degree always equals
/// `prod_i (d - w_i) / w_i`.
pub fn char_poly_divisor_raw(ws: &WeightSystem) -> DivisorElement {
    let one = DivisorElement::one();
    let mut product = one.clone();
    for rw in ws.reduced_weights().pairs() {
        let factor = DivisorElement::lambda(u64::from(rw.num))
            .expect("reduced weight numerator is positive")
            .scale(&ratio(1, i64::from(rw.den)))
            .sub(&one);
        product = product.mul(&factor);
    }
    product
}

/// Divisor of the monodromy characteristic polynomial, checked to be
/// integral.
///
/// A non-integral product means the weight system admits no isolated
/// weighted-homogeneous singularity (or exposes an internal bug); the
/// offending term is reported in the error.
pub fn char_poly_divisor(ws: &WeightSystem) -> Result<DivisorElement> {
    char_poly_divisor_raw(ws).assert_integral()
}

/// Second Betti number of the link: the coefficient sum of the monodromy
/// divisor, asserted to be a nonnegative integer.
pub fn b2_of_link(ws: &WeightSystem) -> Result<u64> {
    b2_from_divisor(&char_poly_divisor(ws)?)
}

pub(crate) fn b2_from_divisor(divisor: &DivisorElement) -> Result<u64> {
    let sum = divisor.coeff_sum();
    if !sum.is_integer() {
        return Err(Error::InvariantViolation(format!(
            "b2 is not an integer: {sum}"
        )));
    }
    u64::try_from(&sum.to_integer()).map_err(|_| {
        Error::InvariantViolation(format!("b2 out of range: {}", sum.to_integer()))
    })
}

/// Milnor number via the weight formula `prod_i (d - w_i) / w_i`,
/// cross-checked against the weighted degree of the monodromy divisor.
pub fn milnor_number(ws: &WeightSystem) -> Result<BigUint> {
    milnor_from_divisor(ws, &char_poly_divisor(ws)?)
}

pub(crate) fn milnor_from_divisor(
    ws: &WeightSystem,
    divisor: &DivisorElement,
) -> Result<BigUint> {
    let formula = milnor_formula(ws);
    let degree = divisor.weighted_degree();
    if formula != degree {
        return Err(Error::InvariantViolation(format!(
            "milnor number mismatch: formula {formula}, divisor degree {degree}"
        )));
    }
    if !degree.is_integer() {
        return Err(Error::InvariantViolation(format!(
            "milnor number is not an integer: {degree}"
        )));
    }
    let n = degree.to_integer();
    BigUint::try_from(n.clone())
        .map_err(|_| Error::InvariantViolation(format!("milnor number is negative: {n}")))
}

fn milnor_formula(ws: &WeightSystem) -> Rational {
    let d = i64::from(ws.degree());
    ws.weights()
        .iter()
        .map(|&w| ratio(d - i64::from(w), i64::from(w)))
        .fold(rat(1), |acc, f| acc * f)
}

/// Sufficient torsion-freeness criterion: the gcd of every three of the four
/// weights is one.
pub fn torsion_free_check(ws: &WeightSystem) -> TorsionFree {
    let w = ws.weights();
    let all_triples_coprime = (0..4).all(|skip| {
        let mut g = 0u32;
        for (i, &wi) in w.iter().enumerate() {
            if i != skip {
                g = g.gcd(&wi);
            }
        }
        g == 1
    });
    if all_triples_coprime {
        TorsionFree::Yes
    } else {
        TorsionFree::Unknown
    }
}

/// Assembles divisor, Betti number, Milnor number, torsion status and spin
/// status for the link of a weight system.
pub fn link_invariants(ws: &WeightSystem) -> Result<LinkInvariants> {
    let divisor = char_poly_divisor(ws)?;
    let b2 = b2_from_divisor(&divisor)?;
    let milnor = milnor_from_divisor(ws, &divisor)?;
    let spin = if ws.fano_index() > 0 {
        Spin::Implied
    } else {
        Spin::NotImplied
    };
    Ok(LinkInvariants {
        weight_system: *ws,
        divisor,
        b2,
        milnor_number: milnor,
        torsion_free: torsion_free_check(ws),
        spin,
    })
}
