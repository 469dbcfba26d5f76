//! Exact arithmetic in the subring of the integral group ring Z[C*] spanned
//! by the divisors `L_n = div(t^n - 1)`.
//!
//! An element is a finite formal sum `sum_n a_n * L_n` with exact rational
//! coefficients. Products follow the relation
//! `L_a * L_b = gcd(a,b) * L_lcm(a,b)`, and `L_1 = div(t - 1) = <1>` is the
//! multiplicative identity. Elements are kept in pruned normal form: no zero
//! coefficient is ever stored, so structural equality is semantic equality.
//!
//! Indices are arbitrary-precision: lcm indices grow multiplicatively under
//! products, so no fixed-width integer is safe.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{bigint_json, biguint_json, fmt_rational, Rational};

/// A finite formal sum of the divisors `L_n` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorElement {
    terms: BTreeMap<BigUint, Rational>,
}

impl DivisorElement {
    /// The zero element (the empty sum).
    pub fn zero() -> Self {
        DivisorElement::default()
    }

    /// The divisor `L_n` of `t^n - 1`: the formal sum of all n-th roots of
    /// unity. Fails for `n = 0`.
    pub fn lambda(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(
                "index must be a positive integer, got 0".into(),
            ));
        }
        let mut terms = BTreeMap::new();
        terms.insert(BigUint::from(n), Rational::one());
        Ok(DivisorElement { terms })
    }

    /// The multiplicative identity `L_1 = <1>`.
    pub fn one() -> Self {
        Self::lambda(1).expect("1 is a valid index")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `L_n`; zero when the term is absent.
    pub fn coeff(&self, n: u64) -> Rational {
        self.terms
            .get(&BigUint::from(n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn accumulate(&mut self, n: BigUint, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(n) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.accumulate(n.clone(), c.clone());
        }
        out
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.accumulate(n.clone(), -c.clone());
        }
        out
    }

    /// Every coefficient multiplied by the rational `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DivisorElement {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.clone(), a * c))
                .collect(),
        }
    }

    /// Bilinear extension of `L_a * L_b = gcd(a,b) * L_lcm(a,b)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (na, ca) in &self.terms {
            for (nb, cb) in &other.terms {
                let g = na.gcd(nb);
                let l = na / &g * nb;
                let coeff = ca * cb * Rational::from_integer(BigInt::from(g));
                out.accumulate(l, coeff);
            }
        }
        out
    }

    /// Total coefficient sum `sum_n a_n`.
    ///
    /// For the monodromy divisor this equals the multiplicity of the
    /// eigenvalue 1, hence the second Betti number of the link.
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Total root count `sum_n a_n * n`.
    ///
    /// Multiplicative under [`mul`](Self::mul); for the monodromy divisor it
    /// equals the Milnor number.
    pub fn weighted_degree(&self) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (n, c)| {
            acc + c * Rational::from_integer(BigInt::from(n.clone()))
        })
    }

    /// Passes the element through unchanged when every coefficient is an
    /// integer; otherwise reports the smallest offending term.
    pub fn assert_integral(self) -> Result<Self> {
        for (n, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegralCoefficient {
                    index: n.clone(),
                    coefficient: c.clone(),
                });
            }
        }
        Ok(self)
    }

    /// JSON rendering: array of `{n, num, den}` in ascending index order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(n, c)| {
                    serde_json::json!({
                        "n": biguint_json(n),
                        "num": bigint_json(c.numer()),
                        "den": bigint_json(c.denom()),
                    })
                })
                .collect(),
        )
    }
}

impl Add for &DivisorElement {
    type Output = DivisorElement;
    fn add(self, rhs: Self) -> DivisorElement {
        DivisorElement::add(self, rhs)
    }
}

impl Sub for &DivisorElement {
    type Output = DivisorElement;
    fn sub(self, rhs: Self) -> DivisorElement {
        DivisorElement::sub(self, rhs)
    }
}

impl Mul for &DivisorElement {
    type Output = DivisorElement;
    fn mul(self, rhs: Self) -> DivisorElement {
        DivisorElement::mul(self, rhs)
    }
}

impl Neg for &DivisorElement {
    type Output = DivisorElement;
    fn neg(self) -> DivisorElement {
        DivisorElement::zero().sub(self)
    }
}

/// Renders as `a1*L1 + a2*L2 + ...` with indices ascending; `0` when empty.
impl fmt::Display for DivisorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| format!("{}*L{}", fmt_rational(c), n))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
