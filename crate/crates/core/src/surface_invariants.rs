//! Basic (transverse) Hodge-number calculus for the 5-dimensional case, plus
//! the anticanonical degree and Picard number of the leaf space.
//!
//! In transverse complex dimension two all basic Hodge numbers are determined
//! by the irregularity `q`, the geometric genus `p_g`, and `h^{1,1}`.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::weight_system::WeightSystem;

/// The triple `(q, p_g, h11)` of basic Hodge data, with `h11 >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasicHodgeData {
    q: u32,
    p_g: u32,
    h11: u32,
}

impl BasicHodgeData {
    /// Validates `h11 >= 1` (the transverse Kaehler class is always there).
    pub fn new(q: u32, p_g: u32, h11: u32) -> Result<Self> {
        if h11 == 0 {
            return Err(Error::InvalidArgument(
                "h11 must be at least 1".into(),
            ));
        }
        Ok(BasicHodgeData { q, p_g, h11 })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p_g(&self) -> u32 {
        self.p_g
    }

    pub fn h11(&self) -> u32 {
        self.h11
    }

    /// Basic Euler characteristic `2 + 2 p_g - 4q + h11`.
    pub fn chi_basic(&self) -> i64 {
        2 + 2 * i64::from(self.p_g) - 4 * i64::from(self.q) + i64::from(self.h11)
    }

    /// Basic Hirzebruch signature `2 + 2 p_g - h11`.
    pub fn tau_basic(&self) -> i64 {
        2 + 2 * i64::from(self.p_g) - i64::from(self.h11)
    }

    /// Holomorphic Euler characteristic `1 - q + p_g`.
    pub fn chi_hol(&self) -> i64 {
        let chi_hol = 1 - i64::from(self.q) + i64::from(self.p_g);
        // tripwire: chi + tau = 4 chi_hol holds identically
        assert_eq!(
            self.chi_basic() + self.tau_basic(),
            4 * chi_hol,
            "basic Euler/signature identity violated"
        );
        chi_hol
    }

    /// Arithmetic genus `chi_hol - 1`.
    pub fn arithmetic_genus(&self) -> i64 {
        self.chi_hol() - 1
    }

    /// JSON record `{q, p_g, h11, chi_b, tau_b, chi_hol, p_a}`.
    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "p_g": self.p_g,
            "h11": self.h11,
            "chi_b": self.chi_basic(),
            "tau_b": self.tau_basic(),
            "chi_hol": self.chi_hol(),
            "p_a": self.arithmetic_genus(),
        })
    }
}

/// Degree-2 basic cohomology data forced by the link's topology when
/// `b_1 = 0`: the basic `b_2` gains one class (the transverse Kaehler class)
/// over `b_2` of the link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransverseBetti {
    /// Basic second Betti number `1 + b_2(M)`.
    pub b2: u64,
    /// Basic Euler characteristic `3 + b_2(M)`.
    pub chi: i64,
    /// Lower bound for the holomorphic Euler characteristic.
    pub chi_hol_min: i64,
}

/// Transverse Betti data determined by the second Betti number of a simply
/// connected link.
pub fn transverse_betti(b2_link: u64) -> TransverseBetti {
    TransverseBetti {
        b2: b2_link + 1,
        chi: 3 + b2_link as i64,
        chi_hol_min: 1,
    }
}

/// The bound `b_2(M) >= 2 p_g` forced on any Sasakian 5-manifold with
/// `b_1 = 0`.
pub fn genus_bound_holds(b2_link: u64, p_g: u64) -> bool {
    b2_link >= 2 * p_g
}

/// Anticanonical self-intersection `d (|w| - d)^2 / (w0 w1 w2 w3)` of the
/// degree-`d` hypersurface in weighted projective 3-space.
pub fn c1_squared(ws: &WeightSystem) -> Rational {
    let d = BigInt::from(ws.degree());
    let index = BigInt::from(ws.fano_index());
    let weight_product: BigInt = ws
        .weights()
        .iter()
        .map(|&w| BigInt::from(w))
        .product();
    Rational::new(d * (&index * &index), weight_product)
}

/// Picard number of the leaf space of a positive quasi-regular structure:
/// one more than the link's second Betti number.
pub fn picard_number(b2_link: u64) -> u64 {
    b2_link + 1
}
