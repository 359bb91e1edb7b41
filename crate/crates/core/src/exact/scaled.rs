//! Scaled-integer polynomial form used inside the heavy convolution
//! pipelines: one shared denominator per polynomial, big-integer
//! coefficients, and a single gcd reduction per polynomial instead of one
//! per elementary operation. Results are converted back to canonical
//! [`ExactPoly`] form at the boundary, so nothing here changes exactness.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::ExactPoly;
use super::rational::ExactRational;

/// Polynomial `coeffs / den` with integer coefficients.
pub(crate) struct ScaledPoly {
    pub den: BigUint,
    pub coeffs: Vec<BigInt>,
}

impl ScaledPoly {
    pub fn one() -> Self {
        ScaledPoly {
            den: BigUint::one(),
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_exact(p: &ExactPoly) -> Self {
        let mut den = BigUint::one();
        for (_, c) in p.nonzero_terms() {
            den = den.lcm(c.denom().magnitude());
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    BigInt::zero()
                } else {
                    let scale = &den / c.denom().magnitude();
                    c.numer() * BigInt::from_biguint(Sign::Plus, scale)
                }
            })
            .collect();
        ScaledPoly { den, coeffs }
    }

    pub fn to_exact(&self) -> ExactPoly {
        let den = BigInt::from_biguint(Sign::Plus, self.den.clone());
        ExactPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        ExactRational::zero()
                    } else {
                        ExactRational::from_parts(c.clone(), den.clone())
                    }
                })
                .collect(),
        )
    }

    /// Divides the denominator and every coefficient by their shared gcd,
    /// keeping the stored sizes near the canonical ones.
    pub fn reduce_content(&mut self) {
        let mut g = self.den.clone();
        for c in &self.coeffs {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c.magnitude());
            }
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        self.den /= &g;
        let gi = BigInt::from_biguint(Sign::Plus, g);
        for c in &mut self.coeffs {
            if !c.is_zero() {
                *c /= &gi;
            }
        }
    }
}

/// Accumulates (1/extra_den)·Σ scale_i·τ^(shift_i)·q_i over a shared
/// denominator and reduces once at the end.
///
/// Each entry is (scalar numerator, scalar denominator, polynomial, power
/// shift). The division by `extra_den` multiplies the lcm denominator, it
/// is not folded into it.
pub(crate) fn scaled_linear_combination(
    terms: &[(BigInt, BigUint, &ScaledPoly, usize)],
    extra_den: u64,
    out_len: usize,
) -> ScaledPoly {
    let mut common = BigUint::one();
    for (num, sden, poly, _) in terms {
        if num.is_zero() {
            continue;
        }
        common = common.lcm(&(sden * &poly.den));
    }
    let mut coeffs = vec![BigInt::zero(); out_len];
    for (num, sden, poly, shift) in terms {
        if num.is_zero() {
            continue;
        }
        let scale = BigInt::from_biguint(Sign::Plus, &common / &(sden * &poly.den)) * num;
        for (j, c) in poly.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[j + shift] += c * &scale;
            }
        }
    }
    let mut out = ScaledPoly {
        den: common * extra_den,
        coeffs,
    };
    out.reduce_content();
    out
}
