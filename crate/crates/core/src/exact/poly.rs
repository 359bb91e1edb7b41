//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored densely, index k holding the coefficient of τ^k.
//! The polynomials handled here have at most a few hundred terms and half of
//! the entries are structurally zero by parity, which dense storage absorbs
//! without fuss. The zero polynomial has degree -1 by convention.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::rational::{ExactRational, GaussianRational};

/// Parity of a polynomial in τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Only even powers of τ occur (the zero polynomial reports `Even`).
    Even,
    /// Only odd powers of τ occur.
    Odd,
    /// Mixed powers.
    None,
}

impl Parity {
    /// Parity of the integer `n`: even n → `Even`, odd n → `Odd`.
    pub fn of_index(n: usize) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        }
    }
}

/// Polynomial in τ with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactPoly {
    /// Dense coefficients, no trailing zeros; empty for the zero polynomial.
    coeffs: Vec<ExactRational>,
    parity: Parity,
}

impl ExactPoly {
    /// Builds a polynomial from dense coefficients indexed by power.
    /// Trailing zeros are trimmed and parity is detected.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let parity = detect_parity(&coeffs);
        ExactPoly { coeffs, parity }
    }

    pub fn zero() -> Self {
        ExactPoly {
            coeffs: Vec::new(),
            parity: Parity::Even,
        }
    }

    pub fn one() -> Self {
        ExactPoly::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        ExactPoly::from_coeffs(vec![c])
    }

    /// The monomial `c·τ^k`.
    pub fn monomial(k: usize, c: ExactRational) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        ExactPoly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Coefficient of τ^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Constant term.
    pub fn constant_term(&self) -> ExactRational {
        self.coeff(0)
    }

    /// Nonzero terms `(k, coeff)` in ascending power order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Term-by-term derivative d/dτ.
    pub fn derivative(&self) -> ExactPoly {
        if self.coeffs.len() <= 1 {
            return ExactPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &ExactRational::from_integer(k as i64))
            .collect();
        ExactPoly::from_coeffs(coeffs)
    }

    /// Multiplication by τ (shift every power up by one).
    pub fn mul_x(&self) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &ExactRational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Exact Horner evaluation at a Gaussian-rational point.
    pub fn eval_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        if z.is_real() {
            return GaussianRational::from_rational(self.eval_rational(z.re()));
        }
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &GaussianRational::from_rational(c.clone());
        }
        acc
    }
}

fn detect_parity(coeffs: &[ExactRational]) -> Parity {
    let odd_all_zero = coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero());
    let even_all_zero = coeffs.iter().step_by(2).all(|c| c.is_zero());
    if odd_all_zero {
        Parity::Even
    } else if even_all_zero {
        Parity::Odd
    } else {
        Parity::None
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.nonzero_terms() {
            for (j, b) in rhs.nonzero_terms() {
                let prod = a * b;
                coeffs[i + j] += &prod;
            }
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.nonzero_terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})t^{}", c, k)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rat(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    /// Polynomial from `(power, coeff)` pairs.
    fn poly(terms: &[(usize, &str)]) -> ExactPoly {
        let deg = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let mut coeffs = vec![ExactRational::zero(); deg + 1];
        for (k, c) in terms {
            coeffs[*k] = rat(c);
        }
        ExactPoly::from_coeffs(coeffs)
    }

    #[test]
    fn zero_poly_conventions() {
        let z = ExactPoly::zero();
        assert_eq!(z.degree(), -1);
        assert!(z.is_zero());
        assert_eq!(z.derivative(), ExactPoly::zero());
        assert_eq!(ExactPoly::from_coeffs(vec![rat("0"), rat("0")]), z);
    }

    #[test]
    fn derivative_power_rule() {
        // τ²/3 - 1/3 → 2τ/3
        let p = poly(&[(2, "1/3"), (0, "-1/3")]);
        assert_eq!(p.derivative(), poly(&[(1, "2/3")]));
        // constant → 0
        assert_eq!(
            ExactPoly::constant(rat("-1/3")).derivative(),
            ExactPoly::zero()
        );
        // τ⁵/18 - 11τ³/36 + τ/12 → 5τ⁴/18 - 11τ²/12 + 1/12
        let p = poly(&[(5, "1/18"), (3, "-11/36"), (1, "1/12")]);
        let expected = poly(&[(4, "5/18"), (2, "-11/12"), (0, "1/12")]);
        assert_eq!(p.derivative(), expected);
    }

    #[test]
    fn derivative_degree_and_parity() {
        let p = poly(&[(5, "1/18"), (3, "-11/36"), (1, "1/12")]);
        assert_eq!(p.parity(), Parity::Odd);
        let d = p.derivative();
        assert_eq!(d.degree(), p.degree() - 1);
        assert_eq!(d.parity(), Parity::Even);
    }

    #[test]
    fn eval_at_gaussian_points() {
        // C_0 = τ²/3 - 1/3
        let c0 = poly(&[(2, "1/3"), (0, "-1/3")]);
        let at = |s: &str| c0.eval_gaussian(&s.parse().unwrap());
        assert!(at("1").is_zero());
        assert_eq!(at("1/2"), "-1/4".parse().unwrap());
        // at τ = i: i² = -1 gives -1/3 - 1/3
        assert_eq!(at("0,1"), "-2/3".parse().unwrap());
    }

    #[test]
    fn eval_is_multiplicative() {
        let p = poly(&[(3, "2/7"), (1, "-1"), (0, "5/3")]);
        let q = poly(&[(4, "1/2"), (2, "3"), (0, "-2/9")]);
        let pq = &p * &q;
        for s in ["0", "1", "-1/2", "1,3/2", "2,1", "0,1", "-2/3,5"] {
            let z: GaussianRational = s.parse().unwrap();
            let lhs = pq.eval_gaussian(&z);
            let rhs = &p.eval_gaussian(&z) * &q.eval_gaussian(&z);
            assert_eq!(lhs, rhs, "at z = {}", s);
        }
    }

    #[test]
    fn mul_degree_adds() {
        let p = poly(&[(2, "1/3"), (0, "-1/3")]);
        let q = poly(&[(3, "1"), (1, "-2")]);
        assert_eq!((&p * &q).degree(), 5);
        assert_eq!((&p * &ExactPoly::zero()).degree(), -1);
    }

    #[test]
    fn parity_detection() {
        assert_eq!(poly(&[(0, "1"), (2, "1")]).parity(), Parity::Even);
        assert_eq!(poly(&[(1, "1"), (3, "1")]).parity(), Parity::Odd);
        assert_eq!(poly(&[(0, "1"), (1, "1")]).parity(), Parity::None);
        assert_eq!(ExactPoly::zero().parity(), Parity::Even);
    }

    #[test]
    fn debug_render() {
        let p = poly(&[(2, "1/3"), (0, "-1/3")]);
        assert_eq!(
            alloc::format!("{:?}", p),
            "(-1/3)t^0 + (1/3)t^2".to_string()
        );
    }
}
