//! The Chow ring `A_*(P^N) = Z[H]/(H^{N+1})`.
//!
//! A [`ChowClass`] stores coefficients on `[P^0], ..., [P^N]`; an [`HPoly`]
//! is a polynomial in the hyperplane class acting on classes by cap product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Polynomial in the hyperplane class `H`, coefficient `k` on `H^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPoly {
    coeffs: Vec<BigInt>,
}

impl HPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = HPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        HPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        HPoly::from_ints(&[1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product truncated above `H^max_degree`.
    pub fn mul_trunc(&self, other: &HPoly, max_degree: usize) -> HPoly {
        let mut out = vec![BigInt::zero(); max_degree + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(max_degree + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > max_degree {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        HPoly::new(out)
    }

    pub fn pow_trunc(&self, e: u32, max_degree: usize) -> HPoly {
        (0..e).fold(HPoly::one(), |acc, _| acc.mul_trunc(self, max_degree))
    }

    /// Power series inverse up to `H^max_degree`; the constant term must be ±1.
    pub fn inverse_trunc(&self, max_degree: usize) -> Result<HPoly> {
        let c0 = self.coeff(0);
        if c0.abs() != BigInt::one() {
            return Err(Error::InvalidArgument(
                "series inverse needs constant term ±1".into(),
            ));
        }
        let mut inv = vec![BigInt::zero(); max_degree + 1];
        inv[0] = c0.clone();
        for k in 1..=max_degree {
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += self.coeff(j) * &inv[k - j];
            }
            inv[k] = -s * &c0;
        }
        Ok(HPoly::new(inv))
    }

    /// `1 + dH`, the Chern class of `O(d)`.
    pub fn line_bundle(d: i64) -> HPoly {
        HPoly::from_ints(&[1, d])
    }

    /// `(1 + H)^{N+1}`, the Chern class of the tangent bundle of `P^N`.
    pub fn tangent_pn(n: usize) -> HPoly {
        HPoly::new((0..=n as u64 + 1).map(|k| binomial(n as u64 + 1, k)).collect())
    }

    /// `Π(1 + d_i H) / Π(1 + e_j H)` up to `H^max_degree`: the normal bundle of a
    /// complete intersection of degrees `d_list` inside one of degrees `e_list`.
    pub fn ci_normal_bundle(d_list: &[i64], e_list: &[i64], max_degree: usize) -> HPoly {
        let num = d_list
            .iter()
            .fold(HPoly::one(), |acc, &d| acc.mul_trunc(&HPoly::line_bundle(d), max_degree));
        e_list.iter().fold(num, |acc, &e| {
            let inv = HPoly::line_bundle(e)
                .inverse_trunc(max_degree)
                .expect("constant term is 1");
            acc.mul_trunc(&inv, max_degree)
        })
    }
}

/// A class `Σ a_i [P^i]` in `A_*(P^N)` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    ambient: usize,
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn zero(ambient: usize) -> Self {
        ChowClass {
            ambient,
            coeffs: vec![BigInt::zero(); ambient + 1],
        }
    }

    /// `coeffs[i]` is the coefficient of `[P^i]`; missing entries are zero.
    pub fn new(ambient: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() > ambient + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients do not fit in A_*(P^{ambient})",
                coeffs.len()
            )));
        }
        let mut c = coeffs;
        c.resize(ambient + 1, BigInt::zero());
        Ok(ChowClass { ambient, coeffs: c })
    }

    pub fn from_ints(ambient: usize, coeffs: &[i64]) -> Result<Self> {
        ChowClass::new(ambient, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `[P^i]`.
    pub fn linear(ambient: usize, i: usize) -> Self {
        let mut c = ChowClass::zero(ambient);
        c.coeffs[i] = BigInt::one();
        c
    }

    pub fn fundamental(ambient: usize) -> Self {
        ChowClass::linear(ambient, ambient)
    }

    pub fn point(ambient: usize) -> Self {
        ChowClass::linear(ambient, 0)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as machine integers, `None` on overflow.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Highest `i` with a nonzero coefficient.
    pub fn dimension(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Reads the class as `Σ a_i H^{N-i}`.
    pub fn to_h_poly(&self) -> HPoly {
        HPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `h ∩ [P^N]`, dropping powers above `H^N`.
    pub fn from_h_poly(ambient: usize, h: &HPoly) -> Self {
        let mut c = ChowClass::zero(ambient);
        for k in 0..=ambient {
            c.coeffs[ambient - k] = h.coeff(k);
        }
        c
    }

    /// Cap product `h ∩ self`.
    pub fn cap(&self, h: &HPoly) -> ChowClass {
        let mut out = ChowClass::zero(self.ambient);
        for (k, hk) in h.coeffs().iter().enumerate() {
            if hk.is_zero() {
                continue;
            }
            for i in k..=self.ambient {
                out.coeffs[i - k] += hk * &self.coeffs[i];
            }
        }
        out
    }

    /// Intersection product of two classes in the same ambient space.
    pub fn multiply(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ambient(other)?;
        Ok(self.cap(&other.to_h_poly()))
    }

    fn same_ambient(&self, other: &ChowClass) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "ambient mismatch: P^{} vs P^{}",
                self.ambient, other.ambient
            )))
        }
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ambient(other)?;
        Ok(ChowClass {
            ambient: self.ambient,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> ChowClass {
        ChowClass {
            ambient: self.ambient,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Multiplies the codimension-`c` piece by `(-1)^c`, codimension taken in `P^N`.
    pub fn dual(&self) -> ChowClass {
        let n = self.ambient;
        ChowClass {
            ambient: n,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if (n - i) % 2 == 1 { -a } else { a.clone() })
                .collect(),
        }
    }

    /// Twist by `O(d)`: the codimension-`c` piece is divided by `(1 + dH)^c`.
    pub fn tensor_by(&self, d: i64) -> ChowClass {
        let n = self.ambient;
        let mut out = ChowClass::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = (n - i) as u64;
            // (1 + dH)^{-c} = Σ_j C(c + j - 1, j) (-d)^j H^j
            for j in 0..=i {
                let coef = if c == 0 {
                    if j == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    binomial(c + j as u64 - 1, j as u64) * BigInt::from(-d).pow(j as u32)
                };
                out.coeffs[i - j] += a * coef;
            }
        }
        out
    }

    /// Keeps only the `[P^k]` term.
    pub fn component(&self, k: usize) -> ChowClass {
        let mut out = ChowClass::zero(self.ambient);
        if k <= self.ambient {
            out.coeffs[k] = self.coeffs[k].clone();
        }
        out
    }

    /// Drops every term of dimension above `r`.
    pub fn truncate_above(&self, r: usize) -> ChowClass {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(r + 1) {
            *c = BigInt::zero();
        }
        out
    }

    /// Degree of the zero-dimensional part.
    pub fn integral(&self) -> BigInt {
        self.coeffs[0].clone()
    }
}

impl fmt::Display for ChowClass {
    /// `a_r [P^r] + ... + a_0 [P^0]`, zero terms omitted, signs folded.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.ambient).rev() {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            if first {
                write!(f, "{a} [P^{i}]")?;
                first = false;
            } else if a.is_negative() {
                write!(f, " - {} [P^{i}]", a.abs())?;
            } else {
                write!(f, " + {a} [P^{i}]")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.checked_add(rhs).expect("ambient mismatch")
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self.checked_add(&-rhs).expect("ambient mismatch")
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.multiply(rhs).expect("ambient mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn class(n: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(n, c).unwrap()
    }

    /// `(1 + dH)^{-c}` by repeated long division of 1, independent of the
    /// binomial closed form used in `tensor_by`.
    fn inverse_power_by_division(d: i64, c: u32, max_degree: usize) -> Vec<BigInt> {
        let mut series = vec![BigInt::zero(); max_degree + 1];
        series[0] = BigInt::one();
        for _ in 0..c {
            // divide series by (1 + dH): q_k = s_k - d q_{k-1}
            let mut q = vec![BigInt::zero(); max_degree + 1];
            for k in 0..=max_degree {
                q[k] = series[k].clone() - if k > 0 { &q[k - 1] * d } else { BigInt::zero() };
            }
            series = q;
        }
        series
    }

    fn tensor_oracle(a: &ChowClass, d: i64) -> ChowClass {
        let n = a.ambient();
        let mut out = ChowClass::zero(n);
        for i in 0..=n {
            let piece = a.component(i);
            let inv = inverse_power_by_division(d, (n - i) as u32, n);
            out = &out + &piece.cap(&HPoly::new(inv));
        }
        out
    }

    #[test]
    fn hyperplane_action() {
        let h = HPoly::from_ints(&[0, 1]);
        assert_eq!(ChowClass::linear(3, 2).cap(&h), ChowClass::linear(3, 1));
        assert!(ChowClass::point(3).cap(&h).is_zero());
        let a = class(3, &[3, 4, 2, 0]);
        assert_eq!(a.cap(&HPoly::one()), a);
    }

    #[test]
    fn smooth_quadric_csm_expansion() {
        // (1+H)^4 · 2H/(1+2H) ∩ [P^3]
        let z = HPoly::from_ints(&[0, 2]);
        let inv = HPoly::line_bundle(2).inverse_trunc(3).unwrap();
        let div = z.mul_trunc(&inv, 3);
        let csm = ChowClass::fundamental(3).cap(&div).cap(&HPoly::tangent_pn(3));
        assert_eq!(csm, class(3, &[4, 4, 2, 0]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(ChowClass::point(3).dual(), class(3, &[-1, 0, 0, 0]));
        assert_eq!(ChowClass::fundamental(3).dual(), ChowClass::fundamental(3));
        let a = class(4, &[1, -2, 3, 5, 7]);
        assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn tensor_examples() {
        let a = class(4, &[1, -2, 3, 5, 7]);
        assert_eq!(a.tensor_by(0), a);
        assert_eq!(ChowClass::point(3).tensor_by(2), ChowClass::point(3));
    }

    #[test]
    fn components_and_degree() {
        let a = class(2, &[3, 4, 2]);
        assert_eq!(a.component(0), class(2, &[3, 0, 0]));
        assert_eq!(ChowClass::point(4).integral(), BigInt::one());
        assert_eq!(class(2, &[0, 5, 1]).integral(), BigInt::zero());
    }

    #[test]
    fn chern_constructors() {
        assert_eq!(HPoly::tangent_pn(3), HPoly::from_ints(&[1, 4, 6, 4, 1]));
        assert_eq!(HPoly::ci_normal_bundle(&[5], &[], 4), HPoly::from_ints(&[1, 5]));
        // (1+H)^4/(1+2H) capped against [P^5]
        let n = HPoly::ci_normal_bundle(&[1, 1, 1, 1], &[2], 5);
        assert_eq!(n, HPoly::from_ints(&[1, 2, 2, 0, 1, -2]));
        assert_eq!(
            ChowClass::fundamental(5).cap(&n),
            class(5, &[-2, 1, 0, 2, 2, 1])
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(class(3, &[3, 4, 2, 0]).to_string(), "2 [P^2] + 4 [P^1] + 3 [P^0]");
        assert_eq!(class(5, &[-1, 1]).to_string(), "1 [P^1] - 1 [P^0]");
        assert_eq!(ChowClass::zero(2).to_string(), "0");
        assert_eq!(class(2, &[-3]).to_string(), "-3 [P^0]");
    }

    #[test]
    fn ambient_mismatch() {
        assert!(ChowClass::point(2).multiply(&ChowClass::point(3)).is_err());
        assert!(ChowClass::point(2).checked_add(&ChowClass::point(3)).is_err());
    }

    fn small_class() -> impl Strategy<Value = ChowClass> {
        (0usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(-20i64..20, n + 1)
                .prop_map(move |c| ChowClass::from_ints(n, &c).unwrap())
        })
    }

    proptest! {
        #[test]
        fn tensor_matches_division_oracle(a in small_class(), d in -3i64..=3) {
            prop_assert_eq!(a.tensor_by(d), tensor_oracle(&a, d));
        }

        #[test]
        fn tensor_inverse(a in small_class(), d in -3i64..=3) {
            prop_assert_eq!(a.tensor_by(d).tensor_by(-d), a);
        }

        #[test]
        fn tensor_composes(a in small_class(), d in -3i64..=3, e in -3i64..=3) {
            prop_assert_eq!(a.tensor_by(d).tensor_by(e), a.tensor_by(d + e));
        }

        #[test]
        fn dual_commutes_with_tensor(a in small_class(), d in -3i64..=3) {
            prop_assert_eq!(a.tensor_by(d).dual(), a.dual().tensor_by(-d));
            prop_assert_eq!(tensor_oracle(&a, d).dual(), tensor_oracle(&a.dual(), -d));
        }

        #[test]
        fn product_laws(
            (a, b, c) in (0usize..=4).prop_flat_map(|n| {
                let v = move || proptest::collection::vec(-9i64..9, n + 1)
                    .prop_map(move |x| ChowClass::from_ints(n, &x).unwrap());
                (v(), v(), v())
            })
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let unit = ChowClass::fundamental(a.ambient());
            prop_assert_eq!(&a * &unit, a.clone());
        }

        #[test]
        fn components_reassemble(a in small_class()) {
            let n = a.ambient();
            let sum = (0..=n).fold(ChowClass::zero(n), |acc, k| &acc + &a.component(k));
            prop_assert_eq!(sum, a);
        }
    }
}
