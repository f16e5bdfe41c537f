//! Sparse multivariate polynomials over a prime field.

mod monomial;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::PrimeField;

pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};

/// Variable count, coefficient field and the term order polynomials are kept sorted in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: PrimeField,
    order: MonomialOrder,
}

impl Ring {
    /// A degrevlex ring in `nvars` variables.
    pub fn new(nvars: usize, field: PrimeField) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: nvars,
                max: MAX_VARS,
            });
        }
        Ok(Ring {
            nvars,
            field,
            order: MonomialOrder::DegRevLex,
        })
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        Ring { order, ..self }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Ambient projective dimension when the ring is read as the coordinate ring of P^N.
    pub fn ambient_dim(&self) -> usize {
        self.nvars - 1
    }

    fn check(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

/// A polynomial: nonzero terms sorted strictly descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: u64) -> Self {
        Polynomial::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: Ring) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars, "variable index out of range");
        Polynomial::term(ring, Monomial::var(i), 1)
    }

    pub fn term(ring: Ring, mon: Monomial, c: u64) -> Self {
        let c = ring.field.reduce(c);
        let terms = if c == 0 { vec![] } else { vec![(mon, c)] };
        Polynomial { ring, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let f = ring.field;
        let mut v: Vec<(Monomial, u64)> = terms.into_iter().map(|(m, c)| (m, f.reduce(c))).collect();
        let order = ring.order;
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring, terms: out }
    }

    /// Trusts that `terms` are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted(ring: Ring, terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0 && t.1 < ring.field.modulus()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, u64)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(Monomial, u64)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.terms.first().map_or(0, |t| t.1)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// Common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].0.degree())
        }
    }

    /// Coefficient of `mon`.
    pub fn coeff(&self, mon: &Monomial) -> u64 {
        let order = self.ring.order;
        self.terms
            .binary_search_by(|(m, _)| order.cmp(mon, m))
            .map_or(0, |i| self.terms[i].1)
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.ring.field;
        let c = f.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    /// Multiplies by `c * mon`; order is preserved by monomial multiplication.
    pub fn mul_term(&self, mon: &Monomial, c: u64) -> Polynomial {
        let f = self.ring.field;
        let c = f.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|&(m, a)| (m.mul(mon), f.mul(a, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, 1)) => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// `self + c * mon * g`, merged in one pass.
    pub(crate) fn add_scaled_term(&self, c: u64, mon: &Monomial, g: &Polynomial) -> Polynomial {
        let f = self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|&(m, v)| (m.mul(mon), f.mul(v, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ma, ca)), Some(&(mb, cb))) => match order.cmp(&ma, &mb) {
                    Ordering::Greater => {
                        out.push((ma, ca));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push((mb, cb));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = f.add(ca, cb);
                        if s != 0 {
                            out.push((ma, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&t), None) => {
                    out.push(t);
                    a.next();
                }
                (None, Some(&t)) => {
                    out.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.add_scaled_term(1, &Monomial::one(), other))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let m1 = self.ring.field.neg(1);
        Ok(self.add_scaled_term(m1, &Monomial::one(), other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.ring);
        for &(m, c) in &small.terms {
            acc = acc.add_scaled_term(c, &m, large);
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field;
        Polynomial::from_terms(
            self.ring,
            self.terms.iter().filter_map(|&(m, c)| {
                let e = m.exponent(i) as u64;
                m.without_var(i).map(|q| (q, f.mul(c, f.reduce(e))))
            }),
        )
    }

    /// One partial derivative per ring variable.
    pub fn partial_derivatives(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars).map(|i| self.derivative(i)).collect()
    }

    /// Re-sorts the terms for a different term order.
    pub fn in_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.ring.order {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    pub fn embed(&self, target: Ring, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.ring.nvars || map.iter().any(|&j| j >= target.nvars) {
            return Err(Error::RingMismatch("bad variable map".into()));
        }
        if target.field != self.ring.field {
            return Err(Error::RingMismatch("field differs".into()));
        }
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|&(m, c)| (m.remap(map), c)),
        ))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let (glm, glc) = g.leading_term()?;
        let f = self.ring.field;
        let ginv = f.inv(glc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = m.div(&glm)?;
            let qc = f.mul(c, ginv);
            quot.push((q, qc));
            rem = rem.add_scaled_term(f.neg(qc), &q, g);
        }
        Some(Polynomial::from_terms(self.ring, quot))
    }

    /// Evaluates at a point given by field values.
    pub fn evaluate(&self, point: &[u64]) -> u64 {
        let f = self.ring.field;
        self.terms.iter().fold(0, |acc, (m, c)| {
            let v = (0..self.ring.nvars).fold(*c, |v, i| f.mul(v, f.pow(point[i], m.exponent(i) as u64)));
            f.add(acc, v)
        })
    }

    /// Dense homogeneous form of the given degree with uniform random coefficients.
    pub fn random_form<R: Rng + ?Sized>(ring: Ring, degree: u32, rng: &mut R) -> Polynomial {
        let f = ring.field;
        Polynomial::from_terms(
            ring,
            monomials_of_degree(ring.nvars, degree)
                .into_iter()
                .map(|m| (m, f.random(rng))),
        )
    }

    /// `Σ λ_j g_j` with random nonzero `λ_j`; the generators must share one degree.
    pub fn random_combination<R: Rng + ?Sized>(gens: &[Polynomial], rng: &mut R) -> Result<Polynomial> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let deg = first.total_degree();
        if gens.iter().any(|g| g.ring != first.ring) {
            return Err(Error::RingMismatch("generators live in different rings".into()));
        }
        if gens.iter().any(|g| !g.is_zero() && g.total_degree() != deg) {
            return Err(Error::InvalidArgument(
                "random_combination needs equi-degree generators".into(),
            ));
        }
        let f = first.ring.field;
        let mut acc = Polynomial::zero(first.ring);
        for g in gens {
            acc = acc.add_scaled_term(f.random_nonzero(rng), &Monomial::one(), g);
        }
        Ok(acc)
    }

    /// Formats with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.ring.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let p = self.poly.ring.field.modulus();
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            // print coefficients in the symmetric range so small negatives read naturally
            let signed = if *c > p / 2 { *c as i64 - p as i64 } else { *c as i64 };
            let (neg, mag) = (signed < 0, signed.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = (0..self.poly.ring.nvars)
                .filter(|&i| m.exponent(i) > 0)
                .map(|i| match m.exponent(i) {
                    1 => self.names[i].clone(),
                    e => format!("{}^{}", self.names[i], e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; use [`Polynomial::checked_add`] to get an error instead.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::new(1_000_003).unwrap()).unwrap()
    }

    fn vars(r: Ring) -> Vec<Polynomial> {
        (0..r.nvars()).map(|i| Polynomial::var(r, i)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(2);
        let v = vars(r);
        let (x, y) = (&v[0], &v[1]);
        let prod = &(x + y) * &(x - y);
        let expected = &(x * x) - &(y * y);
        assert_eq!(prod, expected);
        assert!((x * &Polynomial::zero(r)).is_zero());
    }

    #[test]
    fn associativity_and_degree() {
        let r = ring(3);
        let v = vars(r);
        let left = &(&v[0] * &v[1]) * &v[2];
        let right = &v[0] * &(&v[1] * &v[2]);
        assert_eq!(left, right);
        assert_eq!(left.homogeneous_degree(), Some(3));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(ring(2), 0);
        let b = Polynomial::var(ring(3), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch(_))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn partials_of_cone() {
        let r = ring(4);
        let v = vars(r);
        let f = &(&v[0] * &v[1]) - &(&v[2] * &v[2]);
        let d = f.partial_derivatives();
        assert_eq!(d[0], v[1]);
        assert_eq!(d[1], v[0]);
        assert_eq!(d[2], v[2].scale(r.field().from_i64(-2)));
        assert!(d[3].is_zero());

        let cube = v[0].pow(3);
        assert_eq!(cube.derivative(0), v[0].pow(2).scale(3));
        assert!(Polynomial::constant(r, 5).partial_derivatives().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn random_forms_are_reproducible() {
        let r = ring(4);
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        let f = Polynomial::random_form(r, 1, &mut a);
        assert_eq!(f, Polynomial::random_form(r, 1, &mut b));
        assert!(f.len() <= 4 && f.homogeneous_degree() == Some(1));

        let v = vars(r);
        let g = Polynomial::random_combination(&[v[0].clone(), v[2].clone()], &mut a).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.coeff(&Monomial::var(1)), 0);
        assert!(Polynomial::random_combination(&[], &mut a).is_err());
        let mixed = [v[0].clone(), &v[0] * &v[1]];
        assert!(Polynomial::random_combination(&mixed, &mut a).is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring(3);
        let v = vars(r);
        let a = &(&v[0] + &v[1]) * &v[2];
        let b = &(&v[0] - &v[2]) * &v[1];
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &v[0]).div_exact(&a), None);
    }

    #[test]
    fn display_uses_names() {
        let r = ring(2);
        let v = vars(r);
        let names = vec!["x".to_string(), "y".to_string()];
        let f = &(&v[0] * &v[1]) - &v[1].pow(2).scale(3);
        assert_eq!(f.display(&names).to_string(), "x*y - 3*y^2");
    }

    #[test]
    fn euler_relation_on_random_forms() {
        let r = ring(4);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for deg in 1..5u32 {
            let f = Polynomial::random_form(r, deg, &mut rng);
            let v = vars(r);
            let mut lhs = Polynomial::zero(r);
            for (i, d) in f.partial_derivatives().iter().enumerate() {
                lhs = &lhs + &(&v[i] * d);
            }
            assert_eq!(lhs, f.scale(deg as u64));
        }
    }
}
