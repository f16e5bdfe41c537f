//! Hilbert series numerators of monomial ideals, and the projective
//! dimension and degree they determine.

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring};

use super::degrevlex_basis;

/// `H_{R/I}(t) = numerator(t) / (1 - t)^{nvars}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `Q(t)`, lowest degree first. Empty for the unit ideal.
    pub numerator: Vec<i64>,
    /// `-1` for the empty scheme.
    pub projective_dimension: i64,
    /// Zero exactly when the scheme is empty.
    pub degree: u64,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        let mut q = trim(numerator);
        if q.is_empty() {
            return HilbertData {
                numerator: q,
                projective_dimension: -1,
                degree: 0,
            };
        }
        let full = q.clone();
        let mut e = 0usize;
        while q.iter().sum::<i64>() == 0 {
            // Q = (1 - t) R with R_k = Q_0 + ... + Q_k
            let mut acc = 0;
            let r: Vec<i64> = q[..q.len() - 1]
                .iter()
                .map(|c| {
                    acc += c;
                    acc
                })
                .collect();
            q = trim(r);
            e += 1;
        }
        let dim = nvars as i64 - e as i64 - 1;
        let value: i64 = q.iter().sum();
        HilbertData {
            numerator: full,
            projective_dimension: dim,
            degree: if dim < 0 { 0 } else { value.unsigned_abs() },
        }
    }

    pub fn is_empty(&self) -> bool {
        self.projective_dimension < 0
    }
}

fn trim(mut q: Vec<i64>) -> Vec<i64> {
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `Q(t)` of the Hilbert series of `k[x_0..x_{n-1}] / <gens>`.
///
/// Uses the pivot recursion `Q(I) = Q(I + <p>) + t^{deg p} Q(I : p)` with
/// `p` a power of the variable occurring in the most minimal generators.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec())))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    let mut counts = [0usize; crate::poly::MAX_VARS];
    let mut union = 0u32;
    let mut coprime = true;
    for m in &gens {
        let mask = m.support_mask();
        if union & mask != 0 {
            coprime = false;
        }
        union |= mask;
        for (i, c) in counts.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *c += 1;
            }
        }
    }
    if coprime {
        return gens
            .iter()
            .fold(vec![1], |acc, m| poly_mul(&acc, &one_minus_t_pow(m.degree())));
    }
    let pivot_var = (0..counts.len()).max_by_key(|&i| (counts[i], usize::MAX - i)).unwrap();
    // smallest positive exponent keeps both branches strictly simpler
    let e = gens
        .iter()
        .map(|m| m.exponent(pivot_var))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut exps = [0u16; crate::poly::MAX_VARS];
    exps[pivot_var] = e;
    let pivot = Monomial::from_exponents(&exps);

    let mut with_pivot: Vec<Monomial> = gens.iter().filter(|m| !pivot.divides(m)).copied().collect();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let keep = m.exponent(pivot_var).saturating_sub(e);
            let mut x = m.erase_var(pivot_var);
            for _ in 0..keep {
                x = x.mul(&Monomial::var(pivot_var));
            }
            x
        })
        .collect();

    let mut q = numerator_rec(minimalize(with_pivot));
    let tail = numerator_rec(minimalize(colon));
    poly_add_shifted(&mut q, &tail, e as usize);
    q
}

/// Projective dimension and degree of `V(gens) ⊂ P^{n-1}` from the leading
/// monomials of a degrevlex basis. Generators must be homogeneous.
pub fn proj_dim_degree(ring: Ring, gens: &[Polynomial]) -> Result<HilbertData> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous);
    }
    let gb = degrevlex_basis(ring, gens)?;
    Ok(HilbertData::from_numerator(
        hilbert_numerator(&gb.leading_monomials()),
        ring.nvars(),
    ))
}
