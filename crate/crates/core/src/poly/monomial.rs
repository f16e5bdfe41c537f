use std::cmp::Ordering;
use std::fmt;

/// Largest number of ring variables a monomial can hold.
pub const MAX_VARS: usize = 24;

/// Exponent vector with cached total degree and a support bitmask.
///
/// Slots past the ring's variable count are always zero, so comparisons
/// and divisibility tests may scan the whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    mask: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.degree = 1;
        m.mask = 1 << i;
        m
    }

    /// Panics if more than `MAX_VARS` exponents are given.
    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.refresh();
        m
    }

    fn refresh(&mut self) {
        self.degree = self.exps.iter().map(|&e| e as u32).sum();
        self.mask = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i));
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Number of variables with a positive exponent.
    pub fn support_size(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn support_mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= *s;
        }
        let mut m = Monomial {
            exps,
            degree: other.degree - self.degree,
            mask: 0,
        };
        m.mask = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i));
        m
    }

    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(*o);
        }
        let mut m = Monomial {
            exps,
            degree: 0,
            mask: 0,
        };
        m.refresh();
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).min(*o);
        }
        let mut m = Monomial {
            exps,
            degree: 0,
            mask: 0,
        };
        m.refresh();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Copies exponents into a new layout: variable `i` moves to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::one();
        for (i, &target) in map.iter().enumerate() {
            m.exps[target] = self.exps[i];
        }
        m.refresh();
        m
    }

    /// Removes one factor of variable `i` if present.
    pub fn without_var(&self, i: usize) -> Option<Monomial> {
        (self.exps[i] > 0).then(|| {
            let mut m = *self;
            m.exps[i] -= 1;
            m.degree -= 1;
            if m.exps[i] == 0 {
                m.mask &= !(1 << i);
            }
            m
        })
    }

    /// Monomial with variable `i` set to exponent zero.
    pub fn erase_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.degree -= m.exps[i] as u32;
        m.exps[i] = 0;
        m.mask &= !(1 << i);
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Term orders used by the Gröbner engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order.
    #[default]
    DegRevLex,
    /// Product order: the first `block` variables are compared first
    /// (degrevlex within the block), then the rest by degrevlex.
    Elimination { block: usize },
}

#[inline]
fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[inline]
fn degrevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    da.cmp(&db)
        .then_with(|| revlex_tail(&a.exps[lo..hi], &b.exps[lo..hi]))
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Elimination { block } => degrevlex_range(a, b, 0, block)
                .then_with(|| degrevlex_range(a, b, block, MAX_VARS)),
        }
    }
}

/// All monomials of degree `e` in `nvars` variables, in descending lex order.
pub fn monomials_of_degree(nvars: usize, e: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            cur[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k as u16;
            rec(nvars, i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if e == 0 { vec![Monomial::one()] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, 0, e, &mut vec![0; nvars], &mut out);
    out
}
