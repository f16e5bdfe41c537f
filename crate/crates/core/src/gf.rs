//! Prime field arithmetic and seeded prime generation.
//!
//! Moduli are kept below 2^32 so that every product of two reduced
//! representatives fits in a `u64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Smallest modulus accepted for geometric computations.
pub const MIN_GEOMETRIC_PRIME: u64 = 1 << 20;

/// Default size of randomly chosen primes.
pub const DEFAULT_PRIME_BITS: u32 = 31;

/// The field `Z/pZ` for a prime `p < 2^32`. Elements are plain `u64`
/// values in `[0, p)`; all methods return canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidModulus(p, "modulus must be below 2^32"));
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p, "not prime"));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero(self.p));
        }
        // extended Euclid on signed values
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.from_i64(t0))
    }

    pub fn element(self, value: u64) -> Fp {
        Fp {
            value: value % self.p,
            field: self,
        }
    }

    /// Uniform random element.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    /// Uniform random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of a prime field, carrying its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    field: PrimeField,
}

impl Fp {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Fp> {
        Ok(Fp {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    pub fn pow(self, exp: u64) -> Fp {
        Fp {
            value: self.field.pow(self.value, exp),
            field: self.field,
        }
    }

    fn check(self, other: Fp) {
        assert_eq!(self.field, other.field, "field mismatch");
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Prime modulus plus the master seed every randomized step derives from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldConfig {
    field: PrimeField,
    seed: u64,
}

impl FieldConfig {
    /// Uses an explicit prime, which must exceed 2^20.
    pub fn new(p: u64, seed: u64) -> Result<Self> {
        if p <= MIN_GEOMETRIC_PRIME {
            return Err(Error::InvalidModulus(
                p,
                "geometric computations need a prime above 2^20",
            ));
        }
        Ok(FieldConfig {
            field: PrimeField::new(p)?,
            seed,
        })
    }

    /// Draws a 31-bit prime from the seed.
    pub fn from_seed(seed: u64) -> Self {
        let p = random_prime(DEFAULT_PRIME_BITS, seed);
        FieldConfig {
            field: PrimeField { p },
            seed,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns a prime with exactly `bits` bits, deterministic in `seed`.
///
/// The geometric pipeline uses 20..=31 bits; callers may ask for up to 62
/// (and as few as 3) for arithmetic-only uses.
pub fn random_prime(bits: u32, seed: u64) -> u64 {
    assert!((3..=62).contains(&bits), "bits must lie in 3..=62");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = 1u64 << (bits - 1);
    let hi = 1u64 << bits;
    loop {
        let candidate = rng.gen_range(lo..hi) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_field_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.pow(2, 6), 1);
        for a in 0..7 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.add(a, (7 - a) % 7), 0);
        }
        assert_eq!(f.inv(0), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn element_wrapper() {
        let f = PrimeField::new(7).unwrap();
        let a = f.element(3);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!((a - a).value(), 0);
        assert_eq!((-a + a).value(), 0);
        assert_eq!(f.element(2).pow(6).value(), 1);
    }

    #[test]
    fn five_bit_primes() {
        for seed in 0..50 {
            let p = random_prime(5, seed);
            assert!([17, 19, 23, 29, 31].contains(&p), "{p}");
        }
    }

    #[test]
    fn random_prime_is_reproducible() {
        let a = random_prime(31, 1);
        assert_eq!(a, random_prime(31, 1));
        assert!(is_prime(a));
        assert_eq!(64 - a.leading_zeros(), 31);
        assert_eq!(random_prime(15, 99), random_prime(15, 99));
        let big = random_prime(62, 3);
        assert!(is_prime(big) && big >> 61 == 1);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97
            ]
        );
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(4_294_967_311).is_err());
        assert!(FieldConfig::new(101, 0).is_err());
        assert!(FieldConfig::new(2_147_483_647, 0).is_ok());
        let cfg = FieldConfig::from_seed(5);
        assert!(cfg.prime() > MIN_GEOMETRIC_PRIME && is_prime(cfg.prime()));
    }

    #[test]
    fn random_inverse_pairs() {
        let f = PrimeField::new(random_prime(31, 7)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let a = f.random(&mut rng);
            let b = f.random_nonzero(&mut rng);
            assert_eq!(f.mul(f.mul(a, b), f.inv(b).unwrap()), a);
            if a != 0 {
                assert_eq!(f.pow(a, f.modulus() - 1), 1);
            }
        }
    }
}
