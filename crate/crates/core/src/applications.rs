//! Characteristic classes, polar classes and intersection products built on
//! Segre classes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chow::{binomial, ChowClass, HPoly};
use crate::error::{Error, Result};
use crate::groebner::degrevlex_basis;
use crate::ideal::{generic_projection_image, rank_locus, singularity_subscheme, ProjectiveScheme};
use crate::poly::Polynomial;
use crate::segre_core::{segre_class, SegreConfig, SegreResult};

/// A computed value with the Segre class run it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WithSegre<T> {
    pub value: T,
    pub segre: SegreResult,
}

fn hypersurface_degree(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial is not a hypersurface".into()));
    }
    f.homogeneous_degree().ok_or(Error::Inhomogeneous)
}

/// `c(T P^N) ∩ ( [Z]/(1+Z) + tensor_by(dual(twist ∩ s), d) )`.
fn chern_formula(ambient: usize, d: u32, s: &ChowClass, twist: &HPoly) -> ChowClass {
    let d = d as i64;
    let divisor = HPoly::from_ints(&[0, d]).mul_trunc(&HPoly::line_bundle(d).inverse_trunc(ambient).expect("unit"), ambient);
    let z_part = ChowClass::fundamental(ambient).cap(&divisor);
    let sing_part = s.cap(twist).dual().tensor_by(d);
    (&z_part + &sing_part).cap(&HPoly::tangent_pn(ambient))
}

/// Chern-Schwartz-MacPherson class of the hypersurface `V(f) ⊂ P^N`.
pub fn csm_hypersurface(f: &Polynomial, config: &SegreConfig) -> Result<WithSegre<ChowClass>> {
    let d = hypersurface_degree(f)?;
    let j = singularity_subscheme(f)?;
    let pn = ProjectiveScheme::whole_space(f.ring());
    let segre = segre_class(&j, &pn, config)?;
    let n = pn.ambient_dim();
    let value = chern_formula(n, d, &segre.class, &HPoly::line_bundle(d as i64));
    Ok(WithSegre { value, segre })
}

/// Chern-Mather class of the hypersurface `V(f) ⊂ P^N`.
pub fn chern_mather_hypersurface(f: &Polynomial, config: &SegreConfig) -> Result<WithSegre<ChowClass>> {
    let d = hypersurface_degree(f)?;
    let j = singularity_subscheme(f)?;
    let z = ProjectiveScheme::new(f.ring(), vec![f.clone()])?;
    let segre = segre_class(&j, &z, config)?;
    let value = chern_formula(z.ambient_dim(), d, &segre.class, &HPoly::one());
    Ok(WithSegre { value, segre })
}

/// Polar degrees `ϱ_0, ..., ϱ_n` of an `n`-dimensional variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarClasses {
    pub n: usize,
    pub rho: Vec<BigInt>,
}

impl PolarClasses {
    pub fn from_ints(rho: &[i64]) -> Self {
        PolarClasses {
            n: rho.len() - 1,
            rho: rho.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Euclidean distance degree, assuming the conormal variety avoids the diagonal.
    pub fn ed_degree(&self) -> BigInt {
        self.rho.iter().sum()
    }
}

/// `ϱ_k = d(d-1)^k - Σ_{i<k} C(k, i) (d-1)^i s_{n-k+i}` for a degree-`d`
/// hypersurface of dimension `n` with `s(J, Z) = Σ s_i [P^i]`.
pub fn polar_from_segre(d: u32, n: usize, s: &ChowClass) -> PolarClasses {
    let d = BigInt::from(d);
    let dm1 = &d - BigInt::from(1);
    let rho = (0..=n)
        .map(|k| {
            let mut v = &d * dm1.pow(k as u32);
            for i in 0..k {
                v -= binomial(k as u64, i as u64) * dm1.pow(i as u32) * s.coeff(n - k + i);
            }
            v
        })
        .collect();
    PolarClasses { n, rho }
}

/// The single equation of a hypersurface scheme.
fn defining_equation(z: &ProjectiveScheme) -> Result<Polynomial> {
    let gb = degrevlex_basis(z.ring(), z.generators())?;
    match gb.generators() {
        [f] => Ok(f.clone()),
        _ => Err(Error::InvalidArgument(
            "hypersurface ideal is not principal".into(),
        )),
    }
}

/// Polar classes of a reduced scheme; higher codimension is handled by a
/// generic projection onto a hypersurface first.
pub fn polar_classes(z: &ProjectiveScheme, config: &SegreConfig) -> Result<WithSegre<PolarClasses>> {
    let dim = z.dimension();
    if dim < 0 {
        return Err(Error::InvalidArgument("the empty scheme has no polar classes".into()));
    }
    if dim as usize == z.ambient_dim() {
        return Err(Error::InvalidArgument("Z is all of P^N".into()));
    }
    let hyper = if dim as usize + 1 == z.ambient_dim() {
        z.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x907a_4);
        generic_projection_image(z, &mut rng, config.max_retries)?
    };
    let f = defining_equation(&hyper)?;
    let d = hypersurface_degree(&f)?;
    let j = singularity_subscheme(&f)?;
    let segre = segre_class(&j, &hyper, config)?;
    let value = polar_from_segre(d, dim as usize, &segre.class);
    Ok(WithSegre { value, segre })
}

/// `Σ_k ϱ_k`.
pub fn ed_degree(z: &ProjectiveScheme, config: &SegreConfig) -> Result<WithSegre<BigInt>> {
    let p = polar_classes(z, config)?;
    Ok(WithSegre {
        value: p.value.ed_degree(),
        segre: p.segre,
    })
}

/// `out_k = Σ_{i≤k} (-1)^i C(n + 1 - i, k - i) in_i`; an involution.
fn piene(n: usize, input: &[BigInt]) -> Vec<BigInt> {
    (0..input.len())
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let v = binomial((n + 1 - i) as u64, (k - i) as u64) * &input[i];
                    if i % 2 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .sum()
        })
        .collect()
}

/// Chern-Mather class of an `n`-dimensional variety from its polar classes;
/// `ς_k` lands on `[P^{n-k}]`.
pub fn polar_to_mather(polar: &PolarClasses, ambient: usize) -> Result<ChowClass> {
    let n = polar.n;
    if n > ambient {
        return Err(Error::InvalidArgument(format!("dimension {n} exceeds P^{ambient}")));
    }
    let sigma = piene(n, &polar.rho);
    let mut coeffs = vec![BigInt::zero(); ambient + 1];
    for (k, s) in sigma.into_iter().enumerate() {
        coeffs[n - k] = s;
    }
    ChowClass::new(ambient, coeffs)
}

/// Polar classes from the Chern-Mather class of an `n`-dimensional variety.
pub fn mather_to_polar(mather: &ChowClass, n: usize) -> Result<PolarClasses> {
    if n > mather.ambient() {
        return Err(Error::InvalidArgument(format!(
            "dimension {n} exceeds P^{}",
            mather.ambient()
        )));
    }
    if mather.dimension().is_some_and(|top| top > n) {
        return Err(Error::InvalidArgument(format!("class has terms above dimension {n}")));
    }
    let sigma: Vec<BigInt> = (0..=n).map(|k| mather.coeff(n - k).clone()).collect();
    Ok(PolarClasses {
        n,
        rho: piene(n, &sigma),
    })
}

/// `Π_{i<k} C(m + i, k) / C(k + i, k)`: the degree of the locus of `m × m`
/// matrices of corank at least `k`.
pub fn tau_degree(m: usize, k: usize) -> BigInt {
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for i in 0..k {
        num *= binomial((m + i) as u64, k as u64);
        den *= binomial((k + i) as u64, k as u64);
    }
    num / den
}

/// Degree of the closure of the projection of the corank-`k` locus of
/// `m × m` matrices from the linear centre `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyDegree {
    pub degree: BigInt,
    /// `∫ (1+H)^{m²-k²-1} ∩ s(L_S ∩ τ_k, τ_k)`.
    pub correction: BigInt,
    pub segre: SegreResult,
}

pub fn degeneracy_projection_degree(
    center: &ProjectiveScheme,
    m: usize,
    k: usize,
    config: &SegreConfig,
) -> Result<DegeneracyDegree> {
    if k == 0 || k > m {
        return Err(Error::InvalidArgument(format!("corank {k} out of range for size {m}")));
    }
    if center.ring().nvars() != m * m {
        return Err(Error::RingMismatch(format!(
            "{m}x{m} matrices need {} coordinates, ring has {}",
            m * m,
            center.ring().nvars()
        )));
    }
    let tau = rank_locus(center.ring().field(), m, m - k)?;
    let segre = segre_class(center, &tau, config)?;
    let e = (m * m - k * k - 1) as u32;
    let correction = segre.class.cap(&HPoly::line_bundle(1).pow_trunc(e, segre.class.ambient())).integral();
    Ok(DegeneracyDegree {
        degree: tau_degree(m, k) - &correction,
        correction,
        segre,
    })
}

/// Pushforward of `X ·_Y V` for complete intersections `X ⊂ Y ⊂ P^N`, where
/// `X` is cut out by equations of degrees `d_list` and `Y` by `e_list`.
pub fn intersection_product(
    x: &ProjectiveScheme,
    v: &ProjectiveScheme,
    y: &ProjectiveScheme,
    d_list: &[i64],
    e_list: &[i64],
    config: &SegreConfig,
) -> Result<WithSegre<ChowClass>> {
    let segre = segre_class(x, v, config)?;
    let (k, r, n) = (v.dimension(), x.dimension(), y.dimension());
    let ambient = y.ambient_dim();
    let target = k + r - n;
    let value = if target < 0 || r < 0 {
        ChowClass::zero(ambient)
    } else {
        let normal = HPoly::ci_normal_bundle(d_list, e_list, ambient);
        segre.class.cap(&normal).component(target as usize)
    };
    Ok(WithSegre { value, segre })
}

/// Sign-agnostic view of a class, indexed by dimension like the class itself.
pub fn magnitudes(c: &ChowClass) -> Vec<BigInt> {
    c.coeffs().iter().map(|a| a.abs()).collect()
}
