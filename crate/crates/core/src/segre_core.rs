//! Segre classes `s(X, Y)` pushed forward to `P^N`.
//!
//! Each level `j` slices `Y` by `j` shared random hyperplanes and counts the
//! residual points of `dim Y_j` random members of the linear system cutting
//! out `X`. That count is `λ_j = deg(pr_j) · deg(pr_j(Y_j - X_j))`, and
//! `δ_j = d^{n-j} deg(Y_j) - λ_j` determines the Segre coefficients through a
//! unitriangular integer system.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chow::{binomial, ChowClass, HPoly};
use crate::error::{Error, Result};
use crate::groebner::degrevlex_basis;
use crate::ideal::{pad_to_degree, saturate_by_ideal, saturate_by_poly, ProjectiveScheme};
use crate::poly::Polynomial;

/// Knobs for the randomized pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegreConfig {
    pub seed: u64,
    /// Saturate residuals by the whole ideal of `X` rather than one random member.
    pub paranoid: bool,
    /// Fresh attempts per level before a genericity failure is reported.
    pub max_retries: usize,
}

pub const DEFAULT_SEED: u64 = 0x5e9_2e_c1a55;

impl Default for SegreConfig {
    fn default() -> Self {
        SegreConfig {
            seed: DEFAULT_SEED,
            paranoid: false,
            max_retries: 5,
        }
    }
}

impl SegreConfig {
    pub fn with_seed(seed: u64) -> Self {
        SegreConfig {
            seed,
            ..SegreConfig::default()
        }
    }
}

/// Right-hand sides of the triangular system together with their ingredients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    /// Common degree of the padded generators.
    pub d: u32,
    /// `dim Y`.
    pub n: usize,
    /// `dim X`.
    pub r: usize,
    /// `N`.
    pub ambient: usize,
    pub deltas: Vec<BigInt>,
    pub lambdas: Vec<u64>,
    /// `deg Y_j` per level.
    pub degrees: Vec<u64>,
    /// Seed of the generator used at each level.
    pub seeds: Vec<u64>,
}

impl DeltaSequence {
    fn check(&self) {
        for j in 0..=self.r {
            let expected = BigInt::from(self.d).pow((self.n - j) as u32) * BigInt::from(self.degrees[j])
                - BigInt::from(self.lambdas[j]);
            assert_eq!(self.deltas[j], expected, "delta {j} out of sync");
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreResult {
    pub class: ChowClass,
    /// `None` when `X` is empty and the class is zero without computation.
    pub deltas: Option<DeltaSequence>,
    pub prime: u64,
    /// Seeds of every pipeline run that was executed.
    pub seeds: Vec<u64>,
}

/// `X` and `Y` after normalisation: `X` replaced by `X + Y`, generators not
/// needed modulo `I_Y` dropped, the rest padded to a common degree.
#[derive(Debug, Clone)]
pub struct SegreProblem {
    pub x: ProjectiveScheme,
    pub y: ProjectiveScheme,
    /// Generators of `X` modulo `I_Y`, before padding.
    pub x_generators: Vec<Polynomial>,
    /// The equi-degree linear system with base locus `X` in `Y`.
    pub system: Vec<Polynomial>,
    pub d: u32,
    pub n: usize,
    pub r: usize,
}

impl SegreProblem {
    /// `Ok(None)` when `X` is empty.
    pub fn new(x: &ProjectiveScheme, y: &ProjectiveScheme) -> Result<Option<SegreProblem>> {
        if x.ring() != y.ring() {
            return Err(Error::RingMismatch("X and Y live in different ambient spaces".into()));
        }
        let ring = y.ring();
        if y.is_empty() {
            return Err(Error::InvalidArgument("Y is empty".into()));
        }
        let x = x.intersect(y)?;
        if x.is_empty() {
            return Ok(None);
        }
        let n = y.dimension() as usize;
        if x.dimension() as usize == n {
            return Err(Error::SegreUndefined);
        }

        let mut candidates: Vec<Polynomial> = x.generators().to_vec();
        candidates.sort_by_key(|g| g.total_degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in candidates {
            let mut basis_gens = y.generators().to_vec();
            basis_gens.extend_from_slice(&kept);
            if !degrevlex_basis(ring, &basis_gens)?.contains(&g) {
                kept.push(g);
            }
        }
        let d = kept.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0);
        let system = pad_to_degree(&kept, d)?;
        let r = x.dimension() as usize;
        Ok(Some(SegreProblem {
            x,
            y: y.clone(),
            x_generators: kept,
            system,
            d,
            n,
            r,
        }))
    }
}

/// `λ = deg(pr) · deg(image)` for the map given by `system` on `y_j`.
///
/// `x_generators` are only used in paranoid mode, where the residual is
/// saturated by all of them.
pub fn projective_lambda<R: Rng + ?Sized>(
    y_j: &ProjectiveScheme,
    system: &[Polynomial],
    x_generators: &[Polynomial],
    config: &SegreConfig,
    rng: &mut R,
) -> Result<u64> {
    let n_j = y_j.dimension();
    if n_j < 0 {
        return Ok(0);
    }
    residual_count(y_j, system, n_j as usize, x_generators, config, rng, "residual")
}

fn residual_count<R: Rng + ?Sized>(
    base: &ProjectiveScheme,
    system: &[Polynomial],
    count: usize,
    x_generators: &[Polynomial],
    config: &SegreConfig,
    rng: &mut R,
    stage: &str,
) -> Result<u64> {
    let ring = base.ring();
    let mut last_dim = 0;
    for _ in 0..config.max_retries.max(1) {
        let mut j = base.generators().to_vec();
        for _ in 0..count {
            j.push(Polynomial::random_combination(system, rng)?);
        }
        let sat = if config.paranoid {
            saturate_by_ideal(ring, &j, x_generators)?
        } else {
            let g = Polynomial::random_combination(system, rng)?;
            saturate_by_poly(ring, &j, &g)?
        };
        let residual = ProjectiveScheme::new(ring, sat)?;
        match residual.dimension() {
            d if d < 0 => return Ok(0),
            0 => return Ok(residual.degree()),
            d => last_dim = d,
        }
    }
    Err(Error::genericity(
        stage,
        format!(
            "residual of dimension {last_dim} after {} attempts",
            config.max_retries.max(1)
        ),
    ))
}

/// Runs every level with one seed.
pub fn delta_sequence(problem: &SegreProblem, config: &SegreConfig, seed: u64) -> Result<DeltaSequence> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let ring = problem.y.ring();
    let mut y_j = problem.y.clone();
    let mut ds = DeltaSequence {
        d: problem.d,
        n: problem.n,
        r: problem.r,
        ambient: problem.y.ambient_dim(),
        deltas: Vec::new(),
        lambdas: Vec::new(),
        degrees: Vec::new(),
        seeds: Vec::new(),
    };
    for j in 0..=problem.r {
        let level_seed = master.next_u64();
        let mut rng = ChaCha8Rng::seed_from_u64(level_seed);
        if j > 0 {
            let h = Polynomial::random_form(ring, 1, &mut rng);
            y_j = y_j.with_generators(&[h])?;
        }
        let lambda = projective_lambda(&y_j, &problem.system, &problem.x_generators, config, &mut rng)
            .map_err(|e| match e {
                Error::GenericityFailure { detail, .. } => {
                    Error::genericity(format!("level {j}"), detail)
                }
                other => other,
            })?;
        let deg = y_j.degree();
        let delta = BigInt::from(problem.d).pow((problem.n - j) as u32) * BigInt::from(deg)
            - BigInt::from(lambda);
        ds.deltas.push(delta);
        ds.lambdas.push(lambda);
        ds.degrees.push(deg);
        ds.seeds.push(level_seed);
    }
    ds.check();
    Ok(ds)
}

/// Row `j` holds `C(n - j, i - j) d^{i - j}` in column `i ≥ j`.
pub fn system_matrix(n: usize, d: u32, r: usize) -> Vec<Vec<BigInt>> {
    (0..=r)
        .map(|j| {
            (0..=r)
                .map(|i| {
                    if i < j {
                        BigInt::zero()
                    } else {
                        binomial((n - j) as u64, (i - j) as u64) * BigInt::from(d).pow((i - j) as u32)
                    }
                })
                .collect()
        })
        .collect()
}

/// `A · s` for the system matrix, i.e. the δ values a class would produce.
pub fn apply_system(n: usize, d: u32, s: &[BigInt]) -> Vec<BigInt> {
    let r = s.len() - 1;
    system_matrix(n, d, r)
        .iter()
        .map(|row| row.iter().zip(s).map(|(a, b)| a * b).sum())
        .collect()
}

/// Solves the triangular system by back-substitution and checks the answer
/// against the closed-form inverse.
pub fn solve_segre(ds: &DeltaSequence) -> ChowClass {
    let (n, r) = (ds.n, ds.r);
    let a = system_matrix(n, ds.d, r);
    let mut s = vec![BigInt::zero(); r + 1];
    for j in (0..=r).rev() {
        let mut acc = ds.deltas[j].clone();
        for i in j + 1..=r {
            acc -= &a[j][i] * &s[i];
        }
        s[j] = acc;
    }
    let neg_d = BigInt::from(-(ds.d as i64));
    for (i, si) in s.iter().enumerate() {
        let closed: BigInt = (i..=r)
            .map(|j| binomial((n - i) as u64, (j - i) as u64) * neg_d.pow((j - i) as u32) * &ds.deltas[j])
            .sum();
        assert_eq!(&closed, si, "closed form disagrees with back-substitution at s_{i}");
    }
    ChowClass::new(ds.ambient, s).expect("r ≤ N")
}

fn run_pipeline(problem: &SegreProblem, config: &SegreConfig, seed: u64) -> Result<(ChowClass, DeltaSequence)> {
    let ds = delta_sequence(problem, config, seed)?;
    let class = solve_segre(&ds);
    Ok((class, ds))
}

/// Seeds for the verification runs, derived from the configured seed.
pub fn run_seeds(seed: u64) -> [u64; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [rng.next_u64(), rng.next_u64(), rng.next_u64()]
}

/// `s(X, Y)` pushed forward to `P^N`.
///
/// The pipeline runs twice in parallel with independent seeds; on
/// disagreement a third run decides by majority.
pub fn segre_class(x: &ProjectiveScheme, y: &ProjectiveScheme, config: &SegreConfig) -> Result<SegreResult> {
    let prime = y.ring().field().modulus();
    let Some(problem) = SegreProblem::new(x, y)? else {
        return Ok(SegreResult {
            class: ChowClass::zero(y.ambient_dim()),
            deltas: None,
            prime,
            seeds: Vec::new(),
        });
    };
    let seeds = run_seeds(config.seed);
    let (a, b) = std::thread::scope(|sc| {
        let ha = sc.spawn(|| run_pipeline(&problem, config, seeds[0]));
        let hb = sc.spawn(|| run_pipeline(&problem, config, seeds[1]));
        (ha.join().expect("pipeline panicked"), hb.join().expect("pipeline panicked"))
    });
    let (a, b) = (a?, b?);
    if a.0 == b.0 {
        return Ok(SegreResult {
            class: a.0,
            deltas: Some(a.1),
            prime,
            seeds: seeds[..2].to_vec(),
        });
    }
    let c = run_pipeline(&problem, config, seeds[2])?;
    let winner = if c.0 == a.0 {
        a
    } else if c.0 == b.0 {
        b
    } else {
        return Err(Error::RandomizationInconsistency);
    };
    Ok(SegreResult {
        class: winner.0,
        deltas: Some(winner.1),
        prime,
        seeds: seeds.to_vec(),
    })
}

/// `s(X, P^N)` from the projective degrees of the map given by `X`'s
/// linear system: `[P^N] - (1 + dH)^{-1} ∩ (G ⊗ O(d))` with `G = Σ a_i [P^i]`,
/// where `a_i` counts residual points of `N - i` members of the system
/// cut with `i` random hyperplanes.
pub fn aluffi_segre_pn_oracle(x: &ProjectiveScheme, config: &SegreConfig) -> Result<ChowClass> {
    let ring = x.ring();
    let n = x.ambient_dim();
    let pn = ProjectiveScheme::whole_space(ring);
    let Some(problem) = SegreProblem::new(x, &pn)? else {
        return Ok(ChowClass::zero(n));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xa1f_f1);
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let hyperplanes: Vec<Polynomial> = (0..i).map(|_| Polynomial::random_form(ring, 1, &mut rng)).collect();
        let base = ProjectiveScheme::new(ring, hyperplanes)?;
        let count = residual_count(
            &base,
            &problem.system,
            n - i,
            &problem.x_generators,
            config,
            &mut rng,
            "projective degree",
        )?;
        a.push(BigInt::from(count));
    }
    let g = ChowClass::new(n, a)?;
    let twisted = g.tensor_by(problem.d as i64);
    let inv = HPoly::line_bundle(problem.d as i64).inverse_trunc(n)?;
    let s = &ChowClass::fundamental(n) - &twisted.cap(&inv);
    Ok(s.truncate_above(problem.r))
}

/// `Σ_{i≥0} (-1)^i m^{i+1} [P^{N-1-i}]`, the class of a degree-`m` hypersurface.
pub fn hypersurface_segre(ambient: usize, m: u32) -> ChowClass {
    let coeffs: Vec<BigInt> = (0..=ambient)
        .map(|dim| {
            if dim == ambient {
                return BigInt::zero();
            }
            let i = ambient - 1 - dim;
            let v = BigInt::from(m).pow(i as u32 + 1);
            if i % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    ChowClass::new(ambient, coeffs).expect("sized")
}

/// `(1 + H)^{-(N - r)} ∩ [P^r]`, the class of a linear `P^r`.
pub fn linear_subspace_segre(ambient: usize, r: usize) -> ChowClass {
    let codim = (ambient - r) as u64;
    let coeffs: Vec<BigInt> = (0..=ambient)
        .map(|dim| {
            if dim > r {
                return BigInt::zero();
            }
            let i = (r - dim) as u64;
            let v = if codim == 0 {
                if i == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial(codim - 1 + i, i)
            };
            if i % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    ChowClass::new(ambient, coeffs).expect("sized")
}
