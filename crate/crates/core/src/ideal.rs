//! Scheme-level ideal operations: sums, intersections, colons, saturation,
//! singular loci, padding, generic slicing and projection, determinantal ideals.

use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::groebner::{degrevlex_basis, eliminate, proj_dim_degree, HilbertData};
use crate::poly::{monomials_of_degree, MonomialOrder, Polynomial, Ring};

/// A closed subscheme of `P^N` given by homogeneous generators.
#[derive(Debug, Clone)]
pub struct ProjectiveScheme {
    ring: Ring,
    gens: Vec<Polynomial>,
    hilbert: OnceLock<HilbertData>,
}

impl PartialEq for ProjectiveScheme {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl ProjectiveScheme {
    /// Zero generators are dropped. Every generator must be homogeneous and
    /// live in `ring`.
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let ring = ring.with_order(MonomialOrder::DegRevLex);
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring().nvars() != ring.nvars() || g.field() != ring.field() {
                return Err(Error::RingMismatch(format!(
                    "generator in {} variables, scheme ring has {}",
                    g.ring().nvars(),
                    ring.nvars()
                )));
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            if !g.is_zero() {
                out.push(g.in_order(MonomialOrder::DegRevLex));
            }
        }
        Ok(ProjectiveScheme {
            ring,
            gens: out,
            hilbert: OnceLock::new(),
        })
    }

    /// All of `P^N`.
    pub fn whole_space(ring: Ring) -> Self {
        ProjectiveScheme::new(ring, Vec::new()).expect("no generators")
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// `N` for a scheme in `P^N`.
    pub fn ambient_dim(&self) -> usize {
        self.ring.nvars() - 1
    }

    pub fn hilbert(&self) -> &HilbertData {
        self.hilbert.get_or_init(|| {
            proj_dim_degree(self.ring, &self.gens).expect("generators are homogeneous")
        })
    }

    /// Projective dimension, `-1` when empty.
    pub fn dimension(&self) -> i64 {
        self.hilbert().projective_dimension
    }

    pub fn degree(&self) -> u64 {
        self.hilbert().degree
    }

    pub fn is_empty(&self) -> bool {
        self.hilbert().is_empty()
    }

    /// Largest generator degree, zero for `P^N` itself.
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0)
    }

    /// The scheme cut out by these generators and `extra`.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        ProjectiveScheme::new(self.ring, gens)
    }

    /// Scheme-theoretic intersection (sum of ideals).
    pub fn intersect(&self, other: &ProjectiveScheme) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("schemes in different ambient spaces".into()));
        }
        self.with_generators(&other.gens)
    }

    /// True when `f` lies in the ideal (not its saturation).
    pub fn ideal_contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(degrevlex_basis(self.ring, &self.gens)?.contains(&f.in_order(MonomialOrder::DegRevLex)))
    }
}

fn check_ring(ring: Ring, gens: &[Polynomial]) -> Result<()> {
    if gens
        .iter()
        .any(|g| g.ring().nvars() != ring.nvars() || g.field() != ring.field())
    {
        return Err(Error::RingMismatch("generators outside the ring".into()));
    }
    Ok(())
}

/// Ring with one extra variable in front, and the map shifting the old ones.
fn tagged(ring: Ring) -> Result<(Ring, Vec<usize>)> {
    let ext = Ring::new(ring.nvars() + 1, ring.field())?;
    Ok((ext, (1..=ring.nvars()).collect()))
}

/// `I + K`.
pub fn ideal_sum(ring: Ring, i: &[Polynomial], k: &[Polynomial]) -> Result<Vec<Polynomial>> {
    check_ring(ring, i)?;
    check_ring(ring, k)?;
    Ok(i.iter().chain(k).filter(|g| !g.is_zero()).cloned().collect())
}

/// `I ∩ K`, by eliminating `t` from `t·I + (1 - t)·K`.
pub fn intersect_ideals(ring: Ring, i: &[Polynomial], k: &[Polynomial]) -> Result<Vec<Polynomial>> {
    check_ring(ring, i)?;
    check_ring(ring, k)?;
    let (ext, map) = tagged(ring)?;
    let t = Polynomial::var(ext, 0);
    let one_minus_t = &Polynomial::one(ext) - &t;
    let mut gens = Vec::with_capacity(i.len() + k.len());
    for f in i {
        gens.push(&t * &f.embed(ext, &map)?);
    }
    for g in k {
        gens.push(&one_minus_t * &g.embed(ext, &map)?);
    }
    eliminate(ext, &gens, 1)
}

/// `I : f`.
pub fn colon_by_poly(ring: Ring, i: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero polynomial".into()));
    }
    let f = f.in_order(MonomialOrder::DegRevLex);
    intersect_ideals(ring, i, std::slice::from_ref(&f))?
        .iter()
        .map(|g| {
            g.div_exact(&f)
                .ok_or_else(|| Error::InvalidArgument("intersection generator not divisible".into()))
        })
        .collect()
}

/// `I : f^∞` via the Rabinowitsch trick: `(I + <1 - t f>) ∩ k[x]`.
pub fn saturate_by_poly(ring: Ring, i: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>> {
    check_ring(ring, i)?;
    if f.is_zero() {
        return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
    }
    let (ext, map) = tagged(ring)?;
    let t = Polynomial::var(ext, 0);
    let mut gens: Vec<Polynomial> = i.iter().map(|g| g.embed(ext, &map)).collect::<Result<_>>()?;
    gens.push(&Polynomial::one(ext) - &(&t * &f.embed(ext, &map)?));
    eliminate(ext, &gens, 1)
}

/// `I : f^∞` by repeated colons until the reduced basis stops changing.
pub fn saturate_by_poly_iterated(ring: Ring, i: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut current = degrevlex_basis(ring, i)?;
    loop {
        let next = degrevlex_basis(ring, &colon_by_poly(ring, current.generators(), f)?)?;
        if next.generators() == current.generators() {
            return Ok(current.into_generators());
        }
        current = next;
    }
}

/// `I : K^∞ = ∩_g I : g^∞` over the nonzero generators `g` of `K`.
pub fn saturate_by_ideal(ring: Ring, i: &[Polynomial], k: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut parts = k.iter().filter(|g| !g.is_zero());
    let first = parts
        .next()
        .ok_or_else(|| Error::InvalidArgument("saturation by the zero ideal".into()))?;
    let mut acc = saturate_by_poly(ring, i, first)?;
    for g in parts {
        let s = saturate_by_poly(ring, i, g)?;
        acc = intersect_ideals(ring, &acc, &s)?;
    }
    Ok(acc)
}

/// Equality of ideals by comparing reduced degrevlex bases.
pub fn ideals_equal(ring: Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let ga = degrevlex_basis(ring, a)?;
    let gb = degrevlex_basis(ring, b)?;
    Ok(ga.generators() == gb.generators())
}

/// `V(f, ∂f/∂x_0, ..., ∂f/∂x_N)`.
pub fn singularity_subscheme(f: &Polynomial) -> Result<ProjectiveScheme> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("singular locus of the zero polynomial".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let mut gens = f.partial_derivatives();
    gens.push(f.clone());
    ProjectiveScheme::new(f.ring(), gens)
}

/// Replaces each generator of degree below `d` by its products with all
/// monomials of the complementary degree, so everything has degree `d`.
pub fn pad_to_degree(gens: &[Polynomial], d: u32) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in gens {
        let Some(e) = g.total_degree() else { continue };
        if e > d {
            return Err(Error::InvalidArgument(format!(
                "generator of degree {e} exceeds padding degree {d}"
            )));
        }
        if e == d {
            out.push(g.clone());
            continue;
        }
        for m in monomials_of_degree(g.ring().nvars(), d - e) {
            out.push(g.mul_term(&m, 1));
        }
    }
    Ok(out)
}

/// Cuts every scheme with one shared random hyperplane.
pub fn generic_hyperplane_slice<R: Rng + ?Sized>(
    schemes: &[ProjectiveScheme],
    rng: &mut R,
) -> Result<Vec<ProjectiveScheme>> {
    let first = schemes.first().ok_or(Error::EmptyGenerators)?;
    if schemes.iter().any(|s| s.ring != first.ring) {
        return Err(Error::RingMismatch("schemes in different ambient spaces".into()));
    }
    let h = Polynomial::random_form(first.ring, 1, rng);
    schemes.iter().map(|s| s.with_generators(std::slice::from_ref(&h))).collect()
}

/// Closure of the image of `Z` under projection from a random linear centre
/// onto `P^{dim Z + 1}`. Hypersurfaces are returned unchanged.
pub fn generic_projection_image<R: Rng + ?Sized>(
    z: &ProjectiveScheme,
    rng: &mut R,
    max_retries: usize,
) -> Result<ProjectiveScheme> {
    let dim = z.dimension();
    if dim < 0 {
        return Err(Error::InvalidArgument("cannot project the empty scheme".into()));
    }
    let n = z.ambient_dim();
    let target = dim as usize + 1;
    if target >= n {
        return Ok(z.clone());
    }
    let field = z.ring.field();
    let nx = n + 1;
    let ext = Ring::new(nx + target + 1, field)?;
    let xmap: Vec<usize> = (0..nx).collect();
    let small = Ring::new(nx, field)?;
    for _ in 0..max_retries.max(1) {
        let mut gens: Vec<Polynomial> = z
            .gens
            .iter()
            .map(|g| g.embed(ext, &xmap))
            .collect::<Result<_>>()?;
        for i in 0..=target {
            let l = Polynomial::random_form(small, 1, rng).embed(ext, &xmap)?;
            gens.push(&Polynomial::var(ext, nx + i) - &l);
        }
        let image = eliminate(ext, &gens, nx)?;
        if image.len() == 1 {
            let ring = Ring::new(target + 1, field)?;
            return ProjectiveScheme::new(ring, image);
        }
    }
    Err(Error::genericity(
        "generic projection",
        format!("image in P^{target} was not a hypersurface after {max_retries} attempts"),
    ))
}

fn determinant(m: &[Vec<&Polynomial>]) -> Polynomial {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let ring = m[0][0].ring();
    let mut acc = Polynomial::zero(ring);
    for col in 0..k {
        let minor: Vec<Vec<&Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| *p).collect())
            .collect();
        let term = m[0][col] * &determinant(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `size × size` minors of a rectangular matrix, zero minors dropped.
pub fn minors_ideal(entries: &[Vec<Polynomial>], size: usize) -> Result<Vec<Polynomial>> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, |r| r.len());
    if size == 0 || size > rows.min(cols) || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidArgument(format!(
            "cannot take {size}-minors of a {rows}x{cols} matrix"
        )));
    }
    let mut out = Vec::new();
    for rs in subsets(rows, size) {
        for cs in subsets(cols, size) {
            let sub: Vec<Vec<&Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| &entries[r][c]).collect())
                .collect();
            let det = determinant(&sub);
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    Ok(out)
}

/// Generic `m × m` matrix of coordinates on `P^{m²-1}`, row-major.
pub fn generic_matrix(field: PrimeField, m: usize) -> Result<(Ring, Vec<Vec<Polynomial>>)> {
    let ring = Ring::new(m * m, field)?;
    let entries = (0..m)
        .map(|i| (0..m).map(|j| Polynomial::var(ring, i * m + j)).collect())
        .collect();
    Ok((ring, entries))
}

/// Matrices of rank at most `r`: the `(r + 1)`-minors of the generic `m × m` matrix.
pub fn rank_locus(field: PrimeField, m: usize, r: usize) -> Result<ProjectiveScheme> {
    if r >= m {
        return Err(Error::InvalidArgument(format!("rank {r} is not below the size {m}")));
    }
    let (ring, entries) = generic_matrix(field, m)?;
    ProjectiveScheme::new(ring, minors_ideal(&entries, r + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_groebner_basis;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup(n: usize) -> (Ring, Vec<Polynomial>) {
        let field = PrimeField::new(32_003).unwrap();
        let r = Ring::new(n, field).unwrap();
        let v = (0..n).map(|i| Polynomial::var(r, i)).collect();
        (r, v)
    }

    fn eq(r: Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
        ideals_equal(r, a, b).unwrap()
    }

    #[test]
    fn intersections() {
        let (r, v) = setup(3);
        let (x, y) = (&v[0], &v[1]);
        let xy = x * y;
        assert!(eq(r, &intersect_ideals(r, std::slice::from_ref(x), std::slice::from_ref(y)).unwrap(), std::slice::from_ref(&xy)));
        let i = vec![x * x, xy.clone()];
        assert!(eq(r, &intersect_ideals(r, &i, &i).unwrap(), &i));
        assert!(eq(r, &intersect_ideals(r, &i, &[Polynomial::one(r)]).unwrap(), &i));
        assert!(intersect_ideals(r, &i, &[]).unwrap().is_empty());
        assert_eq!(ideal_sum(r, std::slice::from_ref(x), std::slice::from_ref(y)).unwrap().len(), 2);
    }

    #[test]
    fn colon_and_saturation() {
        let (r, v) = setup(3);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let x2 = x * x;
        assert!(eq(r, &colon_by_poly(r, std::slice::from_ref(&x2), x).unwrap(), std::slice::from_ref(x)));
        assert!(eq(r, &saturate_by_poly(r, std::slice::from_ref(&x2), x).unwrap(), &[Polynomial::one(r)]));
        assert!(eq(r, &saturate_by_poly(r, std::slice::from_ref(x), y).unwrap(), std::slice::from_ref(x)));

        let i = vec![x * y, x * z];
        assert!(eq(r, &saturate_by_poly(r, &i, y).unwrap(), std::slice::from_ref(x)));
        assert!(eq(r, &saturate_by_poly(r, &i, x).unwrap(), &[y.clone(), z.clone()]));
        let by_ideal = saturate_by_ideal(r, &i, &[y.clone(), z.clone()]).unwrap();
        assert!(eq(r, &by_ideal, std::slice::from_ref(x)));
        assert!(eq(r, &saturate_by_ideal(r, &i, &[Polynomial::one(r)]).unwrap(), &i));
        assert!(saturate_by_ideal(r, &i, &[]).is_err());
        assert!(colon_by_poly(r, &i, &Polynomial::zero(r)).is_err());
    }

    #[test]
    fn saturation_routes_agree() {
        let (r, v) = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        // cone with an embedded point at the vertex
        let cone = &(&v[0] * &v[1]) - &(&v[2] * &v[2]);
        let i: Vec<Polynomial> = v.iter().map(|x| &cone * x).collect();
        for _ in 0..3 {
            let f = Polynomial::random_form(r, 1, &mut rng);
            let a = saturate_by_poly(r, &i, &f).unwrap();
            let b = saturate_by_poly_iterated(r, &i, &f).unwrap();
            assert!(eq(r, &a, &b));
            assert!(eq(r, &a, std::slice::from_ref(&cone)));
        }
    }

    #[test]
    fn saturation_properties() {
        let (r, v) = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let i = vec![&v[0] * &v[1], &(&v[0] * &v[2]) * &v[2], &v[3] * &v[0]];
        let k = vec![v[1].clone(), v[2].clone()];
        let s = saturate_by_ideal(r, &i, &k).unwrap();
        let ss = saturate_by_ideal(r, &s, &k).unwrap();
        assert!(eq(r, &s, &ss));
        let gb = degrevlex_basis(r, &s).unwrap();
        assert!(is_groebner_basis(&gb));
        for g in &i {
            assert!(gb.contains(g));
        }
        // f^m g ∈ I for every g in the saturation
        let f = Polynomial::random_form(r, 1, &mut rng);
        let sat = saturate_by_poly(r, &i, &f).unwrap();
        let base = degrevlex_basis(r, &i).unwrap();
        for g in &sat {
            assert!((0..6).any(|m| base.contains(&(&f.pow(m) * g))));
        }
    }

    #[test]
    fn singular_loci() {
        let (r, v) = setup(4);
        let cone = &(&v[0] * &v[1]) - &(&v[2] * &v[2]);
        let j = singularity_subscheme(&cone).unwrap();
        assert!(eq(r, j.generators(), &v[..3]));
        assert_eq!((j.dimension(), j.degree()), (0, 1));

        let smooth = v.iter().fold(Polynomial::zero(r), |acc, x| &acc + &(x * x));
        assert!(singularity_subscheme(&smooth).unwrap().is_empty());

        // x^3 - x y^2 - x z^2 + 2 y z t - x t^2
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        let cayley = &(&(&(&x.pow(3) - &(x * &y.pow(2))) - &(x * &z.pow(2))) + &(&(y * z) * t).scale(2))
            - &(x * &t.pow(2));
        let j = singularity_subscheme(&cayley).unwrap();
        assert_eq!(j.dimension(), 0);
    }

    #[test]
    fn padding() {
        let (r, v) = setup(4);
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        assert_eq!(pad_to_degree(&[x.clone(), z.clone()], 1).unwrap(), vec![x.clone(), z.clone()]);
        assert_eq!(
            pad_to_degree(std::slice::from_ref(x), 2).unwrap(),
            vec![x * x, x * y, x * z, x * t]
        );
        let q = &(x * y) - &(z * z);
        assert_eq!(
            pad_to_degree(&[q.clone(), x.clone()], 2).unwrap(),
            vec![q.clone(), x * x, x * y, x * z, x * t]
        );
        assert!(pad_to_degree(std::slice::from_ref(&q), 1).is_err());

        // same scheme: saturations by the irrelevant ideal agree
        let orig = vec![q.clone(), x.clone()];
        let padded = pad_to_degree(&orig, 3).unwrap();
        let a = saturate_by_ideal(r, &orig, &v).unwrap();
        let b = saturate_by_ideal(r, &padded, &v).unwrap();
        assert!(eq(r, &a, &b));
        assert!(!eq(r, &orig, &padded));
    }

    #[test]
    fn slicing() {
        let (r, v) = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cone = ProjectiveScheme::new(r, vec![&(&v[0] * &v[1]) - &(&v[2] * &v[2])]).unwrap();
        let line = ProjectiveScheme::new(r, vec![v[0].clone(), v[2].clone()]).unwrap();
        let sliced = generic_hyperplane_slice(&[cone.clone(), line.clone()], &mut rng).unwrap();
        assert_eq!((sliced[0].dimension(), sliced[0].degree()), (1, 2));
        assert_eq!((sliced[1].dimension(), sliced[1].degree()), (0, 1));
        assert_eq!(sliced[0].generators().last(), sliced[1].generators().last());

        let lin: Vec<Polynomial> = (0..2).map(|_| Polynomial::random_form(r, 1, &mut rng)).collect();
        let s = ProjectiveScheme::new(r, lin).unwrap();
        assert_eq!((s.dimension(), s.degree()), (1, 1));
    }

    #[test]
    fn projections() {
        let (r, v) = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        let twisted = ProjectiveScheme::new(
            r,
            vec![&(x * z) - &(y * y), &(x * t) - &(y * z), &(y * t) - &(z * z)],
        )
        .unwrap();
        let img = generic_projection_image(&twisted, &mut rng, 5).unwrap();
        assert_eq!(img.ambient_dim(), 2);
        assert_eq!(img.generators().len(), 1);
        assert_eq!(img.generators()[0].total_degree(), Some(3));

        let line = ProjectiveScheme::new(r, vec![x.clone(), z.clone()]).unwrap();
        let img = generic_projection_image(&line, &mut rng, 5).unwrap();
        assert_eq!((img.ambient_dim(), img.degree()), (2, 1));

        let conic = ProjectiveScheme::new(r, vec![&(x * y) - &(z * z), t.clone()]).unwrap();
        let img = generic_projection_image(&conic, &mut rng, 5).unwrap();
        assert_eq!((img.dimension(), img.degree()), (1, 2));
    }

    #[test]
    fn determinantal() {
        let field = PrimeField::new(32_003).unwrap();
        let det3 = rank_locus(field, 3, 2).unwrap();
        assert_eq!(det3.generators().len(), 1);
        assert_eq!((det3.dimension(), det3.degree()), (7, 3));

        let det2 = rank_locus(field, 2, 1).unwrap();
        let r = det2.ring();
        let v: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(r, i)).collect();
        assert!(eq(r, det2.generators(), &[&(&v[0] * &v[3]) - &(&v[1] * &v[2])]));

        let (_, m) = generic_matrix(field, 3).unwrap();
        assert_eq!(minors_ideal(&m, 1).unwrap().len(), 9);
        assert!(minors_ideal(&m, 4).is_err());

        // rank one 3x3 matrices: the Segre embedding of P^2 x P^2
        let segre = rank_locus(field, 3, 1).unwrap();
        assert_eq!((segre.dimension(), segre.degree()), (4, 6));
    }

    #[test]
    fn scheme_validation() {
        let (r, v) = setup(3);
        let bad = &v[0] + &Polynomial::one(r);
        assert_eq!(ProjectiveScheme::new(r, vec![bad]), Err(Error::Inhomogeneous));
        let (r2, _) = setup(4);
        assert!(ProjectiveScheme::new(r2, vec![v[0].clone()]).is_err());
        let whole = ProjectiveScheme::whole_space(r);
        assert_eq!((whole.dimension(), whole.degree(), whole.max_degree()), (2, 1, 0));
    }
}
