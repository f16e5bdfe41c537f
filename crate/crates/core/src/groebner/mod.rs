//! Buchberger's algorithm, normal forms and elimination.
//!
//! The engine accepts inhomogeneous input (saturation and intersection go
//! through inhomogeneous auxiliary ideals) and selects critical pairs by the
//! sugar strategy. Pairs are pruned with the product criterion and the chain
//! criterion in Gebauer-Möller form.

mod hilbert;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub use hilbert::{hilbert_numerator, proj_dim_degree, HilbertData};

/// A reduced Gröbner basis: monic generators, no leading monomial divides a
/// term of another generator, sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().filter_map(|g| g.leading_monomial()).collect()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.in_order(self.order());
        let refs: Vec<&Polynomial> = self.gens.iter().collect();
        reduce_full(&f, &refs)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Normal form of `f` with respect to `basis`. The result has no term
/// divisible by a leading monomial of the basis and differs from `f` by an
/// element of the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(f)
}

/// Fully reduces `f` by monic polynomials sharing its ring.
fn reduce_full(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let mut done: Vec<(Monomial, u64)> = Vec::new();
    let mut cur = f.clone();
    while let Some((m, c)) = cur.leading_term() {
        match lms.iter().position(|lm| lm.divides(&m)) {
            Some(k) => {
                let q = lms[k].quotient_of(&m);
                cur = cur.add_scaled_term(field.neg(c), &q, basis[k]);
            }
            None => {
                // peel off terms until one is reducible
                let terms = cur.into_terms();
                let mut split = terms.len();
                for (idx, (tm, _)) in terms.iter().enumerate() {
                    if lms.iter().any(|lm| lm.divides(tm)) {
                        split = idx;
                        break;
                    }
                }
                let mut terms = terms;
                let rest = terms.split_off(split);
                done.extend(terms);
                cur = Polynomial::from_sorted(ring, rest);
            }
        }
    }
    Polynomial::from_sorted(ring, done)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: Ring,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    unit: bool,
}

impl Engine {
    fn new(ring: Ring) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            lms: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            unit: false,
        }
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce_full(f, &self.active_refs())
    }

    /// Adds a reduced nonzero polynomial and updates the pair set.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let h = h.monic();
        if h.is_constant() {
            self.unit = true;
            return;
        }
        let hlm = h.leading_monomial().unwrap();
        let hidx = self.polys.len();

        let mut candidates: Vec<(usize, Monomial)> = (0..self.polys.len())
            .filter(|&g| self.active[g])
            .map(|g| (g, hlm.lcm(&self.lms[g])))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = self.lms[g1].is_coprime(&hlm);
            let dominated = candidates.iter().any(|(_, l2)| l2.divides(&l1))
                || kept.iter().any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        kept.retain(|(g, _)| !self.lms[*g].is_coprime(&hlm));

        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && lms[p.i].lcm(&hlm) != p.lcm
                && lms[p.j].lcm(&hlm) != p.lcm)
        });

        for (g, l) in kept {
            let s = (self.sugar[g] + l.degree() - self.lms[g].degree())
                .max(sugar + l.degree() - hlm.degree());
            self.pairs.push(Pair {
                i: g,
                j: hidx,
                lcm: l,
                sugar: s,
            });
        }

        for g in 0..self.polys.len() {
            if self.active[g] && hlm.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.lms.push(hlm);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let field = self.ring.field();
        let qi = self.lms[p.i].quotient_of(&p.lcm);
        let qj = self.lms[p.j].quotient_of(&p.lcm);
        let a = self.polys[p.i].mul_term(&qi, 1);
        a.add_scaled_term(field.neg(1), &qj, &self.polys[p.j])
    }

    fn run(&mut self) {
        while !self.unit {
            let Some(pair) = self.next_pair() else { break };
            let s = self.s_polynomial(&pair);
            let h = self.reduce(&s);
            if !h.is_zero() {
                self.insert(h, pair.sugar);
            }
        }
    }

    fn finish(self) -> GroebnerBasis {
        if self.unit {
            return GroebnerBasis {
                ring: self.ring,
                gens: vec![Polynomial::one(self.ring)],
            };
        }
        let minimal: Vec<&Polynomial> = self.active_refs();
        let mut gens: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let others: Vec<&Polynomial> = minimal
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != k)
                    .map(|(_, &o)| o)
                    .collect();
                // leading term stays: no other leading monomial divides it
                reduce_full(g, &others).monic()
            })
            .collect();
        let order = self.ring.order();
        gens.sort_by(|a, b| {
            order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap())
        });
        GroebnerBasis {
            ring: self.ring,
            gens,
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `order`.
///
/// All generators must share variable count and field; they are re-sorted
/// for `order` as needed. An empty list yields the zero ideal.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::EmptyGenerators);
    };
    let ring = first.ring().with_order(order);
    buchberger_in(ring, gens)
}

/// Like [`buchberger`] but with an explicit ring, so the zero ideal is allowed.
pub fn buchberger_in(ring: Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut input = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring().nvars() != ring.nvars() || g.field() != ring.field() {
            return Err(Error::RingMismatch(
                "generators must share one polynomial ring".into(),
            ));
        }
        if !g.is_zero() {
            input.push(g.in_order(ring.order()));
        }
    }
    let order = ring.order();
    input.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()))
    });

    let mut engine = Engine::new(ring);
    for g in input {
        if engine.unit {
            break;
        }
        let sugar = g.total_degree().unwrap();
        let h = engine.reduce(&g);
        if !h.is_zero() {
            engine.insert(h, sugar);
        }
    }
    engine.run();
    Ok(engine.finish())
}

/// Degrevlex basis in `ring` (which may be the zero ideal).
pub fn degrevlex_basis(ring: Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_in(ring.with_order(MonomialOrder::DegRevLex), gens)
}

/// Generators of `I ∩ k[x_k, ..., x_{n-1}]`, returned in a degrevlex ring on
/// the trailing `n - k` variables.
pub fn eliminate(ring: Ring, gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "cannot eliminate {k} of {n} variables"
        )));
    }
    let gb = buchberger_in(ring.with_order(MonomialOrder::Elimination { block: k }), gens)?;
    let target = Ring::new(n - k, ring.field())?;
    let block_mask: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let out = gb
        .generators()
        .iter()
        .filter(|g| g.leading_monomial().unwrap().support_mask() & block_mask == 0)
        .map(|g| {
            Polynomial::from_terms(
                target,
                g.terms()
                    .iter()
                    .map(|(m, c)| (Monomial::from_exponents(&m.exponents(n)[k..]), *c)),
            )
        })
        .collect();
    Ok(out)
}

/// Checks the Buchberger criterion: every S-polynomial of basis pairs reduces to zero.
pub fn is_groebner_basis(basis: &GroebnerBasis) -> bool {
    let gens = basis.generators();
    let field = basis.ring().field();
    let refs: Vec<&Polynomial> = gens.iter().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (mi, mj) = (gens[i].leading_monomial().unwrap(), gens[j].leading_monomial().unwrap());
            let l = mi.lcm(&mj);
            let a = gens[i].mul_term(&mi.quotient_of(&l), 1);
            let s = a.add_scaled_term(field.neg(1), &mj.quotient_of(&l), &gens[j]);
            if !reduce_full(&s, &refs).is_zero() {
                return false;
            }
        }
    }
    true
}
