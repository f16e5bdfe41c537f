use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use segre::applications::{mather_to_polar, polar_to_mather, PolarClasses};
use segre::chow::ChowClass;
use segre::cli::parse_input;
use segre::gf::PrimeField;
use segre::ideal::{saturate_by_poly, saturate_by_poly_iterated, ideals_equal, ProjectiveScheme};
use segre::poly::{Polynomial, Ring};
use segre::segre_core::{apply_system, hypersurface_segre, segre_class, SegreConfig};

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Homogeneous polynomial text of degree `deg` from (coefficient, exponent) picks.
fn poly_text(deg: u32, terms: &[(i32, [u8; 3])]) -> String {
    let mut parts = Vec::new();
    for (c, e) in terms {
        let mut exps = [0u32; 4];
        let mut left = deg;
        for (k, &pick) in e.iter().enumerate() {
            let take = (pick as u32) % (left + 1);
            exps[k] = take;
            left -= take;
        }
        exps[3] = left;
        let mon: Vec<String> = exps
            .iter()
            .zip(NAMES)
            .filter(|(&a, _)| a > 0)
            .map(|(&a, v)| if a == 1 { v.to_string() } else { format!("{v}^{a}") })
            .collect();
        let mon = if mon.is_empty() { "1".to_string() } else { mon.join("*") };
        parts.push(format!("({c})*{mon}"));
    }
    parts.join(" + ")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_print_round_trip(
        deg in 1u32..4,
        terms in prop::collection::vec((-30i32..30, prop::array::uniform3(0u8..4)), 1..6),
    ) {
        let text = format!("field 32003\nring x, y, z, w\nideal A = {}, x*y\n", poly_text(deg, &terms));
        let doc = parse_input(&text).unwrap();
        let again = parse_input(&doc.to_text()).unwrap();
        prop_assert_eq!(doc, again);
    }

    #[test]
    fn piene_conversion_is_an_involution(rho in prop::collection::vec(-1000i64..1000, 1..7)) {
        let p = PolarClasses::from_ints(&rho);
        let m = polar_to_mather(&p, 7).unwrap();
        prop_assert_eq!(mather_to_polar(&m, p.n).unwrap(), p);
    }

    #[test]
    fn segre_system_round_trips(n in 1usize..8, d in 1u32..5, s in prop::collection::vec(-500i64..500, 1..8)) {
        let r = (s.len() - 1).min(n);
        let s: Vec<BigInt> = s[..=r].iter().map(|&v| BigInt::from(v)).collect();
        let deltas = apply_system(n, d, &s);
        // the system is unitriangular, so zero right-hand side forces zero
        if deltas.iter().all(|x| *x == BigInt::from(0)) {
            prop_assert!(s.iter().all(|x| *x == BigInt::from(0)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn saturation_routes_agree(seed in any::<u64>()) {
        let ring = Ring::new(4, PrimeField::new(32003).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Polynomial::random_form(ring, 1, &mut rng);
        let g = Polynomial::random_form(ring, 2, &mut rng);
        let h = Polynomial::random_form(ring, 1, &mut rng);
        // ⟨f·g, f·h⟩ has an embedded piece along V(f)
        let i = vec![f.checked_mul(&g).unwrap(), f.checked_mul(&h).unwrap()];
        let a = saturate_by_poly(ring, &i, &f).unwrap();
        let b = saturate_by_poly_iterated(ring, &i, &f).unwrap();
        prop_assert!(ideals_equal(ring, &a, &b).unwrap());
        prop_assert!(ideals_equal(ring, &a, &[g, h]).unwrap());
    }

    #[test]
    fn hypersurfaces_match_closed_form(seed in any::<u64>(), n in 1usize..5, m in 1u32..4) {
        let ring = Ring::new(n + 1, PrimeField::new(1_000_003).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = ProjectiveScheme::new(ring, vec![Polynomial::random_form(ring, m, &mut rng)]).unwrap();
        let got = segre_class(&x, &ProjectiveScheme::whole_space(ring), &SegreConfig::with_seed(seed)).unwrap();
        prop_assert_eq!(got.class, hypersurface_segre(n, m));
    }
}

#[test]
fn classes_from_parsed_input_use_the_document_field() {
    let doc = parse_input("field 65537\nring x, y, z\nideal P = x, y\n").unwrap();
    let ring = Ring::new(3, PrimeField::new(doc.field.unwrap()).unwrap()).unwrap();
    let gens = doc.ideal("P").unwrap().iter().map(|g| g.to_polynomial(ring)).collect();
    let p = ProjectiveScheme::new(ring, gens).unwrap();
    let s = segre_class(&p, &ProjectiveScheme::whole_space(ring), &SegreConfig::default()).unwrap();
    assert_eq!(s.class, ChowClass::point(2));
}
