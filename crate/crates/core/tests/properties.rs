use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use hecke0::affine::AffineElement;
use hecke0::context::Context;
use hecke0::field::Q;
use hecke0::hecke::{GenericElement, HeckeAlgebra, ZeroElement};
use hecke0::parse::parse_element;

const DATA: &[&str] = &["A1-sc", "A1-ad", "A2-sc", "A2-ad", "C2", "G2", "GL2"];

fn contexts() -> &'static Vec<Arc<Context>> {
    static CTX: OnceLock<Vec<Arc<Context>>> = OnceLock::new();
    CTX.get_or_init(|| DATA.iter().map(|d| Arc::new(Context::load(d).unwrap())).collect())
}

/// A datum index, a translation, a word in the simple reflections and a
/// power of the first length-zero generator.
fn raw() -> impl Strategy<Value = (usize, Vec<i64>, Vec<usize>, i64)> {
    (
        0..DATA.len(),
        prop::collection::vec(-3i64..=3, 2),
        prop::collection::vec(0usize..3, 0..6),
        -2i64..=2,
    )
}

fn element(ctx: &Context, t: &[i64], word: &[usize], k: i64) -> AffineElement {
    let g = ctx.group();
    let rank = ctx.datum().rank();
    let mut e = g.translation(&t[..rank]);
    for &s in word {
        e = g.mul(&e, g.s(s % g.num_simple()));
    }
    if let Some(tau) = g.omega().generators.first() {
        let p = if k >= 0 { g.pow(tau, k as u64) } else { g.pow(&g.inverse(tau), k.unsigned_abs()) };
        e = g.mul(&e, &p);
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn length_formula_matches_hyperplane_count((d, t, w, k) in raw()) {
        let ctx = &contexts()[d];
        let g = ctx.group();
        let e = element(ctx, &t, &w, k);
        prop_assert_eq!(g.length(&e), g.length_hyperplanes(&e));
        prop_assert_eq!(g.length(&g.inverse(&e)), g.length(&e));
    }

    #[test]
    fn reduced_words_round_trip((d, t, w, k) in raw()) {
        let ctx = &contexts()[d];
        let g = ctx.group();
        let e = element(ctx, &t, &w, k);
        let (word, tau) = g.reduced_word(&e);
        prop_assert_eq!(word.len() as u32, g.length(&e));
        prop_assert_eq!(g.length(&tau), 0);
        prop_assert_eq!(g.from_word(&word, &tau), e);
    }

    #[test]
    fn lengths_are_subadditive_with_parity((d, t, w, k) in raw(), (t2, w2, k2) in (prop::collection::vec(-3i64..=3, 2), prop::collection::vec(0usize..3, 0..6), -2i64..=2)) {
        let ctx = &contexts()[d];
        let g = ctx.group();
        let a = element(ctx, &t, &w, k);
        let b = element(ctx, &t2, &w2, k2);
        let (la, lb, lab) = (g.length(&a), g.length(&b), g.length(&g.mul(&a, &b)));
        prop_assert!(lab <= la + lb);
        prop_assert_eq!((la + lb - lab) % 2, 0);
    }

    #[test]
    fn length_zero_elements_permute_simple_reflections((d, t, w, k) in raw()) {
        let ctx = &contexts()[d];
        let g = ctx.group();
        let tau = g.omega_part(&element(ctx, &t, &w, k));
        prop_assert_eq!(g.length(&tau), 0);
        for s in 0..g.num_simple() {
            let c = g.conj(&tau, g.s(s));
            prop_assert!((0..g.num_simple()).any(|r| g.s(r) == &c));
        }
    }

    #[test]
    fn display_parses_back((d, t, w, k) in raw()) {
        let ctx = &contexts()[d];
        let g = ctx.group();
        let e = element(ctx, &t, &w, k);
        prop_assert_eq!(parse_element(g, &g.display(&e)).unwrap(), e.clone());
        prop_assert_eq!(parse_element(g, &g.display_word(&e)).unwrap(), e);
    }

    #[test]
    fn hecke_products_are_associative((d, t, w, k) in raw(), w2 in prop::collection::vec(0usize..3, 0..5), w3 in prop::collection::vec(0usize..3, 0..5)) {
        let ctx = &contexts()[d];
        let h = HeckeAlgebra::new(ctx.group_arc().clone());
        let a = element(ctx, &t, &w, k);
        let b = element(ctx, &[0, 0], &w2, 0);
        let c = element(ctx, &[1, 0], &w3, 1);
        let (za, zb, zc) = (ZeroElement::basis(&a), ZeroElement::basis(&b), ZeroElement::basis(&c));
        prop_assert_eq!(h.mul(&h.mul(&za, &zb), &zc), h.mul(&za, &h.mul(&zb, &zc)));
        let (ga, gb, gc) = (GenericElement::basis(&a), GenericElement::basis(&b), GenericElement::basis(&c));
        let left = h.mul(&h.mul(&ga, &gb), &gc);
        prop_assert_eq!(&left, &h.mul(&ga, &h.mul(&gb, &gc)));
        prop_assert_eq!(left.at_q_zero().unwrap(), h.mul(&h.mul(&za, &zb), &zc));
    }

    #[test]
    fn iota_is_an_involution((d, t, w, k) in raw()) {
        let ctx = &contexts()[d];
        let h = HeckeAlgebra::new(ctx.group_arc().clone());
        let e = element(ctx, &t, &w, k);
        prop_assume!(ctx.group().length(&e) <= 7);
        let z = ZeroElement::basis(&e);
        prop_assert_eq!(h.iota(&h.iota(&z)), z);
    }

    #[test]
    fn cocenter_projection_is_a_trace((d, t, w, k) in raw(), w2 in prop::collection::vec(0usize..3, 0..4)) {
        let ctx = &contexts()[d];
        prop_assume!(ctx.group().omega().is_finite());
        let h = HeckeAlgebra::new(ctx.group_arc().clone());
        let a = ZeroElement::basis(&element(ctx, &t[..1].iter().chain(&[0]).copied().collect::<Vec<_>>(), &w, k));
        let b = ZeroElement::basis(&element(ctx, &[0, 0], &w2, 0));
        prop_assert_eq!(ctx.project(&h.mul(&a, &b)).unwrap(), ctx.project(&h.mul(&b, &a)).unwrap());
    }

    #[test]
    fn dominant_representatives_are_orbit_invariant((d, t, w, _k) in raw()) {
        let rd = contexts()[d].datum();
        let v: Vec<Q> = t[..rd.rank()].iter().map(|&x| Q::new(x.into(), 2)).collect();
        let (dom, z) = rd.dominant_rep(&v);
        prop_assert!(rd.is_dominant_q(&dom));
        prop_assert_eq!(rd.weyl().act_q(z, &v), dom.clone());
        let u = rd.weyl().from_word(&w.iter().map(|s| s % rd.semisimple_rank().max(1)).collect::<Vec<_>>());
        prop_assert_eq!(rd.dominant_rep(&rd.weyl().act_q(u, &v)).0, dom);
    }
}
