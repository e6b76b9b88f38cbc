use std::collections::HashMap;
use std::sync::Arc;

use hecke0::affine::{AffineElement, AffineWeyl};
use hecke0::conjugacy::CyclicShiftClass;
use hecke0::context::Context;
use hecke0::field::Q;
use hecke0::hecke::HeckeAlgebra;
use hecke0::linalg::Matrix;
use hecke0::nodeset::NodeSet;
use hecke0::representations::{
    char_vector, class_pair, equivalent, induce_q, is_rigid, precedes, Candidate, Character, FDModule,
    ParahoricDatum,
};
use hecke0::verify::catalog_candidates;

fn sign(k: i64) -> Q {
    Q::from_integer(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn setup(name: &str, l: u32) -> (Context, Vec<Arc<CyclicShiftClass>>) {
    let ctx = Context::load(name).unwrap();
    let classes = ctx.enumerate_classes(l).unwrap();
    (ctx, classes)
}

fn candidates(ctx: &Context, classes: &[Arc<CyclicShiftClass>]) -> Vec<(Candidate, FDModule<Q>)> {
    catalog_candidates(ctx, classes)
        .unwrap()
        .into_iter()
        .map(|k| {
            let m = induce_q(ctx, &k.pd, &k.chi).unwrap();
            (k, m)
        })
        .collect()
}

/// Every reduced expression of `e`, built by peeling left descents.
fn reduced_words(g: &AffineWeyl, e: &AffineElement) -> Vec<Vec<usize>> {
    let l = g.length(e);
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in 0..g.num_simple() {
        let r = g.mul(g.s(s), e);
        if g.length(&r) < l {
            for mut w in reduced_words(g, &r) {
                w.insert(0, s);
                out.push(w);
            }
        }
    }
    out
}

#[test]
fn action_matrices_do_not_depend_on_the_reduced_word() {
    for name in ["A2-ad", "C2"] {
        let (ctx, classes) = setup(name, 3);
        let g = ctx.group();
        let elements: Vec<_> = g.enumerate(4).unwrap().into_iter().flatten().collect();
        for (k, m) in candidates(&ctx, &classes) {
            for e in &elements {
                let (_, tau) = g.reduced_word(e);
                let want = m.action_matrix(e);
                for w in reduced_words(g, e) {
                    assert_eq!(m.word_matrix(&w, &tau), want, "{name} {} at {}", k.label(), g.display(e));
                }
            }
        }
    }
}

#[test]
fn identity_acts_trivially_and_generators_are_idempotent_up_to_sign() {
    let (ctx, classes) = setup("G2", 2);
    let g = ctx.group();
    for (_, m) in candidates(&ctx, &classes) {
        assert_eq!(m.action_matrix(&g.identity()), Matrix::identity(m.dim()));
        for s in 0..g.num_simple() {
            let a = m.simple_matrix(s);
            assert_eq!(&(a * a) + a, Matrix::zeros(m.dim(), m.dim()));
        }
    }
}

#[test]
fn traces_are_constant_on_classes() {
    for name in ["A2-sc", "C2", "G2"] {
        let (ctx, classes) = setup(name, 4);
        for (k, m) in candidates(&ctx, &classes) {
            for c in &classes {
                let t = m.trace(&c.rep);
                for x in &c.members {
                    assert_eq!(m.trace(x), t, "{name} {}", k.label());
                }
            }
        }
    }
}

#[test]
fn classes_with_a_common_standard_pair_have_equal_traces() {
    let mut shared = 0;
    for name in ["A2-ad", "C2", "G2"] {
        let (ctx, classes) = setup(name, 6);
        let mut by_pair: HashMap<_, Vec<&Arc<CyclicShiftClass>>> = HashMap::new();
        for c in &classes {
            by_pair.entry(ctx.standard_pair(c).unwrap()).or_default().push(c);
        }
        shared += by_pair.values().filter(|v| v.len() > 1).count();
        for (k, m) in candidates(&ctx, &classes) {
            for group in by_pair.values() {
                let t = m.trace(&group[0].rep);
                for c in group {
                    assert_eq!(m.trace(&c.rep), t, "{name} {}", k.label());
                }
            }
        }
    }
    assert!(shared > 0);
}

#[test]
fn powers_reduce_to_the_standard_pair() {
    for name in ["A1-sc", "A2-ad", "A2-sc", "C2"] {
        let (ctx, classes) = setup(name, 4);
        let g = ctx.group();
        let h = HeckeAlgebra::new(ctx.group_arc().clone());
        let mods = candidates(&ctx, &classes);
        for c in &classes {
            let p = ctx.standard_pair(c).unwrap();
            let sys = ctx.system(p.j);
            let wg = sys.longest(p.gamma);
            for n in 1..=8u64 {
                let power = h.t_power(&c.rep, n);
                let z = sys.mul(&wg, &sys.pow(&p.x, n));
                let e = n as i64 * (i64::from(c.length) - i64::from(g.length(&p.x))) - i64::from(g.length(&wg));
                for (k, m) in &mods {
                    let lhs: Q = power.terms().map(|(x, &a)| m.trace(x) * Q::from_integer(a.into())).sum();
                    assert_eq!(lhs, sign(e) * m.trace(&z), "{name} {} n = {n}", k.label());
                }
            }
        }
    }
}

#[test]
fn iota_twist_swaps_gamma_and_its_complement() {
    for name in ["A1-sc", "A2-sc", "A2-ad", "C2", "G2"] {
        let (ctx, classes) = setup(name, 4);
        let g = ctx.group();
        let f = ctx.datum().all_simple();
        let all = g.all_nodes();
        let mut checked = 0;
        for gamma in all.subsets() {
            let rest = all.difference(gamma);
            if !g.is_finite_type(gamma) || !g.is_finite_type(rest) {
                continue;
            }
            let pd = ParahoricDatum::new(&ctx, f, gamma).unwrap();
            let pd_rest = ParahoricDatum::new(&ctx, f, rest).unwrap();
            for chi in Character::catalog(&pd, &[Q::from_integer(1)]) {
                let twisted = induce_q(&ctx, &pd, &chi).unwrap().iota_twist().unwrap();
                let other = induce_q(&ctx, &pd_rest, &Character::new(&pd_rest, chi.values.clone()).unwrap()).unwrap();
                assert_eq!(
                    char_vector(&twisted, &classes),
                    char_vector(&other, &classes),
                    "{name} Γ = {gamma:?}"
                );
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn nonzero_traces_respect_the_order() {
    for name in ["A1-sc", "A1-ad", "A2-sc", "A2-ad", "C2"] {
        let (ctx, classes) = setup(name, 5);
        let pairs: Vec<_> = classes.iter().map(|c| class_pair(&ctx, c).unwrap()).collect();
        for (k, m) in candidates(&ctx, &classes) {
            for (c, &p) in classes.iter().zip(&pairs) {
                if m.trace(&c.rep) != Q::from_integer(0) {
                    assert!(
                        equivalent(&ctx, k.pair, p) || precedes(&ctx, k.pair, p),
                        "{name} {} at {}",
                        k.label(),
                        ctx.group().display(&c.rep)
                    );
                }
            }
        }
    }
}

#[test]
fn full_level_characters_are_distinct() {
    for name in ["A1-sc", "A2-sc", "A2-ad", "C2", "G2"] {
        let ctx = Context::load(name).unwrap();
        let l = hecke0::verify::realizing_bound(&ctx, 3).unwrap();
        let classes = ctx.enumerate_classes(l).unwrap();
        let f = ctx.datum().all_simple();
        let rows: Vec<Vec<Q>> = catalog_candidates(&ctx, &classes)
            .unwrap()
            .into_iter()
            .filter(|k| k.pd.j == f)
            .map(|k| k.chars)
            .collect();
        for i in 0..rows.len() {
            for j in 0..i {
                assert_ne!(rows[i], rows[j], "{name}");
            }
        }
    }
}

#[test]
fn dimensions_follow_coset_counts() {
    for name in ["A1-sc", "A2-sc", "A2-ad", "C2", "G2"] {
        let (ctx, classes) = setup(name, 0);
        for (k, m) in candidates(&ctx, &classes) {
            let cosets = ctx.datum().min_coset_reps(k.pd.j).len();
            assert_eq!(m.dim(), cosets * k.pd.index(), "{name} {}", k.label());
        }
        let pd = ParahoricDatum::new(&ctx, NodeSet::EMPTY, NodeSet::EMPTY).unwrap();
        let m = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
        assert_eq!(m.dim(), ctx.datum().weyl().order());
    }
}

#[test]
fn principal_series_is_not_rigid_and_the_zero_character_is() {
    let (ctx, classes) = setup("A2-ad", 4);
    let pd = ParahoricDatum::new(&ctx, NodeSet::EMPTY, NodeSet::EMPTY).unwrap();
    let m = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
    assert!(!is_rigid(&ctx, &classes, &char_vector(&m, &classes)));
    assert!(is_rigid(&ctx, &classes, &vec![Q::from_integer(0); classes.len()]));
}
