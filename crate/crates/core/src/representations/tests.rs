use super::*;
use crate::context::Context;
use crate::field::{Fp, Q};
use crate::nodeset::NodeSet;

fn q(n: i128) -> Q {
    Q::from_integer(n)
}

fn all_characters(pd: &ParahoricDatum) -> Vec<Character> {
    Character::catalog(pd, &[q(1), q(-1), q(2)])
}

#[test]
fn induced_dimensions() {
    for name in ["A1-sc", "A1-ad", "A2-ad", "C2"] {
        let ctx = Context::load(name).unwrap();
        for (j, gamma) in all_pairs(&ctx) {
            let pd = ParahoricDatum::new(&ctx, j, gamma).unwrap();
            let chi = Character::trivial(&pd);
            let m = induce_q(&ctx, &pd, &chi).unwrap();
            let cosets = ctx.datum().min_coset_reps(j).len();
            assert_eq!(m.dim(), cosets * pd.index(), "{name} {pd:?}");
        }
    }
}

#[test]
fn a2_adjoint_one_dimensional_at_full_j() {
    let ctx = Context::load("A2-ad").unwrap();
    let f = ctx.datum().all_simple();
    for gamma in ctx.group().all_nodes().subsets() {
        if gamma.len() != 2 {
            continue;
        }
        let pd = ParahoricDatum::new(&ctx, f, gamma).unwrap();
        let m = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
        assert_eq!(m.dim(), 1);
    }
}

#[test]
fn formula_matches_traces() {
    for name in ["A1-sc", "A2-ad", "C2"] {
        let ctx = Context::load(name).unwrap();
        let classes = ctx.enumerate_classes(4).unwrap();
        for (j, gamma) in all_pairs(&ctx) {
            let pd = ParahoricDatum::new(&ctx, j, gamma).unwrap();
            for chi in all_characters(&pd) {
                let m = induce_q(&ctx, &pd, &chi).unwrap();
                for c in &classes {
                    let (_, v) = char_formula(&ctx, c, &pd, &chi).unwrap();
                    if let FormulaValue::Value(v) = v {
                        assert_eq!(v, m.trace(&c.rep), "{name} {pd:?} {chi:?} at {}", ctx.group().display(&c.rep));
                    }
                }
            }
        }
    }
}

#[test]
fn traces_agree_with_gamma_parts() {
    let ctx = Context::load("A2-sc").unwrap();
    let g = ctx.group();
    let classes = ctx.enumerate_classes(4).unwrap();
    for (j, gamma) in all_pairs(&ctx) {
        let pd = ParahoricDatum::new(&ctx, j, gamma).unwrap();
        for chi in all_characters(&pd) {
            let m = induce_q(&ctx, &pd, &chi).unwrap();
            let levi = m_j(&ctx, &m, j).unwrap();
            for c in &classes {
                let p = ctx.standard_pair(c).unwrap();
                if p.j != j {
                    continue;
                }
                let part = GammaPart::new(&levi.module, p.gamma);
                let sign = if (i64::from(c.length) - i64::from(g.length(&p.x))) % 2 == 0 { q(1) } else { q(-1) };
                assert_eq!(m.trace(&c.rep), sign * part.trace(&p.x).unwrap());
            }
        }
    }
}

#[test]
fn modules_satisfy_relations_mod_p() {
    let ctx = Context::load("C2").unwrap();
    for (j, gamma) in all_pairs(&ctx) {
        let pd = ParahoricDatum::new(&ctx, j, gamma).unwrap();
        let m = induce::<Fp<7>>(&ctx, &pd, &Character::trivial(&pd)).unwrap();
        let mq = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
        assert_eq!(m.dim(), mq.dim());
        m.check_relations().unwrap();
    }
}

fn candidates(ctx: &Context, classes: &[std::sync::Arc<crate::conjugacy::CyclicShiftClass>]) -> Vec<Candidate> {
    let mut out = Vec::new();
    for (j, gamma) in all_pairs(ctx) {
        let pd = ParahoricDatum::new(ctx, j, gamma).unwrap();
        for chi in Character::catalog(&pd, &[q(1)]) {
            let pd = ParahoricDatum::new(ctx, j, gamma).unwrap();
            out.push(Candidate::build(ctx, pd, chi, classes).unwrap());
        }
    }
    out
}

#[test]
fn decomposition_round_trip() {
    let ctx = Context::load("A1-sc").unwrap();
    let classes = ctx.enumerate_classes(6).unwrap();
    let cands = candidates(&ctx, &classes);
    for (a, b) in [(0usize, 1usize), (1, 2), (0, cands.len() - 1)] {
        let mut want = vec![0i64; cands.len()];
        want[a] += 2;
        want[b] -= 1;
        let target: Vec<Q> = (0..classes.len())
            .map(|i| cands.iter().zip(&want).map(|(k, &c)| k.chars[i] * q(c as i128)).sum())
            .collect();
        assert_eq!(decompose(&ctx, &target, &classes, &cands).unwrap(), want);
    }
}

#[test]
fn full_j_modules_are_rigid() {
    let ctx = Context::load("A2-ad").unwrap();
    let classes = ctx.enumerate_classes(5).unwrap();
    let f = ctx.datum().all_simple();
    for (j, gamma) in all_pairs(&ctx) {
        let pd = ParahoricDatum::new(&ctx, j, gamma).unwrap();
        let m = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
        let chars = char_vector(&m, &classes);
        if j == f {
            assert!(is_rigid(&ctx, &classes, &chars), "{pd:?}");
        }
    }
    let pd = ParahoricDatum::new(&ctx, NodeSet::EMPTY, NodeSet::EMPTY).unwrap();
    let m = induce_q(&ctx, &pd, &Character::trivial(&pd)).unwrap();
    assert!(!is_rigid(&ctx, &classes, &char_vector(&m, &classes)));
}

#[test]
fn supersingular_criteria_agree_on_a1() {
    let ctx = Context::load("A1-sc").unwrap();
    let max_len = 6;
    let classes = ctx.enumerate_classes(max_len).unwrap();
    let cands = candidates(&ctx, &classes);
    let nss = ctx.nss_spanning_set(max_len).unwrap();
    let table = EBasisTable::new(&ctx, 2);
    let elements: Vec<_> = ctx.group().enumerate(max_len).unwrap().into_iter().flatten().collect();
    let f = ctx.datum().all_simple();
    for k in &cands {
        let m = induce_q(&ctx, &k.pd, &k.chi).unwrap();
        let lower = supersingular_bound(&ctx, k.pd.gamma).unwrap_or(0);
        let ev = supersingular_evidence(&ctx, &m, &k.chars, &classes, &nss, &cands, &elements, &table, lower, max_len).unwrap();
        let expected = k.pd.j == f && is_supersingular_pair(&ctx, k.pair);
        assert_eq!(ev.verdict().unwrap(), expected, "{} {ev:?}", k.label());
    }
}

#[test]
fn formula_cases() {
    let ctx = Context::load("A1-sc").unwrap();
    let classes = ctx.enumerate_classes(3).unwrap();
    let pd = ParahoricDatum::new(&ctx, ctx.datum().all_simple(), NodeSet::single(0)).unwrap();
    let chi = Character::trivial(&pd);
    let id = classes.iter().find(|c| c.length == 0 && c.rep == ctx.group().identity()).unwrap();
    let (case, v) = char_formula(&ctx, id, &pd, &chi).unwrap();
    assert_eq!(case, FormulaCase::Stabilized);
    assert_eq!(v, FormulaValue::Value(q(2)));
    let pd0 = ParahoricDatum::new(&ctx, NodeSet::EMPTY, NodeSet::EMPTY).unwrap();
    let chi0 = Character::trivial(&pd0);
    let (case, _) = char_formula(&ctx, id, &pd0, &chi0).unwrap();
    assert_eq!(case, FormulaCase::NotCovered);
}
