//! Rigidity and supersingularity of the catalog modules, with the three
//! independent criteria side by side.

use hecke0::context::Context;
use hecke0::representations::{
    induce_q, is_rigid, is_supersingular_pair, supersingular_bound, supersingular_evidence, EBasisTable,
};
use hecke0::verify::{catalog_candidates, realizing_bound};

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("C2")?;
    let l = realizing_bound(&ctx, 6)?;
    let classes = ctx.enumerate_classes(l)?;
    let cands = catalog_candidates(&ctx, &classes)?;
    let nss = ctx.nss_spanning_set(l)?;
    let window = 6;
    let elements: Vec<_> = ctx.group().enumerate(window)?.into_iter().flatten().collect();
    let table = EBasisTable::new(&ctx, 2);
    let f = ctx.datum().all_simple();
    println!("traces up to length {l}, E-window up to length {window}\n");
    for k in &cands {
        let m = induce_q(&ctx, &k.pd, &k.chi)?;
        let full = k.pd.j == f;
        let lower = if full { supersingular_bound(&ctx, k.pd.gamma).unwrap_or(0) } else { 0 };
        let ev = supersingular_evidence(&ctx, &m, &k.chars, &classes, &nss, &cands, &elements, &table, lower, window)?;
        println!(
            "{:<42} rigid {:<5} supersingular {:<5} (expected {:<5}) E {:?}, nss traces vanish {}, span {:?}",
            k.label(),
            is_rigid(&ctx, &classes, &k.chars),
            ev.verdict()?,
            full && is_supersingular_pair(&ctx, k.pair),
            ev.e_vanishing,
            ev.nss_traces_vanish,
            ev.in_supersingular_span
        );
    }
    Ok(())
}
