//! Virtual characters written in the basis of induced modules, and the rank
//! of the character matrix.

use hecke0::context::Context;
use hecke0::field::Q;
use hecke0::linalg::Matrix;
use hecke0::representations::{char_vector, decompose, induce_q, Character, ParahoricDatum};
use hecke0::verify::{catalog_candidates, realizing_bound};

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("A2-ad")?;
    let l = realizing_bound(&ctx, 3)?;
    let classes = ctx.enumerate_classes(l)?;
    let cands = catalog_candidates(&ctx, &classes)?;
    let rank = Matrix::from_rows(cands.iter().map(|k| k.chars.clone()).collect()).rank();
    println!("{} modules, {} classes up to length {l}, rank {rank}", cands.len(), classes.len());

    let f = ctx.datum().all_simple();
    let pd = ParahoricDatum::new(&ctx, f, ctx.group().all_nodes().without(0))?;
    let a = induce_q(&ctx, &pd, &Character::trivial(&pd))?;
    let twisted = a.iota_twist()?;
    let sum = a.direct_sum(&twisted)?;
    let target: Vec<Q> = char_vector(&sum, &classes);
    let coeffs = decompose(&ctx, &target, &classes, &cands)?;
    println!("\n{} + its iota-twist =", a.label);
    for (k, c) in cands.iter().zip(&coeffs).filter(|(_, c)| **c != 0) {
        println!("  {c:+} {}", k.label());
    }

    let pd0 = ParahoricDatum::new(&ctx, hecke0::nodeset::NodeSet::EMPTY, hecke0::nodeset::NodeSet::EMPTY)?;
    let ps = induce_q(&ctx, &pd0, &Character::trivial(&pd0))?;
    let coeffs = decompose(&ctx, &char_vector(&ps, &classes), &classes, &cands)?;
    println!("\n{} =", ps.label);
    for (k, c) in cands.iter().zip(&coeffs).filter(|(_, c)| **c != 0) {
        println!("  {c:+} {}", k.label());
    }
    Ok(())
}
