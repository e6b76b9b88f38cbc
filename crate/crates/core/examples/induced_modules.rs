//! Induced modules: dimensions, generator matrices, the Levi restriction
//! and its Gamma-part, and a spot check over a prime field.

use hecke0::context::Context;
use hecke0::field::{fmt_q, Fp};
use hecke0::nodeset::NodeSet;
use hecke0::representations::{all_pairs, induce, induce_q, m_j, Character, GammaPart, ParahoricDatum};

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("C2")?;
    let g = ctx.group();
    for (j, gamma) in all_pairs(&ctx) {
        let pd = ParahoricDatum::new(&ctx, j, gamma)?;
        let m = induce_q(&ctx, &pd, &Character::trivial(&pd))?;
        println!(
            "J = {:<12} Gamma = {:<14} index {}  cosets {}  dim {}",
            format!("{:?}", j.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>()),
            format!("{:?}", pd.gamma_names()),
            pd.index(),
            ctx.datum().min_coset_reps(j).len(),
            m.dim()
        );
    }

    let j = NodeSet::single(1);
    let pd = ParahoricDatum::new(&ctx, j, NodeSet::EMPTY)?;
    let m = induce_q(&ctx, &pd, &Character::trivial(&pd))?;
    println!("\n{}", m.label);
    for (i, s) in g.simple().iter().enumerate() {
        let a = m.simple_matrix(i);
        let rows: Vec<String> = (0..a.rows())
            .map(|r| a.row(r).iter().map(fmt_q).collect::<Vec<_>>().join(" "))
            .collect();
        println!("  T_{} = [{}]", s.name, rows.join("; "));
    }

    let levi = m_j(&ctx, &m, j)?;
    let part = GammaPart::new(&levi.module, NodeSet::EMPTY);
    println!("restriction to the Levi of J: dim {}, Gamma-part dim {}", levi.module.dim(), part.dim());

    let mp = induce::<Fp<5>>(&ctx, &pd, &Character::trivial(&pd))?;
    mp.check_relations()?;
    println!("the same module over F_5 satisfies the relations, dim {}", mp.dim());
    Ok(())
}
