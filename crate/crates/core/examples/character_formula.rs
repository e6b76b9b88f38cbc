//! Closed-form character values against matrix traces on every class up to
//! a length bound.

use hecke0::context::Context;
use hecke0::field::{fmt_q, Q};
use hecke0::representations::{all_pairs, char_formula, induce_q, Character, FormulaValue, ParahoricDatum};

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("A2-sc")?;
    let g = ctx.group();
    let classes = ctx.enumerate_classes(4)?;
    let (mut agree, mut uncovered) = (0, 0);
    for (j, gamma) in all_pairs(&ctx) {
        let pd = ParahoricDatum::new(&ctx, j, gamma)?;
        for chi in Character::catalog(&pd, &[Q::from_integer(1), Q::from_integer(-2)]) {
            let m = induce_q(&ctx, &pd, &chi)?;
            for c in &classes {
                match char_formula(&ctx, c, &pd, &chi)? {
                    (_, FormulaValue::Value(v)) => {
                        assert_eq!(v, m.trace(&c.rep));
                        agree += 1;
                    }
                    (_, FormulaValue::NotCovered) => uncovered += 1,
                }
            }
        }
    }
    println!("{agree} closed-form values equal the matrix trace, {uncovered} (class, module) pairs not covered");

    let f = ctx.datum().all_simple();
    let pd = ParahoricDatum::new(&ctx, f, g.all_nodes().without(2))?;
    let chi = Character::trivial(&pd);
    let m = induce_q(&ctx, &pd, &chi)?;
    println!("\n{} (dim {})", m.label, m.dim());
    for c in &classes {
        let (case, v) = char_formula(&ctx, c, &pd, &chi)?;
        let v = match v {
            FormulaValue::Value(v) => fmt_q(&v),
            FormulaValue::NotCovered => "-".into(),
        };
        println!("  {:<18} {case:?}: {v}", g.display(&c.rep));
    }
    Ok(())
}
