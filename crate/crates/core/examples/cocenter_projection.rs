//! The cocenter of the affine 0-Hecke algebra: projecting products onto the
//! basis of cyclic-shift classes, commutator checks and the non-rigid and
//! non-supersingular parts.

use hecke0::affine::AffineWeyl;
use hecke0::cocenter::CocenterElement;
use hecke0::context::Context;
use hecke0::hecke::{HeckeAlgebra, ZeroElement};
use hecke0::parse::parse_element;

fn show(g: &AffineWeyl, v: &CocenterElement) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.terms().map(|(e, c)| format!("{c:+}*[{}]", g.display(e))).collect::<Vec<_>>().join(" ")
}

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("A2-sc")?;
    let g = ctx.group();
    let h = HeckeAlgebra::new(ctx.group_arc().clone());

    for (a, b) in [("s0*s1", "s2*s1"), ("s1*s2*s1", "s0"), ("tau1", "s0*s1*s2")] {
        let x = ZeroElement::basis(&parse_element(g, a)?);
        let y = ZeroElement::basis(&parse_element(g, b)?);
        let xy = ctx.project(&h.mul(&x, &y))?;
        let yx = ctx.project(&h.mul(&y, &x))?;
        println!("psi(T_{a} T_{b}) = {}   equal to psi(T_{b} T_{a}): {}", show(g, &xy), xy == yx);
    }

    let report = ctx.commutator_check(4)?;
    println!("\n{} commutators up to length 4, {} violations", report.checked, report.violations.len());

    let classes = ctx.enumerate_classes(4)?;
    let non_rigid = classes.iter().filter(|c| ctx.is_non_rigid(c)).count();
    println!("{} classes up to length 4, {non_rigid} non-rigid", classes.len());
    let nss = ctx.nss_spanning_set(4)?;
    println!("{} spanning elements of the non-supersingular part, e.g.", nss.len());
    for v in nss.iter().take(4) {
        println!("  {}", show(g, v));
    }
    Ok(())
}
