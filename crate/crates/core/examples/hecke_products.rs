//! Products in the generic Hecke algebra and its specialization at q = 0,
//! the involution iota and the E-basis.

use hecke0::context::Context;
use hecke0::hecke::{GenericElement, HeckeAlgebra, ZeroElement};
use hecke0::parse::parse_element;

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("A1-sc")?;
    let g = ctx.group();
    let h = HeckeAlgebra::new(ctx.group_arc().clone());

    let s0 = parse_element(g, "s0")?;
    let s1 = parse_element(g, "s1")?;
    let gs = GenericElement::basis(&s1);
    println!("generic  T_s1^2 = {}", h.display(&h.mul(&gs, &gs)));
    let zs = ZeroElement::basis(&s1);
    println!("q = 0    T_s1^2 = {}", h.display(&h.mul(&zs, &zs)));

    let x = ZeroElement::basis(&g.mul(&s0, &s1));
    let y = ZeroElement::basis(&g.mul(&s1, &s0));
    println!("T_(s0 s1) T_(s1 s0) = {}", h.display(&h.mul(&x, &y)));
    println!("(T_s0 T_s1)^3 = {}", h.display(&h.t_power(&g.mul(&s0, &s1), 3)));

    let tau = parse_element(g, "tau1")?;
    let conj = h.mul(&h.mul(&ZeroElement::basis(&tau), &zs), &ZeroElement::basis(&g.inverse(&tau)));
    println!("T_tau T_s1 T_tau^-1 = {}", h.display(&conj));

    let w = g.mul(&s1, &s0);
    println!("iota(T_s1 s0) = {}", h.display(&h.iota_basis::<i64>(&w)));
    println!("T_(s1 s0)^-1 = {}", h.display(&h.t_inverse(&w)));

    for text in ["t[1]", "t[-2]", "s1*t[1]"] {
        let e = parse_element(g, text)?;
        let (generic, zero) = h.e_basis(&e)?;
        println!("E_{text} = {}\n    at q = 0: {}", h.display(&generic), h.display(&zero));
    }
    Ok(())
}
