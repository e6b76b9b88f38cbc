//! Cyclic-shift classes of minimal length elements, their Newton points and
//! standard pairs, and the reduction of an arbitrary element to its class.

use hecke0::affine::AffineWeyl;
use hecke0::context::Context;
use hecke0::parse::parse_element;

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("A2-ad")?;
    let g = ctx.group();
    for c in ctx.enumerate_classes(5)? {
        let sd = ctx.standard_data(&c)?;
        let sys = ctx.system(sd.pair.j);
        println!(
            "{:<22} l={} members={:<2} newton={:<10} straight={:<5} w={:<14} y={:<16} K={:?}  pair: x={} Gamma={:?}",
            g.display(&c.rep),
            c.length,
            c.members.len(),
            AffineWeyl::format_vector(&c.newton),
            c.straight,
            g.display(&sd.w),
            g.display(&sd.y),
            g.node_names(sd.k),
            sys.display(&sd.pair.x),
            sys.node_names(sd.pair.gamma),
        );
    }

    let e = parse_element(g, "s0*s1*s2*s1*s0")?;
    let (m, path) = ctx.reduce_to_minimal(&e)?;
    let (id, sign) = ctx.sigma(&e)?;
    println!(
        "\n{} reduces in {} steps to {}; Sigma = class of {} with sign {sign}",
        g.display(&e),
        path.len(),
        g.display(&m),
        g.display(&ctx.class(id).rep)
    );
    println!("all strategies agree: {}", ctx.sigma_all_choices(&e)?.len() == 1);

    let c = ctx.class_of(&parse_element(g, "s1*s2")?)?;
    print!("\n{}", ctx.class_dot(&c));
    Ok(())
}
