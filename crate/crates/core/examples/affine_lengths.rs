//! Lengths in the extended affine Weyl group: the closed formula against
//! hyperplane counting, reduced words, supports and coset decompositions.

use hecke0::context::Context;
use hecke0::nodeset::NodeSet;
use hecke0::parse::parse_element;

fn main() -> hecke0::Result<()> {
    let ctx = Context::load("C2")?;
    let g = ctx.group();

    let levels = g.enumerate(6)?;
    for (l, level) in levels.iter().enumerate() {
        let agree = level.iter().all(|e| g.length_hyperplanes(e) == l as u32);
        println!("length {l}: {:>3} elements, hyperplane count agrees: {agree}", level.len());
    }

    for text in ["t[2,1]", "t[1,0]*s2*s1", "s0*s2*s0", "tau1*s1"] {
        let e = parse_element(g, text)?;
        let (word, tau) = g.reduced_word(&e);
        println!(
            "{text:>14} = {:<24} length {}  reduced word {}  support {:?}  omega part {}",
            g.display(&e),
            g.length(&e),
            g.display_word(&e),
            g.node_names(g.support(&e)),
            g.display(&tau)
        );
        assert_eq!(word.len() as u32, g.length(&e));
    }

    let j = NodeSet::single(0);
    let deep: Vec<i64> = ctx.datum().deep_vector(j).iter().map(|x| 3 * x).collect();
    let e = g.mul(&parse_element(g, "s1*s2")?, &g.translation(&deep));
    let (d, u) = g.coset_decompose(&e, j);
    println!(
        "{} = d * u with d = s{:?} and u = {} (J-positive: {})",
        g.display(&e),
        ctx.datum().weyl().word(d).iter().map(|i| i + 1).collect::<Vec<_>>(),
        g.display(&u),
        ctx.system(j).is_j_positive(&u)?
    );
    Ok(())
}
