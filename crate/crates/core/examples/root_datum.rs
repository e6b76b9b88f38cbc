//! Builds catalog root data and a custom one from JSON, and prints the
//! derived roots, Weyl group order and length-zero group.

use hecke0::affine::AffineWeyl;
use hecke0::field::Q;
use hecke0::rootdatum::{RootDatum, RootDatumSpec};

fn main() -> hecke0::Result<()> {
    for name in ["A1-sc", "A2-ad", "C2", "G2", "GL2"] {
        let rd = RootDatum::builtin(name)?;
        let om = AffineWeyl::full(std::sync::Arc::new(rd.clone()));
        println!(
            "{name}: rank {}, |R+| = {}, |W0| = {}, Omega invariants {:?}",
            rd.rank(),
            rd.num_positive(),
            rd.weyl().order(),
            om.omega().quotient.invariants
        );
    }

    let spec = RootDatumSpec::from_json(
        r#"{"name": "B2-custom", "xRank": 2, "pairing": [[1,0],[0,1]],
            "simpleRoots": [[1,-1],[0,1]], "simpleCoroots": [[1,-1],[0,2]]}"#,
    )?;
    let rd = RootDatum::build(&spec)?;
    println!("{}: Cartan {:?}", rd.name(), rd.cartan());
    for r in rd.positive_roots() {
        println!("  root {:?} coroot {:?} height {}", r.vector, r.coroot, r.height());
    }

    let rd = RootDatum::builtin("A2-ad")?;
    let v = vec![Q::from_integer(-1), Q::new(1, 2)];
    let (dom, z) = rd.dominant_rep(&v);
    println!(
        "dominant representative of {}: {} via s{:?}",
        AffineWeyl::format_vector(&v),
        AffineWeyl::format_vector(&dom),
        rd.weyl().word(z).iter().map(|i| i + 1).collect::<Vec<_>>()
    );
    println!("J_v of the dominant vector: {:?}", rd.j_of_vector(&dom));
    Ok(())
}
