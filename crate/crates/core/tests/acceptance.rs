//! One line per acceptance criterion; exits non-zero if any fails.

use hecke0::verify::{Verifier, ACCEPTANCE_DATA, PHASES};

fn main() {
    let only: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let verifier = Verifier::new(ACCEPTANCE_DATA, None).expect("catalog loads");
    let mut failed = 0;
    for &(id, _, _) in PHASES {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let report = verifier.run(id);
        println!("{}", report.line());
        failed += usize::from(!report.passed);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
