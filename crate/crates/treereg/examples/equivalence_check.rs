//! The six-way equivalence on simplicial forests: intersection property,
//! linear resolution, linear quotients of powers with purity, linear
//! resolutions of powers, and linear first syzygies — all of which must agree.
//!
//!     cargo run --example equivalence_check

use treereg::complex::SimplicialComplex;
use treereg::koszul::OracleConfig;
use treereg::powers::verify_equivalence;

fn run(name: &str, complex: &SimplicialComplex) {
    let report = verify_equivalence(complex, 2, &OracleConfig::default(), 10_000).unwrap();
    println!("{name}: coherent = {}", report.passed);
    for claim in &report.claims {
        match &claim.witness {
            Some(w) => println!("  {} -> {}", claim.id, w),
            None => println!("  {} -> {}", claim.id, claim.pass),
        }
    }
    println!();
}

fn main() {
    let good = SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
    run("two-dimensional path (everything true)", &good);

    let gap = SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    run("gap pair (everything false)", &gap);

    let single = SimplicialComplex::new(3, vec![vec![0, 1, 2]]).unwrap();
    run("a single facet (everything true)", &single);
}
