//! Compute and print graded Betti tables and regularity for a few monomial
//! ideals, straight from the homology engine.
//!
//!     cargo run --example betti_tables

use treereg::koszul::{graded_betti, regularity_of_ideal, OracleConfig};
use treereg::monomial::{Monomial, MonomialIdeal};

fn show(name: &str, ideal: &MonomialIdeal) {
    let cfg = OracleConfig::default();
    let table = graded_betti(ideal, &cfg).expect("ideal within caps");
    println!("{name} = {ideal}");
    println!("{table}");
    println!(
        "regularity(I) = {}, regularity(R/I) = {}\n",
        regularity_of_ideal(ideal, &cfg).unwrap(),
        regularity_of_ideal(ideal, &cfg).unwrap() - 1
    );
}

fn main() {
    // Two variables: the Koszul relation.
    let koszul = MonomialIdeal::minimalize(
        2,
        vec![Monomial::variable(0, 2), Monomial::variable(1, 2)],
    )
    .unwrap();
    show("(x1, x2)", &koszul);

    // Edge ideal of a 4-vertex path: linear resolution.
    let path = MonomialIdeal::minimalize(
        4,
        vec![
            Monomial::squarefree([0, 1], 4),
            Monomial::squarefree([1, 2], 4),
            Monomial::squarefree([2, 3], 4),
        ],
    )
    .unwrap();
    show("path edge ideal", &path);

    // Two disjoint edges: one syzygy jumps a degree.
    let gap = MonomialIdeal::minimalize(
        4,
        vec![Monomial::squarefree([0, 1], 4), Monomial::squarefree([2, 3], 4)],
    )
    .unwrap();
    show("two disjoint edges", &gap);

    // A square of the path ideal: still linear, generators in degree 4.
    let square = path.power(2, 10_000).unwrap();
    show("path edge ideal squared", &square);
}
