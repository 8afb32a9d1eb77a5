//! Canonical ordered generators of powers of a facet ideal, their prefix
//! colon ideals, and the single-variable witness recipe behind the linear
//! quotient property.
//!
//!     cargo run --example power_quotients

use treereg::complex::SimplicialComplex;
use treereg::monomial::MonomialIdeal;
use treereg::powers::{power_generators_canonical, verify_linear_quotients_power};

fn main() {
    let complex =
        SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
    let ordering = complex.adjacent_good_leaf_order().unwrap();
    println!("facets in adjacent good-leaf order: {ordering:?}");

    for s in 1..=2u32 {
        let gens = power_generators_canonical(&complex, &ordering, s, 10_000).unwrap();
        println!("\npower s = {s}: {} minimal generators, descending order:", gens.len());
        for g in &gens {
            println!("  {:?} -> {}", g.exponents, g.monomial);
        }
        let monomials: Vec<_> = gens.iter().map(|g| g.monomial.clone()).collect();
        for k in 1..monomials.len() {
            let colon = MonomialIdeal::minimalize(
                complex.vertex_count(),
                monomials[..k].iter().map(|m| m.colon(&monomials[k])).collect(),
            )
            .unwrap();
            println!("  prefix colon before #{k}: {colon}");
        }
    }

    let report = verify_linear_quotients_power(&complex, 3, 10_000).unwrap();
    println!("\nfull verification at s = 3: passed = {}", report.passed);
    for claim in &report.claims {
        println!("  {}: {}", claim.id, claim.pass);
    }
}
