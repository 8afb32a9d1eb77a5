//! The two classical six-variable fixtures: a characteristic-sensitive ideal
//! whose square loses its linear resolution, and a characteristic-free one
//! with ordered linear quotients whose square also fails.
//!
//!     cargo run --example fixture_ideals

use treereg::generate::{sturmfels_ordered_generators, terai_ideal};
use treereg::koszul::{has_linear_quotients, has_linear_resolution, regularity_of_ideal, OracleConfig};
use treereg::monomial::MonomialIdeal;
use treereg::FieldSpec;

fn main() {
    let char0 = OracleConfig::default();
    let char2 = OracleConfig::with_field(FieldSpec::Prime(2));

    let terai = terai_ideal();
    println!("first fixture: {terai}");
    println!(
        "  linear resolution over QQ:  {}",
        has_linear_resolution(&terai, &char0).unwrap()
    );
    println!(
        "  linear resolution over F_2: {}",
        has_linear_resolution(&terai, &char2).unwrap()
    );
    let square = terai.power(2, 10_000).unwrap();
    println!(
        "  square: generated in degree 6, regularity {} -> linear: {}",
        regularity_of_ideal(&square, &char0).unwrap(),
        has_linear_resolution(&square, &char0).unwrap()
    );

    let ordered = sturmfels_ordered_generators();
    println!("\nsecond fixture, in its given generator order:");
    for g in &ordered {
        println!("  {g}");
    }
    println!(
        "  linear quotients in this order: {}",
        has_linear_quotients(&ordered).unwrap()
    );
    let ideal = MonomialIdeal::minimalize(6, ordered).unwrap();
    let square = ideal.power(2, 10_000).unwrap();
    println!(
        "  square has a linear resolution: {}",
        has_linear_resolution(&square, &char0).unwrap()
    );
}
