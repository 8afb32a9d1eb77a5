//! The broom closed form (t - 1) * ceil((h - t + 2) / (t + 1)) against the
//! true regularity: it is exact on bristle-free handles, and this example
//! reproduces the smallest broom that refutes it.
//!
//!     cargo run --example broom_regularity

use treereg::generate::{broom_tree, path_tree};
use treereg::koszul::{self, OracleConfig};
use treereg::rooted::{self, RegCalculator};

fn main() {
    let calc = RegCalculator::new();
    let oracle = OracleConfig::default();

    println!("bristle-free handles (directed paths):");
    for h in 2..=5u32 {
        let path = path_tree(h as usize + 1);
        for t in 2..=h.min(3) + 1 {
            let formula = rooted::reg_broom(&path, t).unwrap();
            let observed =
                koszul::regularity_of_quotient(&path.t_path_ideal(t), &oracle).unwrap();
            println!("  h = {h}, t = {t}: closed form {formula}, oracle {observed}");
            assert_eq!(formula, observed);
        }
    }

    println!("\nsmallest refuting broom: height 3, one extra leaf at level 1, t = 2");
    let broom = broom_tree(3, &[1, 0, 0]).unwrap();
    let t = 2;
    let formula = rooted::reg_broom(&broom, t).unwrap();
    let recursion = calc.tree_regularity(&broom, t).unwrap();
    let observed = koszul::regularity_of_quotient(&broom.t_path_ideal(t), &oracle).unwrap();
    println!("  closed form:        {formula}");
    println!("  recursion:          {recursion}");
    println!("  homology oracle:    {observed}");
    assert_eq!(recursion, observed);
    assert_ne!(formula, observed);
    println!(
        "  the two independent computations agree with each other and refute the closed form"
    );

    println!("\na bigger refutation: height 5, bristles at levels 1, 3, 5, t = 2");
    let broom = broom_tree(5, &[1, 0, 1, 0, 1]).unwrap();
    let formula = rooted::reg_broom(&broom, 2).unwrap();
    let observed = koszul::regularity_of_quotient(&broom.t_path_ideal(2), &oracle).unwrap();
    println!("  closed form {formula}, true value {observed}");
}
