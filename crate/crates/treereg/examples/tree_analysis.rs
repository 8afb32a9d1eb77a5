//! End-to-end analysis of one rooted tree: statistics, classification, clean
//! form, the path ideal and its complex, and every regularity route that
//! applies.
//!
//!     cargo run --example tree_analysis

use treereg::generate::broom_tree;
use treereg::koszul::{self, OracleConfig};
use treereg::rooted::{self, broom_facet_order, RegCalculator};

fn main() {
    // A broom of height 4 with bristles at levels 2 and 4.
    let tree = broom_tree(4, &[0, 1, 0, 2]).unwrap();
    let t = 3;

    let stats = tree.stats();
    println!("vertices: {}", tree.vertex_count());
    println!("height:   {}", stats.height);
    println!("leaves per level: {:?}", stats.leaf_count_by_level);
    let class = tree.classify();
    println!("perfect: {}, broom handle: {:?}", class.perfect, class.broom_handle);

    let (clean, kept) = tree.clean_form(t).unwrap();
    println!("clean form for t = {t} keeps {:?} ({} vertices)", kept, clean.vertex_count());

    let ideal = tree.t_path_ideal(t);
    println!("I_{t} = {ideal}");
    let (complex, _map) = tree.path_complex(t).unwrap();
    println!("path complex has {} facets and is a forest", complex.facet_count());

    let (ordered, order) = broom_facet_order(&clean, t).unwrap();
    println!("broom facet ordering (a good leaf order): {order:?}");
    for f in ordered.facets() {
        println!("  {f:?}");
    }

    let calc = RegCalculator::new();
    let recursion = calc.tree_regularity(&tree, t).unwrap();
    let oracle = koszul::regularity_of_quotient(&ideal, &OracleConfig::default()).unwrap();
    let bound = rooted::reg_upper_bound_general(&tree, t).unwrap();
    let alpha = rooted::alpha_bound(&calc, &tree, t).unwrap();
    println!("regularity of the quotient: recursion {recursion}, oracle {oracle}");
    println!("upper bounds: general {bound}, leaf-decomposition {alpha}");
    assert_eq!(recursion, oracle);
    assert!(bound >= oracle && alpha >= oracle);
}
