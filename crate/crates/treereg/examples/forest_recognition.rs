//! Recognize simplicial forests, build good leaf orderings, and test the
//! intersection property with its reason codes.
//!
//!     cargo run --example forest_recognition

use treereg::complex::SimplicialComplex;

fn inspect(name: &str, complex: &SimplicialComplex) {
    println!("{name}: facets {:?}", complex.facets());
    println!("  dimension {}, pure: {}", complex.dimension(), complex.is_pure());
    match complex.good_leaf_order() {
        Some(order) => println!("  forest with good leaf order {order:?}"),
        None => println!("  not a simplicial forest"),
    }
    let status = complex.intersection_property();
    println!("  intersection property: {status:?}");
    if status.holds() {
        let order = complex.adjacent_good_leaf_order().unwrap();
        println!("  adjacent good leaf order: {order:?}");
        println!(
            "  ordering consequences check: {}",
            complex.ordering_consequences_check(&order)
        );
    }
    println!();
}

fn main() {
    let path = SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
    inspect("edge path", &path);

    let triangle = SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    inspect("triangle", &triangle);

    let two_dim =
        SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
    inspect("two-dimensional path", &two_dim);

    let gap = SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    inspect("gap pair", &gap);

    // Facet distances under the hypotheses that make them well defined.
    println!(
        "distance between the ends of the two-dimensional path: {}",
        two_dim.distance(0, 2).unwrap()
    );
}
