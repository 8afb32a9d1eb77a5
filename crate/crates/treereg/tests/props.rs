//! Property tests for the arithmetic core and the combinatorial layers.

use proptest::prelude::*;

use treereg::complex::SimplicialComplex;
use treereg::koszul::{self, OracleConfig};
use treereg::monomial::{Monomial, MonomialIdeal};
use treereg::{BettiTable, FieldSpec};

fn small_monomial(vars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, vars).prop_map(Monomial::new)
}

fn small_ideal(vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(small_monomial(vars, 3), 1..5)
        .prop_map(move |gens| MonomialIdeal::minimalize(vars, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent(gens in proptest::collection::vec(small_monomial(4, 3), 0..8)) {
        let once = MonomialIdeal::minimalize(4, gens).unwrap();
        let twice = MonomialIdeal::minimalize(4, once.generators().to_vec()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn every_input_stays_divisible(gens in proptest::collection::vec(small_monomial(4, 3), 1..8)) {
        let ideal = MonomialIdeal::minimalize(4, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(ideal.contains(g));
        }
    }

    #[test]
    fn power_products_compose(ideal in small_ideal(3), a in 1u32..3, b in 1u32..3) {
        let lhs = ideal
            .power(a, 50_000)
            .unwrap()
            .product(&ideal.power(b, 50_000).unwrap(), 50_000)
            .unwrap();
        let rhs = ideal.power(a + b, 50_000).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn colon_of_scaled_ideal_recovers_it(ideal in small_ideal(3), m in small_monomial(3, 2)) {
        let scaled = ideal.product(&MonomialIdeal::principal(m.clone()), 50_000).unwrap();
        prop_assert_eq!(scaled.colon_monomial(&m).unwrap(), ideal);
    }

    #[test]
    fn disjoint_variable_colons(
        u_exp in proptest::collection::vec(0u32..3, 2),
        v_exp in proptest::collection::vec(0u32..3, 2),
        w_exp in proptest::collection::vec(0u32..3, 4),
    ) {
        // u lives on variables 0..2, v on 2..4, w anywhere.
        let mut ue = u_exp.clone();
        ue.extend([0, 0]);
        let mut ve = vec![0, 0];
        ve.extend(v_exp.clone());
        let u = Monomial::new(ue);
        let v = Monomial::new(ve);
        let w = Monomial::new(w_exp);
        prop_assume!(!u.is_unit() && !v.is_unit());
        let uw = u.mul(&w);
        let vw = v.mul(&w);
        let ideal = MonomialIdeal::minimalize(4, vec![uw.clone(), vw.clone()]).unwrap();
        // (uw, vw) : uw = (1)
        prop_assert!(ideal.colon_monomial(&uw).unwrap().is_unit());
        // (uw) : vw = (u) since u and v share no variable
        let principal = MonomialIdeal::principal(uw).colon_monomial(&vw).unwrap();
        prop_assert_eq!(principal, MonomialIdeal::principal(u));
    }

    #[test]
    fn gcd_lcm_degree_identity(a in small_monomial(5, 4), b in small_monomial(5, 4)) {
        let gcd = a.gcd(&b);
        let lcm = a.lcm(&b);
        prop_assert!(gcd.divides(&a) && gcd.divides(&b));
        prop_assert!(a.divides(&lcm) && b.divides(&lcm));
        prop_assert_eq!(gcd.degree() + lcm.degree(), a.degree() + b.degree());
    }
}

/// Random incomparable facet families, for forest-recognition agreement.
fn facet_family() -> impl Strategy<Value = Vec<Vec<usize>>> {
    proptest::collection::vec(proptest::collection::btree_set(0usize..6, 1..4), 1..5)
        .prop_map(|sets| {
            let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            // keep only inclusion-maximal ones
            let mut kept: Vec<Vec<usize>> = Vec::new();
            for s in &sets {
                if !sets
                    .iter()
                    .any(|t| t != s && s.iter().all(|v| t.contains(v)) && t.len() > s.len())
                {
                    kept.push(s.clone());
                }
            }
            kept.dedup();
            kept
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn greedy_forest_recognition_matches_exhaustive(facets in facet_family()) {
        let used: std::collections::BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let relabel: Vec<usize> = used.iter().copied().collect();
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|v| relabel.binary_search(v).unwrap()).collect())
            .collect();
        let complex = SimplicialComplex::new(relabel.len().max(1), facets);
        prop_assume!(complex.is_ok());
        let complex = complex.unwrap();
        prop_assert_eq!(
            complex.good_leaf_order().is_some(),
            complex.has_good_leaf_order_exhaustive()
        );
    }

    #[test]
    fn peeling_a_good_leaf_order_preserves_forests(facets in facet_family()) {
        let used: std::collections::BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let relabel: Vec<usize> = used.iter().copied().collect();
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|v| relabel.binary_search(v).unwrap()).collect())
            .collect();
        let complex = SimplicialComplex::new(relabel.len().max(1), facets);
        prop_assume!(complex.is_ok());
        let complex = complex.unwrap();
        if let Some(order) = complex.good_leaf_order() {
            // dropping the last facet keeps a forest, all the way down
            for keep in (1..order.len()).rev() {
                let sub: Vec<Vec<usize>> = order[..keep]
                    .iter()
                    .map(|&i| complex.facet(i).to_vec())
                    .collect();
                let used: std::collections::BTreeSet<usize> = sub.iter().flatten().copied().collect();
                let relabel: Vec<usize> = used.iter().copied().collect();
                let sub: Vec<Vec<usize>> = sub
                    .iter()
                    .map(|f| f.iter().map(|v| relabel.binary_search(v).unwrap()).collect())
                    .collect();
                let sub = SimplicialComplex::new(relabel.len(), sub).unwrap();
                prop_assert!(sub.is_forest());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The table of a tiny random squarefree ideal agrees across two exact
    /// coefficient fields of large characteristic (torsion this small cannot
    /// involve 31991 or 32003), and its generator row is always right.
    #[test]
    fn tiny_tables_are_consistent(
        supports in proptest::collection::btree_set(
            proptest::collection::btree_set(0usize..5, 1..4),
            1..4,
        )
    ) {
        let gens: Vec<Monomial> = supports
            .iter()
            .map(|s| Monomial::squarefree(s.iter().copied(), 5))
            .collect();
        let ideal = MonomialIdeal::minimalize(5, gens).unwrap();
        prop_assume!(!ideal.is_unit());
        let a = koszul::graded_betti(&ideal, &OracleConfig::with_field(FieldSpec::Prime(32003))).unwrap();
        let b = koszul::graded_betti(&ideal, &OracleConfig::with_field(FieldSpec::Prime(31991))).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.generator_count(), ideal.num_generators() as u64);
    }
}

#[test]
fn betti_table_layout_is_stable() {
    let mut table = BettiTable::new();
    table.add(0, 2, 3);
    table.add(1, 3, 2);
    table.add(2, 5, 1);
    let tsv = table.to_tsv();
    assert!(tsv.contains("i\\(j-i)"));
    assert_eq!(table.regularity(), Some(3));
}
