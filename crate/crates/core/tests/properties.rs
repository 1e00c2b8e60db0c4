#![allow(clippy::needless_range_loop)]

mod common;

use std::sync::Arc;

use proptest::prelude::*;

use common::*;
use hetcat::adjoint::{assemble_adjunction, verify_adjunctive_square};
use hetcat::cli::spec::{parse_spec, serialize, SpecDocument};
use hetcat::represent::{
    find_left_representation, find_right_representation, left_representations,
};
use hetcat::{FinCategory, FinFunctor, HetBuilder, Obj, Semiadjunction};

/// A relation between chains `0..=n` and `0..=m`, closed downward in the
/// sending variable and upward in the receiving one.
fn monotone_relation() -> impl Strategy<Value = (usize, usize, Vec<Vec<bool>>)> {
    (0usize..=6, 0usize..=4).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), m + 1), n + 1).prop_map(
            move |seed| {
                let rel = (0..=n)
                    .map(|x| {
                        (0..=m)
                            .map(|a| (x..=n).any(|x2| (0..=a).any(|a2| seed[x2][a2])))
                            .collect()
                    })
                    .collect();
                (n, m, rel)
            },
        )
    })
}

fn relation_het(
    n: usize,
    m: usize,
    rel: &[Vec<bool>],
) -> Result<hetcat::HetBifunctor, hetcat::ValidationReport> {
    let mut b = HetBuilder::new();
    for x in 0..=n {
        for a in 0..=m {
            if rel[x][a] {
                b.rel(&x.to_string(), &a.to_string());
            }
        }
    }
    b.build(
        Arc::new(FinCategory::chain(n + 1)),
        Arc::new(FinCategory::chain(m + 1)),
    )
}

fn closed(n: usize, m: usize, rel: &[Vec<bool>]) -> bool {
    (0..=n).all(|x| {
        (0..=m).all(|a| !rel[x][a] || ((x == 0 || rel[x - 1][a]) && (a == m || rel[x][a + 1])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monotone_relations_are_hets((n, m, rel) in monotone_relation()) {
        prop_assert!(relation_het(n, m, &rel).is_ok());
    }

    #[test]
    fn relation_shorthand_needs_monotonicity(
        (n, m) in (0usize..=4, 0usize..=3),
        bits in prop::collection::vec(any::<bool>(), 25),
    ) {
        let rel: Vec<Vec<bool>> = (0..=n).map(|x| (0..=m).map(|a| bits[x * 5 + a]).collect()).collect();
        prop_assert_eq!(relation_het(n, m, &rel).is_ok(), closed(n, m, &rel));
    }

    #[test]
    fn search_matches_upset_oracle((n, m, rel) in monotone_relation()) {
        let het = relation_het(n, m, &rel).unwrap();
        let left = upset_left(n, m, |x, a| rel[x][a]);
        let right = downset_right(n, m, |x, a| rel[x][a]);
        for x in 0..=n {
            let got = find_left_representation(&het, het.sending().objects().nth(x).unwrap()).map(|u| u.rep.index());
            prop_assert_eq!(got, left[x]);
        }
        for a in 0..=m {
            let got = find_right_representation(&het, het.receiving().objects().nth(a).unwrap()).map(|u| u.rep.index());
            prop_assert_eq!(got, right[a]);
        }
        let semi = Semiadjunction::build_left(Arc::new(het));
        prop_assert_eq!(semi.is_ok(), left.iter().all(Option::is_some));
        if let Ok(s) = semi {
            prop_assert!(s.verify().ok());
        }
    }

    #[test]
    fn adjunctions_of_random_connections((n, m, rel) in monotone_relation()) {
        let het = Arc::new(relation_het(n, m, &rel).unwrap());
        if let (Ok(l), Ok(r)) = (Semiadjunction::build_left(het.clone()), Semiadjunction::build_right(het.clone())) {
            let adj = assemble_adjunction(l, r).unwrap();
            for d in het.elements() {
                prop_assert!(verify_adjunctive_square(&adj, d).unwrap().commutes());
            }
        }
    }

    #[test]
    fn candidate_lists_match_brute_force((n, m, rel) in monotone_relation()) {
        let het = relation_het(n, m, &rel).unwrap();
        for x in het.sending().objects() {
            let found: Vec<_> = left_representations(&het, x).iter().map(|u| (u.rep, u.universal)).collect();
            prop_assert_eq!(found, brute_left_universals(&het, x));
        }
    }

    #[test]
    fn documents_round_trip((n, m, rel) in monotone_relation()) {
        let het = relation_het(n, m, &rel).unwrap();
        let mut doc = SpecDocument::new();
        doc.add_category("X", het.sending().clone()).unwrap();
        doc.add_category("A", het.receiving().clone()).unwrap();
        doc.add_het("h", "X", "A", Arc::new(het)).unwrap();
        let text = serialize(&doc);
        prop_assert_eq!(parse_spec(&text).unwrap(), doc);
    }

    #[test]
    fn preorders_are_categories(bits in prop::collection::vec(any::<bool>(), 16), n in 1usize..=4) {
        // reflexive-transitive closure of a random relation
        let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * 4 + j]).collect()).collect();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
                }
            }
        }
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let cat = FinCategory::from_preorder(&names, |i, j| r[i][j]).unwrap();
        prop_assert_eq!(cat.opposite().opposite(), cat.clone());
        let prod = FinCategory::product(&cat, &cat);
        prop_assert_eq!(prod.morphism_count(), cat.morphism_count().pow(2));
        let diag = FinFunctor::diagonal(Arc::new(cat.clone()));
        prop_assert_eq!(diag.target().object_count(), n * n);
    }

    #[test]
    fn monotone_maps_are_functors(map in prop::collection::vec(0usize..4, 5)) {
        let src = Arc::new(FinCategory::chain(5));
        let tgt = Arc::new(FinCategory::chain(4));
        let objs: Vec<Obj> = tgt.objects().collect();
        let f = FinFunctor::from_object_map(src, tgt.clone(), |x| objs[map[x.index()]]);
        prop_assert_eq!(f.is_ok(), map.windows(2).all(|w| w[0] <= w[1]));
    }
}
