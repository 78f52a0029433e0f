mod oracle;

use proptest::prelude::*;
use quasihyper::library::symmetric;
use quasihyper::{
    chief_series, chief_series_with, emit_group_file, hypercenter, hypercenter_oracle, inner_induction_hypercenter,
    intersection_of_class_maximal, parse_group_file, upper_central_series, Bounds, ClassOfGroups, Perm, PermGroup,
    TieBreak,
};

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

/// Subgroups of `S_degree` on one to three random generators.
fn group(degree: usize) -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(perm(degree), 1..=3).prop_map(move |gens| PermGroup::new(degree, gens).unwrap())
}

fn small_group() -> impl Strategy<Value = PermGroup> {
    (3usize..=5).prop_flat_map(group)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_and_inverse(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.conjugate_by(&b), b.inverse().compose(&a).compose(&b));
        prop_assert!(a.pow(a.order()).is_identity());
        let text = a.to_string();
        prop_assert_eq!(Perm::parse_cycles(7, &text).unwrap(), a);
    }

    #[test]
    fn chain_order_matches_closure(g in (3usize..=6).prop_flat_map(group)) {
        let brute = oracle::elements(&g);
        prop_assert_eq!(g.order(), brute.len() as u64);
        for x in &brute {
            prop_assert!(g.contains(x).unwrap());
        }
        let outside = symmetric(g.degree()).elements(1000).unwrap().perms().iter().filter(|x| !g.contains(x).unwrap()).count();
        prop_assert_eq!(outside as u64, symmetric(g.degree()).order() - g.order());
    }

    #[test]
    fn definition_text_round_trips(g in (2usize..=7).prop_flat_map(group)) {
        let back = parse_group_file(&emit_group_file(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn chief_series_invariants(g in small_group()) {
        let b = Bounds::default();
        for tie in [TieBreak::Least, TieBreak::Greatest] {
            let s = chief_series_with(&g, tie, &b).unwrap();
            prop_assert_eq!(s.factor_orders().iter().product::<u64>(), g.order());
            for t in s.terms() {
                prop_assert!(t.is_normal_in(&g));
            }
        }
        let mut lo = chief_series_with(&g, TieBreak::Least, &b).unwrap().factor_orders();
        let mut hi = chief_series_with(&g, TieBreak::Greatest, &b).unwrap().factor_orders();
        lo.sort_unstable();
        hi.sort_unstable();
        prop_assert_eq!(lo, hi);
    }

    #[test]
    fn hypercenter_properties(g in small_group()) {
        let b = Bounds::default();
        let n = ClassOfGroups::nilpotent();
        let nstar = ClassOfGroups::quasinilpotent();
        let zn = hypercenter(&g, &n, &b).unwrap().z;
        let zs = hypercenter(&g, &nstar, &b).unwrap().z;
        prop_assert!(zn.is_normal_in(&g));
        prop_assert!(zs.is_normal_in(&g));
        prop_assert!(zn.is_subgroup_of(&zs));
        let ucs = upper_central_series(&g, &b).unwrap();
        prop_assert_eq!(&zn, ucs.last().unwrap());
        prop_assert_eq!(&zs, &hypercenter_oracle(&g, &nstar, &b).unwrap());
        prop_assert_eq!(&zs, &inner_induction_hypercenter(&g, &b).unwrap());
        let trace = hypercenter(&g, &nstar, &b).unwrap().trace;
        let accepted: u64 = trace.iter().filter(|s| s.central).map(|s| s.factor_order).product();
        prop_assert_eq!(accepted, zs.order());
    }

    #[test]
    fn intersections_match_hypercenters(g in small_group()) {
        let b = Bounds::default();
        for x in [ClassOfGroups::nilpotent(), ClassOfGroups::quasinilpotent()] {
            let int = intersection_of_class_maximal(&g, &x, &b).unwrap();
            prop_assert!(int.is_normal_in(&g));
            prop_assert_eq!(int, hypercenter(&g, &x, &b).unwrap().z);
        }
    }

    #[test]
    fn chief_factors_are_minimal(g in small_group()) {
        let b = Bounds::default();
        let s = chief_series(&g, &b).unwrap();
        let elems = oracle::elements(&g);
        let normals = oracle::normal_subgroups(&elems, &elems);
        for cf in s.factors() {
            let lo = oracle::closure(g.degree(), cf.lower().generators());
            let hi = oracle::closure(g.degree(), cf.upper().generators());
            let between = normals.iter().any(|m| m.len() > lo.len() && m.len() < hi.len() && lo.is_subset(m) && m.is_subset(&hi));
            prop_assert!(!between);
        }
    }
}
