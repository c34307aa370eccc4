use mcf_groupkernel::construct;
use mcf_groupkernel::scan::{centralizer, normalizer, transporter_maps};
use mcf_groupkernel::{Caps, FiniteGroup, PcGroup, Perm, PermGroup, Subgroup};
use proptest::prelude::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::new(v).unwrap())
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..n, -4i64..5), 0..12)
}

fn normal_form_word(v: &[u8]) -> Vec<(usize, i64)> {
    v.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (i, e as i64)).collect()
}

fn check_collection(g: &PcGroup, w1: &[(usize, i64)], w2: &[(usize, i64)]) {
    let mut joined = w1.to_vec();
    joined.extend_from_slice(w2);
    let direct = g.collect(&joined).unwrap();
    let a = g.collect(w1).unwrap();
    let b = g.collect(w2).unwrap();
    let mut staged = normal_form_word(&a);
    staged.extend(normal_form_word(&b));
    assert_eq!(direct, g.collect(&staged).unwrap());
    assert_eq!(direct, g.mul(&a, &b));
    assert_eq!(g.collect(&normal_form_word(&direct)).unwrap(), direct);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_product_matches_enumeration(a in perm_strategy(6), b in perm_strategy(6)) {
        let g = PermGroup::new(6, vec![a, b]).unwrap();
        let product: u128 = g.orbit_lengths().iter().map(|&l| l as u128).product();
        prop_assert_eq!(product, g.order());
        let els = g.elements(1000).unwrap();
        prop_assert_eq!(els.len() as u128, g.order());
        let uniq: std::collections::HashSet<_> = els.iter().collect();
        prop_assert_eq!(uniq.len(), els.len());
        prop_assert!(els.iter().all(|x| g.contains(x)));
    }

    #[test]
    fn collection_is_associative_wreath(w1 in word_strategy(4), w2 in word_strategy(4)) {
        check_collection(&construct::wreath_pc(3).unwrap(), &w1, &w2);
    }

    #[test]
    fn collection_is_associative_d32(w1 in word_strategy(5), w2 in word_strategy(5)) {
        check_collection(&construct::dihedral_pc(5).unwrap(), &w1, &w2);
    }

    #[test]
    fn collection_is_associative_q16(w1 in word_strategy(4), w2 in word_strategy(4)) {
        check_collection(&construct::quaternion_pc(4).unwrap(), &w1, &w2);
    }

    #[test]
    fn lagrange_in_sym5(a in perm_strategy(5), b in perm_strategy(5)) {
        let s5 = construct::sym(5).unwrap();
        let h = Subgroup::generate(&s5, vec![a, b], 200).unwrap();
        prop_assert_eq!(120 % h.order(), 0);
        let bsgs = s5.subgroup(h.gens().to_vec()).unwrap();
        prop_assert_eq!(bsgs.order(), h.order());
    }

    #[test]
    fn automizer_from_transporters(a in perm_strategy(5)) {
        let s5 = construct::sym(5).unwrap();
        let caps = Caps::default();
        let h = Subgroup::generate(&s5, vec![a], 10).unwrap();
        let maps = transporter_maps(&s5, &h, &h, &caps).unwrap();
        let n = normalizer(&s5, &h, &caps).unwrap().order();
        let c = centralizer(&s5, &h, &caps).unwrap().order();
        prop_assert_eq!(maps.len() as u128, n / c);
        for f in &maps {
            for g in &maps {
                let fg = f.then(g).unwrap();
                prop_assert!(maps.iter().any(|m| m.same_map(&fg)));
            }
        }
    }
}
