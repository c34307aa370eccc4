use mcf_classify::delta::{self, DeltaSubgroup};
use mcf_classify::theorem::{theorem_case, FusionSummary, Gamma1Kind, OpKind};
use mcf_fusion::ClassTag;
use proptest::prelude::*;

const PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 17];

fn tag(i: u8) -> ClassTag {
    [ClassTag::AbelianPearl, ClassTag::ExtraspecialPearl, ClassTag::Gamma1, ClassTag::CZ2, ClassTag::Other][i as usize % 5]
}

proptest! {
    #[test]
    fn delta_subgroups_are_closed_of_order_p_minus_one(pi in 0usize..6, k in -12i64..12, l in -12i64..12) {
        let p = PRIMES[pi];
        if let Some(d) = DeltaSubgroup::new(p, k, l) {
            prop_assert!(delta::is_subgroup(p, &d.elements));
            prop_assert_eq!(d.order() as u64, p - 1);
            for &(a, b) in &d.elements {
                prop_assert!(a > 0 && a < p && b > 0 && b < p);
            }
        }
    }

    #[test]
    fn theorem_case_is_total_and_deterministic(
        pi in 0usize..6,
        n in 3u32..20,
        exceptional: bool,
        g1 in 0u8..3,
        tags in proptest::collection::vec(0u8..5, 0..4),
        op in 0u8..5,
        hyp in proptest::option::of(0u32..3),
    ) {
        let s = FusionSummary {
            p: PRIMES[pi],
            n,
            exceptional,
            gamma1: [Gamma1Kind::Abelian, Gamma1Kind::Extraspecial, Gamma1Kind::Other][g1 as usize],
            essentials: tags.into_iter().map(tag).collect(),
            op: [OpKind::Trivial, OpKind::Center, OpKind::InsideGamma2, OpKind::CZ2, OpKind::Other][op as usize],
            hyp_index_log: hyp,
            out_s_order: None,
            out_s_cyclic: None,
            out_gamma1_order: None,
            out_cz2_order: None,
            gamma1_facts: None,
            identified: None,
            reduced: None,
        };
        match (s.validate(), theorem_case(&s)) {
            (Ok(()), Ok(r)) => {
                prop_assert!(!r.case_path.is_empty());
                prop_assert!(!r.checks.is_empty());
                prop_assert_eq!(theorem_case(&s).unwrap(), r);
            }
            (Err(_), Err(_)) => {}
            (v, r) => prop_assert!(false, "validate {:?} but dispatch {:?}", v, r),
        }
    }
}
