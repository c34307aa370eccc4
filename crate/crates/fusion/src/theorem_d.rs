//! Checks the shape of essential subgroups on a maximal-class Sylow.

use mcf_pgroup::{Structure, SubgroupSummary};
use serde::Serialize;

use crate::essential::{ClassTag, EssentialReport};
use crate::system::FusionSystem;

#[derive(Clone, Debug, Serialize)]
pub struct TheoremDReport {
    pub applicable: bool,
    pub pass: bool,
    pub exceptional: bool,
    pub witness: Option<SubgroupSummary>,
    pub detail: String,
}

/// Every essential is a pearl, `γ₁(S)` or `C_S(Z₂(S))`; when `S` is
/// exceptional every pearl is abelian.
pub fn verify_theorem_d(f: &FusionSystem, essentials: &[EssentialReport]) -> TheoremDReport {
    let st = Structure::new(f.sylow());
    if !st.maximal_class || st.n < 4 {
        return TheoremDReport {
            applicable: false,
            pass: false,
            exceptional: false,
            witness: None,
            detail: format!("requires maximal class of order at least p^4; order is p^{}", st.n),
        };
    }
    let exceptional = st.is_exceptional();
    for e in essentials {
        let bad = match e.class_tag {
            ClassTag::Other => Some("essential is neither a pearl nor gamma1 nor C_S(Z2)"),
            ClassTag::ExtraspecialPearl | ClassTag::QuaternionPearl if exceptional => {
                Some("non-abelian pearl on an exceptional group")
            }
            _ => None,
        };
        if let Some(why) = bad {
            return TheoremDReport {
                applicable: true,
                pass: false,
                exceptional,
                witness: Some(e.subgroup.clone()),
                detail: why.into(),
            };
        }
    }
    TheoremDReport {
        applicable: true,
        pass: true,
        exceptional,
        witness: None,
        detail: format!("{} essential classes checked", essentials.len()),
    }
}
