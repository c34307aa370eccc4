use mcf_groupkernel::{ElemSet, TableGroup};

/// `[H, H, …]` terms starting with `H` itself and ending at the trivial group.
pub fn lower_central(t: &TableGroup, h: &ElemSet) -> Vec<ElemSet> {
    let mut out = vec![h.clone()];
    loop {
        let last = out.last().expect("nonempty");
        if TableGroup::order_of(last) == 1 {
            return out;
        }
        let next = t.commutator(last, h);
        if next == *last {
            // Not nilpotent; cannot happen for p-groups.
            return out;
        }
        out.push(next);
    }
}

/// `1 = Z_0 < Z_1 < …` ending at `H`.
pub fn upper_central(t: &TableGroup, h: &ElemSet) -> Vec<ElemSet> {
    let mut out = vec![t.trivial()];
    loop {
        let last = out.last().expect("nonempty");
        if last == h {
            return out;
        }
        let next = t.centralizer_mod(h, h, last);
        if next == *last {
            return out;
        }
        out.push(next);
    }
}

/// Nilpotency class; zero for the trivial group.
pub fn class(t: &TableGroup, h: &ElemSet) -> u32 {
    lower_central(t, h).len() as u32 - 1
}

/// `[A, B; k] = [[A, B], B, …]` with `k` copies of `B`.
pub fn iterated_commutator(t: &TableGroup, a: &ElemSet, b: &ElemSet, k: u32) -> ElemSet {
    let mut cur = a.clone();
    for _ in 0..k {
        cur = t.commutator(&cur, b);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::construct;

    fn table(g: &mcf_groupkernel::PcGroup) -> TableGroup {
        TableGroup::from_group(g, 4096).unwrap().0
    }

    #[test]
    fn abelian_series() {
        let t = table(&construct::elementary_abelian_pc(3, 3).unwrap());
        let l = lower_central(&t, &t.full_set());
        assert_eq!(l.len(), 2);
        assert_eq!(TableGroup::order_of(&l[1]), 1);
    }

    #[test]
    fn dihedral_series() {
        let t = table(&construct::dihedral_pc(4).unwrap());
        let orders: Vec<usize> = lower_central(&t, &t.full_set()).iter().map(TableGroup::order_of).collect();
        assert_eq!(orders, vec![16, 4, 2, 1]);
        let z: Vec<usize> = upper_central(&t, &t.full_set()).iter().map(TableGroup::order_of).collect();
        assert_eq!(z, vec![1, 2, 4, 16]);
    }

    #[test]
    fn wreath_series() {
        let t = table(&construct::wreath_pc(3).unwrap());
        let orders: Vec<usize> = lower_central(&t, &t.full_set()).iter().map(TableGroup::order_of).collect();
        assert_eq!(orders, vec![81, 9, 3, 1]);
        assert_eq!(class(&t, &t.full_set()), 3);
    }
}
