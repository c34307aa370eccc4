use mcf_groupkernel::{Caps, GroupError, TableGroup};
use mcf_pgroup::PGroup;

use crate::error::Result;

/// An automorphism of a table group, stored as the image of every element.
/// Composition is on the right: `x(φψ) = (xφ)ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Auto {
    img: Vec<u32>,
}

impl Auto {
    pub fn identity(n: usize) -> Self {
        Auto { img: (0..n as u32).collect() }
    }

    /// Wraps an image array; the caller guarantees it is an automorphism.
    pub fn from_images(img: Vec<u32>) -> Self {
        Auto { img }
    }

    /// Conjugation `x ↦ g⁻¹xg`.
    pub fn inner(t: &TableGroup, g: u32) -> Self {
        Auto { img: (0..t.size() as u32).map(|x| t.conj(x, g)).collect() }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn then(&self, other: &Auto) -> Auto {
        Auto { img: self.img.iter().map(|&y| other.img[y as usize]).collect() }
    }

    pub fn inverse(&self) -> Auto {
        let mut inv = vec![0; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Auto { img: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn pow(&self, k: u64) -> Auto {
        let mut acc = Auto::identity(self.img.len());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.then(self);
            k += 1;
        }
        k
    }

    /// `φ^{p^k}` where `p^k` is the `p`-part of the order of `φ`.
    pub fn p_prime_part(&self, p: u64) -> Auto {
        let mut ord = self.order();
        let mut pk = 1;
        while ord % p == 0 {
            ord /= p;
            pk *= p;
        }
        self.pow(pk)
    }

    /// Checks multiplicativity and bijectivity on the whole table.
    pub fn is_automorphism(&self, t: &TableGroup) -> bool {
        let n = t.size() as u32;
        let mut seen = vec![false; n as usize];
        for &y in &self.img {
            if y >= n || std::mem::replace(&mut seen[y as usize], true) {
                return false;
            }
        }
        (0..n).all(|a| (0..n).all(|b| self.apply(t.mul(a, b)) == t.mul(self.apply(a), self.apply(b))))
    }
}

/// Spanning tree of the right Cayley graph for `gens`: `x = parent[x] · gens[letter[x]]`.
fn spanning_tree(t: &TableGroup, gens: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<usize>) {
    let n = t.size();
    let mut parent = vec![u32::MAX; n];
    let mut letter = vec![0usize; n];
    let mut order = vec![0u32];
    parent[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let a = order[k];
        k += 1;
        for (i, &g) in gens.iter().enumerate() {
            let b = t.mul(a, g);
            if parent[b as usize] == u32::MAX {
                parent[b as usize] = a;
                letter[b as usize] = i;
                order.push(b);
            }
        }
    }
    (order, parent, letter)
}

/// The full automorphism group, by trying every image tuple for a
/// minimal generating set. Sorted by image array.
pub fn aut_group_bruteforce(g: &PGroup, caps: &Caps) -> Result<Vec<Auto>> {
    let t = g.table();
    let n = t.size();
    if n > caps.aut_order {
        return Err(GroupError::cap("automorphism enumeration order", n as u128, caps.aut_order as u128).into());
    }
    let all = g.full();
    let gens = g.minimal_generators(&all);
    if gens.len() > caps.aut_rank {
        return Err(GroupError::cap("automorphism enumeration rank", gens.len() as u128, caps.aut_rank as u128).into());
    }
    let phi = t.frattini_pgroup(&all, g.prime());
    let (bfs, parent, letter) = spanning_tree(t, &gens);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            (0..n as u32)
                .filter(|&y| !phi.contains(y as usize) && t.elem_order_of(y) == t.elem_order_of(x))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut img = vec![0u32; n];
    let mut seen = vec![0u32; n];
    let mut stamp = 0u32;
    if candidates.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    'tuples: loop {
        let images: Vec<u32> = choice.iter().zip(&candidates).map(|(&c, v)| v[c]).collect();
        img[0] = 0;
        for &b in &bfs[1..] {
            img[b as usize] = t.mul(img[parent[b as usize] as usize], images[letter[b as usize]]);
        }
        stamp += 1;
        let mut ok = true;
        for &y in &img {
            if seen[y as usize] == stamp {
                ok = false;
                break;
            }
            seen[y as usize] = stamp;
        }
        if ok {
            'check: for a in 0..n as u32 {
                for (i, &gi) in gens.iter().enumerate() {
                    if img[t.mul(a, gi) as usize] != t.mul(img[a as usize], images[i]) {
                        ok = false;
                        break 'check;
                    }
                }
            }
        }
        if ok {
            out.push(Auto { img: img.clone() });
        }
        for pos in (0..choice.len()).rev() {
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                continue 'tuples;
            }
            choice[pos] = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcf_groupkernel::construct;

    fn pg(g: &mcf_groupkernel::PcGroup) -> PGroup {
        PGroup::from_pc(g, &Caps::default()).unwrap().0
    }

    #[test]
    fn klein_four_has_gl2_2() {
        let a = aut_group_bruteforce(&pg(&construct::elementary_abelian_pc(2, 2).unwrap()), &Caps::default()).unwrap();
        assert_eq!(a.len(), 6);
    }

    #[test]
    fn elementary_abelian_order_formula() {
        for p in [3u32, 5] {
            let a = aut_group_bruteforce(&pg(&construct::elementary_abelian_pc(p, 2).unwrap()), &Caps::default()).unwrap();
            let q = p as usize;
            assert_eq!(a.len(), (q * q - 1) * (q * q - q));
        }
    }

    #[test]
    fn extraspecial_27() {
        let g = pg(&construct::extraspecial_pc(3).unwrap());
        let a = aut_group_bruteforce(&g, &Caps::default()).unwrap();
        assert_eq!(a.len(), 48 * 9);
        assert!(a.iter().all(|f| f.is_automorphism(g.table())));
    }

    #[test]
    fn p_prime_parts() {
        let g = pg(&construct::elementary_abelian_pc(3, 2).unwrap());
        let a = aut_group_bruteforce(&g, &Caps::default()).unwrap();
        for f in &a {
            let o = f.order();
            let q = f.p_prime_part(3);
            let mut m = o;
            while m % 3 == 0 {
                m /= 3;
            }
            assert_eq!(q.order(), m);
        }
        let six = a.iter().find(|f| f.order() == 6).unwrap();
        assert_eq!(six.p_prime_part(3).order(), 2);
        let three = a.iter().find(|f| f.order() == 3).unwrap();
        assert!(three.p_prime_part(3).is_identity());
    }

    #[test]
    fn order_twelve_two_part() {
        // Aut(C13) is cyclic of order 12.
        let g = pg(&construct::cyclic_pc(13, 1).unwrap());
        let a = aut_group_bruteforce(&g, &Caps::default()).unwrap();
        assert_eq!(a.len(), 12);
        let twelve = a.iter().find(|f| f.order() == 12).unwrap();
        let q = twelve.p_prime_part(2);
        assert_eq!(q, twelve.pow(4));
        assert_eq!(q.order(), 3);
    }

    #[test]
    fn caps_refuse() {
        let g = pg(&construct::elementary_abelian_pc(2, 4).unwrap());
        assert!(aut_group_bruteforce(&g, &Caps::default()).unwrap_err().is_cap());
    }
}
