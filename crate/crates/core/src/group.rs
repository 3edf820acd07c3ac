//! Concrete finite groups: dense multiplication table over element ids,
//! with the identity fixed at id 0.
//!
//! Groups are built by closing a set of permutation generators; ids are
//! assigned in breadth-first closure order, so identical generator input
//! always yields an identical table.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm;

pub const DEFAULT_ORDER_CAP: usize = 4096;

/// A permutation realization: each element as an image array of fixed degree.
#[derive(Debug, Clone)]
pub struct PermRealization {
    pub degree: usize,
    /// Indexed by element id.
    pub images: Vec<Vec<u32>>,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major d×d table: `mul[a*d + b]` is the id of a·b.
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    pub label: Option<String>,
    pub perm: Option<PermRealization>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub const IDENTITY: u32 = 0;

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn elem_order(&self, a: u32) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        // g x g^{-1}
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        let mut acc = Self::IDENTITY;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn is_abelian(&self) -> bool {
        let d = self.order as u32;
        for a in 0..d {
            for b in (a + 1)..d {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_elem_order(&self) -> u32 {
        self.elem_order.iter().copied().max().unwrap_or(1)
    }

    pub fn has_element_of_order(&self, m: u32) -> bool {
        self.elem_order.iter().any(|&o| o == m)
    }

    /// Closure of `seed` under the group operation, as a sorted id list.
    pub fn closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut member = vec![false; self.order];
        let mut list = vec![Self::IDENTITY];
        member[Self::IDENTITY as usize] = true;
        for &s in seed {
            if !member[s as usize] {
                member[s as usize] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &s in seed {
                let p = self.mul(a, s);
                if !member[p as usize] {
                    member[p as usize] = true;
                    list.push(p);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// True iff `elems` generates the whole group; exits early once the
    /// closure reaches full order.
    pub fn generates(&self, elems: &[u32]) -> bool {
        let mut member = vec![false; self.order];
        let mut list = vec![Self::IDENTITY];
        member[Self::IDENTITY as usize] = true;
        for &s in elems {
            if !member[s as usize] {
                member[s as usize] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            if list.len() == self.order {
                return true;
            }
            let a = list[i];
            for &s in elems {
                let p = self.mul(a, s);
                if !member[p as usize] {
                    member[p as usize] = true;
                    list.push(p);
                }
            }
            i += 1;
        }
        list.len() == self.order
    }

    /// Minimal number of generators of the abelianization G/[G,G], read off
    /// the elementary divisor structure of the finite abelian quotient.
    pub fn abelianization_min_generators(&self) -> usize {
        let d = self.order as u32;
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order];
        for a in 0..d {
            for b in 0..d {
                let c = self.commutator(a, b);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    comms.push(c);
                }
            }
        }
        let derived = self.closure(&comms);
        let mut in_derived = vec![false; self.order];
        for &n in &derived {
            in_derived[n as usize] = true;
        }

        // Cosets of the derived subgroup form the abelianization.
        let mut coset_of = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..d {
            if coset_of[g as usize] == u32::MAX {
                let id = reps.len() as u32;
                for &n in &derived {
                    coset_of[self.mul(n, g) as usize] = id;
                }
                reps.push(g);
            }
        }
        let q = reps.len();
        if q == 1 {
            return 0;
        }
        let qmul = |a: usize, b: usize| coset_of[self.mul(reps[a], reps[b]) as usize] as usize;
        let qpow = |a: usize, e: u64| {
            let mut acc = 0usize;
            for _ in 0..e {
                acc = qmul(acc, a);
            }
            acc
        };

        // Rank at p is log_p |Q/pQ|; the answer is the maximum over p | |Q|.
        let mut best = 0usize;
        let mut rest = q;
        let mut p = 2usize;
        while rest > 1 {
            if rest % p == 0 {
                while rest % p == 0 {
                    rest /= p;
                }
                let mut image = vec![false; q];
                let mut count = 0usize;
                for a in 0..q {
                    let ap = qpow(a, p as u64);
                    if !image[ap] {
                        image[ap] = true;
                        count += 1;
                    }
                }
                let quot = q / count;
                let mut rank = 0usize;
                let mut t = quot;
                while t > 1 {
                    debug_assert_eq!(t % p, 0);
                    t /= p;
                    rank += 1;
                }
                best = best.max(rank);
            }
            p += 1;
            if p * p > rest && rest > 1 {
                p = rest;
            }
        }
        best
    }
}

/// Close permutation generators to a full group, assigning element ids in
/// breadth-first order from the identity.
pub fn build_group(generators: &[Vec<u32>], degree: usize, order_cap: usize) -> Result<FiniteGroup> {
    for g in generators {
        perm::validate(g, degree)?;
    }
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut elems: Vec<Vec<u32>> = Vec::new();
    let e = perm::identity(degree);
    index.insert(e.clone(), 0);
    elems.push(e);
    let mut i = 0usize;
    while i < elems.len() {
        for g in generators {
            let p = perm::product(&elems[i], g);
            if !index.contains_key(&p) {
                if elems.len() >= order_cap {
                    return Err(Error::GroupTooLarge { cap: order_cap });
                }
                index.insert(p.clone(), elems.len() as u32);
                elems.push(p);
            }
        }
        i += 1;
    }
    let d = elems.len();
    let mut mul = vec![0u32; d * d];
    for a in 0..d {
        for b in 0..d {
            let p = perm::product(&elems[a], &elems[b]);
            mul[a * d + b] = index[&p];
        }
    }
    finish_group(d, mul, Some(PermRealization { degree, images: elems }), None)
}

fn finish_group(
    d: usize,
    mul: Vec<u32>,
    perm: Option<PermRealization>,
    label: Option<String>,
) -> Result<FiniteGroup> {
    let mut inv = vec![u32::MAX; d];
    for a in 0..d {
        for b in 0..d {
            if mul[a * d + b] == 0 {
                inv[a] = b as u32;
                break;
            }
        }
    }
    let mut elem_order = vec![0u32; d];
    for a in 0..d as u32 {
        let mut x = a;
        let mut k = 1u32;
        while x != 0 {
            x = mul[x as usize * d + a as usize];
            k += 1;
        }
        elem_order[a as usize] = if a == 0 { 1 } else { k };
    }
    Ok(FiniteGroup {
        order: d,
        mul,
        inv,
        elem_order,
        label,
        perm,
    })
}

/// Standard families used by the catalog tooling and the test suite.
pub mod families {
    use super::*;

    pub fn trivial() -> FiniteGroup {
        let mut g = build_group(&[], 1, 2).unwrap();
        g.label = Some("1".into());
        g
    }

    pub fn cyclic(n: u32) -> FiniteGroup {
        assert!(n >= 1);
        if n == 1 {
            return trivial();
        }
        let cycle: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
        let mut g = build_group(&[cycle], n as usize, n as usize + 1).unwrap();
        g.label = Some(format!("Z{n}"));
        g
    }

    /// Direct product of cyclic groups of the given orders.
    pub fn abelian(factors: &[u32]) -> FiniteGroup {
        assert!(!factors.is_empty() && factors.iter().all(|&f| f >= 1));
        let degree: usize = factors.iter().map(|&f| f as usize).sum();
        let order: usize = factors.iter().map(|&f| f as usize).product();
        let mut gens = Vec::new();
        let mut offset = 0u32;
        for &f in factors {
            let mut p = perm::identity(degree);
            for i in 0..f {
                p[(offset + i) as usize] = offset + (i + 1) % f;
            }
            gens.push(p);
            offset += f;
        }
        let mut g = build_group(&gens, degree, order + 1).unwrap();
        let names: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
        g.label = Some(names.join("x"));
        g
    }

    /// Dihedral group of order 2n.
    pub fn dihedral(n: u32) -> FiniteGroup {
        assert!(n >= 1);
        let mut g = match n {
            1 => cyclic(2),
            2 => abelian(&[2, 2]),
            _ => {
                let rot: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
                let refl: Vec<u32> = (0..n).map(|i| (n - i) % n).collect();
                build_group(&[rot, refl], n as usize, 2 * n as usize + 1).unwrap()
            }
        };
        g.label = Some(format!("D{n}"));
        g
    }

    /// Generalized dihedral group A ⋊ Z₂ with the inverting action, for the
    /// abelian group with the given cyclic factors. Realized on |A| + 2
    /// points so that the inversion stays faithful when A has exponent 2.
    pub fn generalized_dihedral(factors: &[u32]) -> FiniteGroup {
        assert!(!factors.is_empty() && factors.iter().all(|&f| f >= 1));
        let a_order: usize = factors.iter().map(|&f| f as usize).product();
        let degree = a_order + 2;
        // Point i < |A| encodes the mixed-radix tuple of an element of A.
        let decode = |mut i: usize| {
            let mut t = Vec::with_capacity(factors.len());
            for &f in factors {
                t.push((i % f as usize) as u32);
                i /= f as usize;
            }
            t
        };
        let encode = |t: &[u32]| {
            let mut i = 0usize;
            for (k, &f) in factors.iter().enumerate().rev() {
                i = i * f as usize + t[k] as usize;
            }
            i
        };
        let mut gens = Vec::new();
        for (k, &f) in factors.iter().enumerate() {
            let mut p = perm::identity(degree);
            for i in 0..a_order {
                let mut t = decode(i);
                t[k] = (t[k] + 1) % f;
                p[i] = encode(&t) as u32;
            }
            gens.push(p);
        }
        let mut invp = perm::identity(degree);
        for i in 0..a_order {
            let t = decode(i);
            let neg: Vec<u32> = t
                .iter()
                .zip(factors)
                .map(|(&x, &f)| (f - x) % f)
                .collect();
            invp[i] = encode(&neg) as u32;
        }
        invp.swap(a_order, a_order + 1);
        gens.push(invp);
        let mut g = build_group(&gens, degree, 2 * a_order + 1).unwrap();
        let names: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
        g.label = Some(format!("GD({})", names.join("x")));
        g
    }

    pub fn symmetric(n: u32) -> FiniteGroup {
        assert!(n >= 1);
        if n == 1 {
            return trivial();
        }
        let mut gens = Vec::new();
        let mut swap = perm::identity(n as usize);
        swap.swap(0, 1);
        gens.push(swap);
        if n >= 3 {
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        let order: usize = (1..=n as usize).product();
        let mut g = build_group(&gens, n as usize, order + 1).unwrap();
        g.label = Some(format!("S{n}"));
        g
    }

    pub fn alternating(n: u32) -> FiniteGroup {
        assert!(n >= 1);
        if n <= 2 {
            return trivial();
        }
        let mut gens = Vec::new();
        for i in 2..n {
            // 3-cycle (0 1 i)
            let mut p = perm::identity(n as usize);
            p[0] = 1;
            p[1] = i;
            p[i as usize] = 0;
            gens.push(p);
        }
        let order: usize = (1..=n as usize).product::<usize>() / 2;
        let mut g = build_group(&gens, n as usize, order + 1).unwrap();
        g.label = Some(format!("A{n}"));
        g
    }

    /// Direct product acting on the disjoint union of the factors' points.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let pa = a
            .perm
            .as_ref()
            .ok_or_else(|| Error::Config("direct product needs permutation realizations".into()))?;
        let pb = b
            .perm
            .as_ref()
            .ok_or_else(|| Error::Config("direct product needs permutation realizations".into()))?;
        let degree = pa.degree + pb.degree;
        let mut gens = Vec::new();
        for ga in gens_of(a, pa) {
            let mut p = perm::identity(degree);
            p[..pa.degree].copy_from_slice(&ga);
            gens.push(p);
        }
        for gb in gens_of(b, pb) {
            let mut p = perm::identity(degree);
            for (i, &x) in gb.iter().enumerate() {
                p[pa.degree + i] = pa.degree as u32 + x;
            }
            gens.push(p);
        }
        let cap = a.order() * b.order() + 1;
        let mut g = build_group(&gens, degree, cap)?;
        g.label = match (&a.label, &b.label) {
            (Some(x), Some(y)) => Some(format!("{x}x{y}")),
            _ => None,
        };
        Ok(g)
    }

    /// A small generating set of element images, found by greedy closure.
    fn gens_of(g: &FiniteGroup, p: &PermRealization) -> Vec<Vec<u32>> {
        let mut ids = Vec::new();
        let mut cl = g.closure(&ids);
        for x in g.elements() {
            if cl.len() == g.order() {
                break;
            }
            if cl.binary_search(&x).is_err() {
                ids.push(x);
                cl = g.closure(&ids);
            }
        }
        ids.iter().map(|&x| p.images[x as usize].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn check_axioms(g: &FiniteGroup) {
        let d = g.order() as u32;
        for a in 0..d {
            assert_eq!(g.mul(a, FiniteGroup::IDENTITY), a);
            assert_eq!(g.mul(FiniteGroup::IDENTITY, a), a);
            assert_eq!(g.mul(a, g.inv(a)), FiniteGroup::IDENTITY);
            assert_eq!(g.mul(g.inv(a), a), FiniteGroup::IDENTITY);
        }
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        // element orders match the least k >= 1 with g^k = e
        for a in 0..d {
            let mut x = a;
            let mut k = 1;
            while x != FiniteGroup::IDENTITY {
                x = g.mul(x, a);
                k += 1;
            }
            let expect = if a == 0 { 1 } else { k };
            assert_eq!(g.elem_order(a), expect);
        }
    }

    #[test]
    fn transposition_generates_z2() {
        let g = build_group(&[vec![1, 0]], 2, 16).unwrap();
        assert_eq!(g.order(), 2);
        check_axioms(&g);
    }

    #[test]
    fn sym4_from_standard_generators() {
        let g = build_group(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 4, 64).unwrap();
        assert_eq!(g.order(), 24);
        // order multiset {1×1, 9×2, 8×3, 6×4}
        let mut counts = std::collections::BTreeMap::new();
        for a in g.elements() {
            *counts.entry(g.elem_order(a)).or_insert(0u32) += 1;
        }
        assert_eq!(
            counts.into_iter().collect::<Vec<_>>(),
            vec![(1, 1), (2, 9), (3, 8), (4, 6)]
        );
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(matches!(
            build_group(&[vec![0, 0]], 2, 16),
            Err(Error::InvalidPermutation { .. })
        ));
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            build_group(&[vec![1, 2, 3, 0]], 4, 3),
            Err(Error::GroupTooLarge { cap: 3 })
        ));
    }

    #[test]
    fn cyclic5_element_orders() {
        let g = cyclic(5);
        assert_eq!(g.order(), 5);
        let mut orders: Vec<u32> = g.elements().map(|a| g.elem_order(a)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 5, 5, 5, 5]);
        check_axioms(&g);
    }

    #[test]
    fn generalized_dihedral_3x3() {
        let g = generalized_dihedral(&[3, 3]);
        assert_eq!(g.order(), 18);
        assert!(!g.is_abelian());
        // nine involutions outside the abelian part
        let invol = g.elements().filter(|&a| g.elem_order(a) == 2).count();
        assert_eq!(invol, 9);
        check_axioms(&g);
    }

    #[test]
    fn generalized_dihedral_of_exponent_two_is_faithful() {
        let g = generalized_dihedral(&[2, 2]);
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_family_orders() {
        for n in 1..=9 {
            let g = dihedral(n);
            assert_eq!(g.order(), 2 * n as usize);
            check_axioms(&g);
        }
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
    }

    #[test]
    fn direct_product_order() {
        let g = direct_product(&cyclic(3), &symmetric(3)).unwrap();
        assert_eq!(g.order(), 18);
        check_axioms(&g);
    }

    #[test]
    fn generates_sym4() {
        let g = build_group(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 4, 64).unwrap();
        // the two original generators are elements 1 and 2 in BFS order;
        // recover them through the permutation realization instead.
        let p = g.perm.as_ref().unwrap();
        let find = |img: &[u32]| {
            g.elements()
                .find(|&x| p.images[x as usize] == img)
                .unwrap()
        };
        let t = find(&[1, 0, 2, 3]);
        let c = find(&[1, 2, 3, 0]);
        assert!(g.generates(&[t, c]));
        // two commuting transpositions close to a Klein four group
        let t2 = find(&[0, 1, 3, 2]);
        assert!(!g.generates(&[t, t2]));
        assert_eq!(g.closure(&[t, t2]).len(), 4);
    }

    #[test]
    fn generates_empty_set_only_for_trivial() {
        assert!(trivial().generates(&[]));
        assert!(!cyclic(2).generates(&[]));
    }

    #[test]
    fn abelianization_ranks() {
        assert_eq!(abelian(&[2, 2, 2]).abelianization_min_generators(), 3);
        assert_eq!(symmetric(4).abelianization_min_generators(), 1);
        assert_eq!(cyclic(12).abelianization_min_generators(), 1);
        assert_eq!(trivial().abelianization_min_generators(), 0);
        assert_eq!(abelian(&[6, 2]).abelianization_min_generators(), 2);
        assert_eq!(alternating(4).abelianization_min_generators(), 1);
    }

    #[test]
    fn axioms_for_all_small_families() {
        for g in [
            trivial(),
            cyclic(7),
            abelian(&[4, 2]),
            dihedral(6),
            generalized_dihedral(&[5]),
            alternating(4),
        ] {
            check_axioms(&g);
        }
    }

    #[test]
    fn permutation_realization_matches_table() {
        let g = dihedral(5);
        let p = g.perm.as_ref().unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let prod = perm::product(&p.images[a as usize], &p.images[b as usize]);
                assert_eq!(p.images[g.mul(a, b) as usize], prod);
            }
        }
    }
}
