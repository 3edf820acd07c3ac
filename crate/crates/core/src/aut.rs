//! The full automorphism group of a finite group, as element-image arrays,
//! together with its induced action on conjugacy classes.
//!
//! Automorphisms are found by backtracking over images of a short generating
//! sequence, pruned by element order and class size; each partial assignment
//! is closed under products so inconsistent branches die early. The same
//! search, with relaxed candidate sets, enumerates homomorphisms between two
//! different groups; the catalog tooling uses that for isomorphism tests.

use std::collections::HashMap;

use crate::classes::{conjugacy_classes, ClassData};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    /// Image of every element id.
    pub images: Vec<u32>,
}

impl Automorphism {
    pub fn identity(d: usize) -> Self {
        Automorphism {
            images: perm::identity(d),
        }
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Exhaustive homomorphism-and-bijection check.
    pub fn is_valid_on(&self, g: &FiniteGroup) -> bool {
        if self.images.len() != g.order() || !perm::is_bijection(&self.images) {
            return false;
        }
        if self.apply(FiniteGroup::IDENTITY) != FiniteGroup::IDENTITY {
            return false;
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.apply(g.mul(a, b)) != g.mul(self.apply(a), self.apply(b)) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct AutGroup {
    /// Every automorphism, sorted by image array; index 0 is the identity.
    pub elements: Vec<Automorphism>,
    /// Indices of a small generating set (empty when the group is trivial).
    pub gens: Vec<usize>,
    /// Induced permutation of class ids, per automorphism.
    pub class_perms: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, images: &[u32]) -> Option<usize> {
        self.index.get(images).copied()
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let c = perm::product(&self.elements[a].images, &self.elements[b].images);
        self.index[&c]
    }

    pub fn gen_automorphisms(&self) -> impl Iterator<Item = &Automorphism> {
        self.gens.iter().map(|&i| &self.elements[i])
    }

    pub fn gen_class_perms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.gens.iter().map(|&i| &self.class_perms[i])
    }

    /// Generators of the subgroup whose induced class permutation fixes the
    /// given class multiset (a sorted class-id vector).
    pub fn class_multiset_stabilizer(&self, multiset: &[u32]) -> Vec<usize> {
        let fixes = |i: usize| {
            let cp = &self.class_perms[i];
            let mut moved: Vec<u32> = multiset.iter().map(|&c| cp[c as usize]).collect();
            moved.sort_unstable();
            moved == multiset
        };
        let members: Vec<usize> = (0..self.order()).filter(|&i| fixes(i)).collect();
        self.reduce_to_generators(&members)
    }

    /// Greedy generating subset of an explicitly listed subgroup.
    fn reduce_to_generators(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        let mut list = vec![0usize];
        for &m in members {
            if reached[m] {
                continue;
            }
            gens.push(m);
            // re-close the reachable set with the enlarged generator list
            let mut i = 0;
            if !reached[m] {
                reached[m] = true;
                list.push(m);
            }
            while i < list.len() {
                for &g in &gens {
                    let c = self.compose(list[i], g);
                    if !reached[c] {
                        reached[c] = true;
                        list.push(c);
                    }
                }
                i += 1;
            }
        }
        gens
    }
}

/// Enumerate all maps src -> dst determined by images of a generating
/// sequence, subject to homomorphism consistency. With `bijective` the
/// candidates are restricted by class size and exact order match and the
/// image must be injective, so the results are the isomorphisms.
/// Returns early with `None` if `limit` is hit.
pub fn search_maps(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    bijective: bool,
    limit: Option<usize>,
) -> Option<Vec<Vec<u32>>> {
    if bijective && src.order() != dst.order() {
        return Some(Vec::new());
    }
    let src_cd = conjugacy_classes(src);
    let dst_cd = conjugacy_classes(dst);
    let seq = generating_sequence(src, &src_cd);
    if seq.is_empty() {
        // trivial source group: only the map sending identity to identity
        return Some(vec![vec![FiniteGroup::IDENTITY]]);
    }

    // candidate images per slot
    let candidates: Vec<Vec<u32>> = seq
        .iter()
        .map(|&x| {
            let xo = src.elem_order(x);
            let xs = src_cd.class_size(src_cd.class_of[x as usize]);
            dst.elements()
                .filter(|&y| {
                    let yo = dst.elem_order(y);
                    if bijective {
                        yo == xo && dst_cd.class_size(dst_cd.class_of[y as usize]) == xs
                    } else {
                        xo % yo == 0
                    }
                })
                .collect()
        })
        .collect();

    let mut state = SearchState {
        src,
        dst,
        bijective,
        img: vec![u32::MAX; src.order()],
        used: vec![false; dst.order()],
        defined: Vec::new(),
        found: Vec::new(),
        limit,
        hit_limit: false,
    };
    state.assign_root();
    state.dfs(&seq, &candidates, 0);
    if state.hit_limit {
        None
    } else {
        Some(state.found)
    }
}

struct SearchState<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    bijective: bool,
    img: Vec<u32>,
    used: Vec<bool>,
    defined: Vec<u32>,
    found: Vec<Vec<u32>>,
    limit: Option<usize>,
    hit_limit: bool,
}

impl SearchState<'_> {
    fn assign_root(&mut self) {
        self.img[FiniteGroup::IDENTITY as usize] = FiniteGroup::IDENTITY;
        self.used[FiniteGroup::IDENTITY as usize] = true;
        self.defined.push(FiniteGroup::IDENTITY);
    }

    fn dfs(&mut self, seq: &[u32], candidates: &[Vec<u32>], depth: usize) {
        if self.hit_limit {
            return;
        }
        if depth == seq.len() {
            debug_assert_eq!(self.defined.len(), self.src.order());
            self.found.push(self.img.clone());
            if let Some(l) = self.limit {
                if self.found.len() >= l {
                    self.hit_limit = true;
                }
            }
            return;
        }
        let x = seq[depth];
        for i in 0..candidates[depth].len() {
            let y = candidates[depth][i];
            let mark = self.defined.len();
            if self.extend(x, y) {
                self.dfs(seq, candidates, depth + 1);
            }
            self.rollback(mark);
            if self.hit_limit {
                return;
            }
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.defined.len() > mark {
            let e = self.defined.pop().unwrap();
            let y = self.img[e as usize];
            self.img[e as usize] = u32::MAX;
            self.used[y as usize] = false;
        }
    }

    fn try_set(&mut self, e: u32, y: u32) -> bool {
        let cur = self.img[e as usize];
        if cur != u32::MAX {
            return cur == y;
        }
        if self.bijective && self.used[y as usize] {
            return false;
        }
        self.img[e as usize] = y;
        self.used[y as usize] = true;
        self.defined.push(e);
        true
    }

    /// Assign x -> y and propagate product consistency to a fixed point.
    fn extend(&mut self, x: u32, y: u32) -> bool {
        let start = self.defined.len();
        if !self.try_set(x, y) {
            return false;
        }
        let mut qi = start;
        while qi < self.defined.len() {
            let a = self.defined[qi];
            let fa = self.img[a as usize];
            let mut bi = 0;
            while bi < self.defined.len() {
                let b = self.defined[bi];
                let fb = self.img[b as usize];
                let ab = self.src.mul(a, b);
                if !self.try_set(ab, self.dst.mul(fa, fb)) {
                    return false;
                }
                let ba = self.src.mul(b, a);
                if !self.try_set(ba, self.dst.mul(fb, fa)) {
                    return false;
                }
                bi += 1;
            }
            qi += 1;
        }
        true
    }
}

/// A short generating sequence, chosen greedily to keep the automorphism
/// search branching low: prefer elements whose (order, class size) pair is
/// rare in the group.
pub fn generating_sequence(g: &FiniteGroup, cd: &ClassData) -> Vec<u32> {
    let d = g.order();
    let mut rarity = vec![0usize; d];
    for x in g.elements() {
        let xo = g.elem_order(x);
        let xs = cd.class_size(cd.class_of[x as usize]);
        rarity[x as usize] = g
            .elements()
            .filter(|&y| g.elem_order(y) == xo && cd.class_size(cd.class_of[y as usize]) == xs)
            .count();
    }
    let mut seq = Vec::new();
    let mut cl = g.closure(&seq);
    while cl.len() < d {
        let next = g
            .elements()
            .filter(|x| cl.binary_search(x).is_err())
            .min_by_key(|&x| (rarity[x as usize], x))
            .unwrap();
        seq.push(next);
        cl = g.closure(&seq);
    }
    seq
}

/// The complete automorphism group. Fails once more than `cap` automorphisms
/// have been found.
pub fn automorphism_group(g: &FiniteGroup, cd: &ClassData, cap: usize) -> Result<AutGroup> {
    let maps = match search_maps(g, g, true, Some(cap + 1)) {
        None => return Err(Error::AutGroupTooLarge { cap }),
        Some(m) => m,
    };
    let mut images: Vec<Vec<u32>> = maps;
    images.sort_unstable();
    let index: HashMap<Vec<u32>, usize> = images
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let class_perms: Vec<Vec<u32>> = images
        .iter()
        .map(|im| {
            cd.classes
                .iter()
                .map(|c| cd.class_of[im[c.rep as usize] as usize])
                .collect()
        })
        .collect();
    let elements: Vec<Automorphism> = images
        .into_iter()
        .map(|images| Automorphism { images })
        .collect();
    let mut autg = AutGroup {
        elements,
        gens: Vec::new(),
        class_perms,
        index,
    };
    let all: Vec<usize> = (0..autg.order()).collect();
    autg.gens = autg.reduce_to_generators(&all);
    debug_assert!(autg.elements[0].is_identity());
    Ok(autg)
}
