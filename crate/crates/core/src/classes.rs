//! Conjugacy classes with a fixed total order: ascending size, then
//! ascending element order, then ascending minimal member id. Larger classes
//! therefore sit at the end of every nondecreasing class vector, which is
//! what the fiber iteration relies on.

use crate::group::FiniteGroup;

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: u32,
    /// Ascending member ids.
    pub members: Vec<u32>,
    pub size: usize,
    pub elem_order: u32,
}

#[derive(Debug, Clone)]
pub struct ClassData {
    pub classes: Vec<ConjClass>,
    /// Class id per element id.
    pub class_of: Vec<u32>,
    /// Class id of the inverses of each class.
    pub inverse_class: Vec<u32>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_order(&self, c: u32) -> u32 {
        self.classes[c as usize].elem_order
    }

    pub fn class_size(&self, c: u32) -> usize {
        self.classes[c as usize].size
    }

    /// Class ids grouped by element order, ascending within each group.
    pub fn classes_of_order(&self, m: u32) -> Vec<u32> {
        (0..self.classes.len() as u32)
            .filter(|&c| self.class_order(c) == m)
            .collect()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ClassData {
    let d = g.order();
    let mut assigned = vec![false; d];
    let mut classes: Vec<ConjClass> = Vec::new();
    for x in g.elements() {
        if assigned[x as usize] {
            continue;
        }
        let mut members = Vec::new();
        for h in g.elements() {
            let y = g.conjugate(h, x);
            if !assigned[y as usize] {
                assigned[y as usize] = true;
                members.push(y);
            }
        }
        members.sort_unstable();
        classes.push(ConjClass {
            rep: members[0],
            size: members.len(),
            elem_order: g.elem_order(members[0]),
            members,
        });
    }
    classes.sort_by_key(|c| (c.size, c.elem_order, c.members[0]));
    let mut class_of = vec![0u32; d];
    for (id, c) in classes.iter().enumerate() {
        for &m in &c.members {
            class_of[m as usize] = id as u32;
        }
    }
    let inverse_class = classes
        .iter()
        .map(|c| class_of[g.inv(c.rep) as usize])
        .collect();
    ClassData {
        classes,
        class_of,
        inverse_class,
    }
}
